#pragma once

#include <Eigen/Dense>

namespace galiwig {

using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Row3 = Eigen::RowVector3d;
using Row4 = Eigen::RowVector4d;
using Row6 = Eigen::Matrix<double, 1, 6>;
using Vec3 = Eigen::Vector3d;
using MatX = Eigen::MatrixXd;

/// AB - BA for square matrices of equal size.
template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: dimension mismatch");
  return (a * b - b * a).eval();
}

template <typename Derived>
double rel_frobenius_error(const Eigen::MatrixBase<Derived>& got,
                           const Eigen::MatrixBase<Derived>& want) {
  const double scale = std::max(want.norm(), 1.0);
  return (got - want).norm() / scale;
}

inline double rel_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1.0);
}

}  // namespace galiwig
