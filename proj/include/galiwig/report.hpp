#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace galiwig {

/// One verification record. Asserted checks gate the run's exit status;
/// info records (asserted = false) are emitted for inspection only.
struct CheckResult {
  std::string suite;
  std::string name;
  long long samples = 0;
  double max_err = 0.0;
  double tol = 0.0;
  bool pass = true;
  bool asserted = true;
  std::string notes;
};

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Key/value line, one record per line.
inline std::string format_line(const CheckResult& r) {
  std::string line = "suite=" + r.suite + " check=" + r.name;
  if (r.samples > 0) line += " samples=" + std::to_string(r.samples);
  line += " max_err=" + format_double(r.max_err);
  if (r.tol > 0.0) line += " tol=" + format_double(r.tol);
  line += " status=";
  line += r.asserted ? (r.pass ? "PASS" : "FAIL") : "INFO";
  if (!r.notes.empty()) line += " " + r.notes;
  return line;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (r.asserted && !r.pass) return false;
  return true;
}

}  // namespace galiwig
