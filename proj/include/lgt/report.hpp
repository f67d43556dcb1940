#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lgt {

/// One named residual with both norms and its pass tolerance. `measure`
/// names the norm the verdict uses ("linf", "l2", "ratio", ...). Rows whose
/// tolerance is negative are informational only and always pass.
struct ResidualRow {
  std::string name;
  double l2 = 0.0;
  double linf = 0.0;
  double tol = -1.0;
  bool pass = true;
  std::string note;
};

struct ResidualReport {
  std::string title;
  std::string chart;
  std::string theory;
  std::uint64_t seed = 0;
  std::vector<ResidualRow> rows;

  ResidualRow& add(std::string name, double l2, double linf, double tol,
                   bool pass, std::string note = "");
  /// Verdict row: pass iff value <= tol.
  ResidualRow& check(std::string name, double l2, double linf, double tol,
                     std::string note = "");
  /// Informational row, never fails.
  ResidualRow& info(std::string name, double l2, double linf,
                    std::string note = "");
  /// Verdict row for a ratio-style bound: pass iff lo <= value <= hi.
  ResidualRow& check_range(std::string name, double value, double lo, double hi,
                           std::string note = "");

  bool all_pass() const;
  void merge(const ResidualReport& other, const std::string& prefix = "");

  /// Flat key=value-style text table; stable byte-for-byte for equal content.
  std::string to_table() const;
  /// Structured JSON document (name, L2, Linf, tol, pass per row).
  std::string to_json() const;

  /// Writes <stem>.txt and <stem>.json under dir (created if needed).
  void write(const std::string& dir, const std::string& stem) const;
};

/// Shortest decimal digits that round-trip a double; deterministic across
/// runs, used by every report and CSV writer.
std::string format_double(double v);

}  // namespace lgt
