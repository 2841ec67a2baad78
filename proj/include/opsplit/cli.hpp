#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opsplit/bialgebra.hpp"
#include "opsplit/linalg.hpp"
#include "opsplit/report.hpp"

namespace opsplit::cli {

// Sparse JSON container; missing entries are zero.
struct AlgebraFile {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<std::string, Tensor3> mults;    // [i, j, k, "p/q"]: e_i . e_j has p/q on e_k
  std::map<std::string, Matrix> forms;     // [i, j, "p/q"]
  std::map<std::string, Matrix> maps;      // [i, j, "p/q"]: entry (row i, column j)
  std::map<std::string, Comult> comults;   // [k, i, j, "p/q"]: delta(e_k) has p/q on e_i (x) e_j

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

// Throws Error(ParseError | IndexOutOfRange | DuplicateEntry).
AlgebraFile parse_algebra_file(std::string_view text);
std::string serialize_algebra_file(const AlgebraFile& f);
AlgebraFile read_algebra_file(const std::string& path);
void write_algebra_file(const AlgebraFile& f, const std::string& path);

struct CheckReport {
  std::string kind;
  Report report;
  double elapsed_ms = 0;
};

enum class ReportFormat { Text, Json };

// Violations come out sorted by (identity, basis, residual).
CheckReport canonical(CheckReport r);
std::string emit_report(const CheckReport& r, ReportFormat format);
CheckReport parse_report_json(std::string_view text);
bool same_report(const CheckReport& a, const CheckReport& b);

struct DemoResult {
  bool ok = true;
  std::vector<std::string> lines;
};
DemoResult run_demo_sl2();
std::string embedded_sl2_input();
std::string embedded_sl2_golden();

// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opsplit::cli
