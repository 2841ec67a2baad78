#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "opsplit/linalg.hpp"

namespace opsplit {

// One failing instance of an identity: which identity, on which basis
// indices, and the nonzero residual (lhs - rhs).
struct Violation {
  std::string identity;
  std::vector<std::size_t> basis;
  Vec residual;
};

struct Report {
  bool ok = true;
  std::size_t total = 0;              // all failing instances seen
  std::vector<Violation> violations;  // the first `cap` of them

  explicit operator bool() const { return ok; }
  // Folds another report in; the stored sample stays within the larger cap.
  void absorb(const Report& other, std::size_t cap);
};

// Copy of `r` with every identity name prefixed by `prefix` + ":".
Report prefixed(const Report& r, std::string_view prefix);

// Process-wide default for how many violations a report keeps (default 100).
std::size_t violation_cap();
void set_violation_cap(std::size_t cap);

class ReportBuilder {
 public:
  explicit ReportBuilder(std::size_t cap = violation_cap()) : cap_(cap == 0 ? 1 : cap) {}

  void expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis, const Vec& residual);
  void expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis, const Scalar& residual);
  void expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis, const Matrix& residual);
  void expect_equal(std::string_view identity, std::initializer_list<std::size_t> basis, const Vec& lhs,
                    const Vec& rhs);
  void expect_equal(std::string_view identity, std::initializer_list<std::size_t> basis, const Matrix& lhs,
                    const Matrix& rhs);
  void fail(std::string_view identity, std::initializer_list<std::size_t> basis = {});
  void absorb(const Report& other);

  bool ok() const { return report_.ok; }
  Report finish() const { return report_; }

 private:
  void record(std::string_view identity, std::initializer_list<std::size_t> basis, Vec residual);
  std::size_t cap_;
  Report report_;
};

}  // namespace opsplit
