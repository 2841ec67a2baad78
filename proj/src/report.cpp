#include "opsplit/report.hpp"

#include <atomic>

namespace opsplit {

namespace {
std::atomic<std::size_t> g_cap{100};

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}
}  // namespace

std::size_t violation_cap() { return g_cap.load(); }
void set_violation_cap(std::size_t cap) { g_cap.store(cap == 0 ? 1 : cap); }

void Report::absorb(const Report& other, std::size_t cap) {
  ok = ok && other.ok;
  total += other.total;
  for (const auto& v : other.violations) {
    if (violations.size() >= cap) break;
    violations.push_back(v);
  }
}

Report prefixed(const Report& r, std::string_view prefix) {
  Report out = r;
  for (auto& v : out.violations) v.identity = std::string(prefix) + ":" + v.identity;
  return out;
}

void ReportBuilder::record(std::string_view identity, std::initializer_list<std::size_t> basis, Vec residual) {
  report_.ok = false;
  ++report_.total;
  if (report_.violations.size() < cap_) {
    report_.violations.push_back(Violation{std::string(identity), std::vector<std::size_t>(basis), std::move(residual)});
  }
}

void ReportBuilder::expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis,
                                const Vec& residual) {
  if (!is_zero(residual)) record(identity, basis, residual);
}

void ReportBuilder::expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis,
                                const Scalar& residual) {
  if (!is_zero(residual)) record(identity, basis, Vec{residual});
}

void ReportBuilder::expect_zero(std::string_view identity, std::initializer_list<std::size_t> basis,
                                const Matrix& residual) {
  if (!residual.is_zero()) record(identity, basis, flatten(residual));
}

void ReportBuilder::expect_equal(std::string_view identity, std::initializer_list<std::size_t> basis,
                                 const Vec& lhs, const Vec& rhs) {
  expect_zero(identity, basis, lhs - rhs);
}

void ReportBuilder::expect_equal(std::string_view identity, std::initializer_list<std::size_t> basis,
                                 const Matrix& lhs, const Matrix& rhs) {
  if (!(lhs == rhs)) record(identity, basis, flatten(lhs - rhs));
}

void ReportBuilder::fail(std::string_view identity, std::initializer_list<std::size_t> basis) {
  record(identity, basis, Vec{});
}

void ReportBuilder::absorb(const Report& other) { report_.absorb(other, cap_); }

}  // namespace opsplit
