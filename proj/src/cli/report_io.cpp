#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "opsplit/cli.hpp"
#include "opsplit/error.hpp"
#include "opsplit/scalar.hpp"

namespace opsplit::cli {

using nlohmann::json;

namespace {

std::vector<std::string> residual_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(format_scalar(v[i]));
  return out;
}

auto sort_key(const Violation& v) { return std::make_tuple(v.identity, v.basis, residual_strings(v.residual)); }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

CheckReport canonical(CheckReport r) {
  std::stable_sort(r.report.violations.begin(), r.report.violations.end(),
                   [](const Violation& a, const Violation& b) { return sort_key(a) < sort_key(b); });
  return r;
}

std::string emit_report(const CheckReport& raw, ReportFormat format) {
  const CheckReport r = canonical(raw);
  if (format == ReportFormat::Json) {
    json doc = json::object();
    doc["kind"] = r.kind;
    doc["ok"] = r.report.ok;
    doc["total"] = r.report.total;
    doc["elapsed_ms"] = r.elapsed_ms;
    json vs = json::array();
    for (const Violation& v : r.report.violations)
      vs.push_back({{"identity", v.identity}, {"basis", v.basis}, {"residual", residual_strings(v.residual)}});
    doc["violations"] = vs;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (r.report.ok) {
    os << "OK\n" << "time: " << format_ms(r.elapsed_ms) << " ms\n";
    return os.str();
  }
  os << "FAIL " << r.kind << ": " << r.report.total << " violation(s)";
  if (r.report.violations.size() < r.report.total) os << ", first " << r.report.violations.size() << " shown";
  os << "\n";
  for (const Violation& v : r.report.violations) {
    std::vector<std::string> b;
    for (std::size_t i : v.basis) b.push_back(std::to_string(i));
    os << "  " << v.identity << " [" << join(b, ", ") << "] residual (" << join(residual_strings(v.residual), ", ")
       << ")\n";
  }
  os << "time: " << format_ms(r.elapsed_ms) << " ms\n";
  return os.str();
}

CheckReport parse_report_json(std::string_view text) {
  try {
    const json doc = json::parse(text.begin(), text.end());
    CheckReport r;
    r.kind = doc.at("kind").get<std::string>();
    r.report.ok = doc.at("ok").get<bool>();
    r.report.total = doc.at("total").get<std::size_t>();
    r.elapsed_ms = doc.at("elapsed_ms").get<double>();
    for (const json& v : doc.at("violations")) {
      Violation out;
      out.identity = v.at("identity").get<std::string>();
      out.basis = v.at("basis").get<std::vector<std::size_t>>();
      const auto res = v.at("residual").get<std::vector<std::string>>();
      out.residual = Vec(res.size());
      for (std::size_t i = 0; i < res.size(); ++i) out.residual[i] = parse_scalar(res[i]);
      r.report.violations.push_back(std::move(out));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

bool same_report(const CheckReport& a, const CheckReport& b) {
  if (a.kind != b.kind || a.report.ok != b.report.ok || a.report.total != b.report.total ||
      a.elapsed_ms != b.elapsed_ms || a.report.violations.size() != b.report.violations.size())
    return false;
  for (std::size_t i = 0; i < a.report.violations.size(); ++i) {
    const Violation& x = a.report.violations[i];
    const Violation& y = b.report.violations[i];
    if (x.identity != y.identity || x.basis != y.basis || !(x.residual == y.residual)) return false;
  }
  return true;
}

}  // namespace opsplit::cli
