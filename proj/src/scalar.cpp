#include "opsplit/scalar.hpp"

#include <cctype>

#include "opsplit/error.hpp"

namespace opsplit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "zero denominator: \"" + std::string(text) + "\"");
  }
  std::string clean(text.front() == '+' ? text.substr(1) : text);
  Scalar out;
  if (out.set_str(clean, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
  }
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& s) { return s.get_str(10); }

}  // namespace opsplit
