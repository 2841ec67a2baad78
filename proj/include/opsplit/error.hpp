#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opsplit {

enum class ErrorCode {
  DimMismatch,
  Singular,
  UnknownMult,
  NotAnOperator,
  RelationViolated,
  SingularTypeMatrix,
  DegenerateForm,
  NotInvariant,
  NotLeibniz,
  NotSymmetric,
  NotLeftInvariant,
  InvalidSdpl,
  NotLie,
  NotAveraging,
  NotLieRep,
  CapExceeded,
  NotCoalgebra,
  NotBialgebra,
  NotAvgLieBialgebra,
  BadShape,
  ParseError,
  IndexOutOfRange,
  DuplicateEntry,
  Usage,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries a code so callers (and the CLI
// exit status) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opsplit
