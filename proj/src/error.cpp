#include "opsplit/error.hpp"

namespace opsplit {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::UnknownMult: return "UnknownMult";
    case ErrorCode::NotAnOperator: return "NotAnOperator";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::SingularTypeMatrix: return "SingularTypeMatrix";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotLeibniz: return "NotLeibniz";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotLeftInvariant: return "NotLeftInvariant";
    case ErrorCode::InvalidSdpl: return "InvalidSdpl";
    case ErrorCode::NotLie: return "NotLie";
    case ErrorCode::NotAveraging: return "NotAveraging";
    case ErrorCode::NotLieRep: return "NotLieRep";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotCoalgebra: return "NotCoalgebra";
    case ErrorCode::NotBialgebra: return "NotBialgebra";
    case ErrorCode::NotAvgLieBialgebra: return "NotAvgLieBialgebra";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace opsplit
