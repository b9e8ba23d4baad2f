#include "sectoria/errors.hpp"

namespace sectoria {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SingularLeadingBlock: return "SingularLeadingBlock";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotAccretive: return "NotAccretive";
    case ErrorKind::NotAccretiveDissipative: return "NotAccretiveDissipative";
    case ErrorKind::NotSectorial: return "NotSectorial";
    case ErrorKind::OmegaPrimeEmpty: return "OmegaPrimeEmpty";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sectoria
