#include "emdstego/error.hpp"

namespace emdstego {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::UnsupportedMaxval: return "UnsupportedMaxval";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::LengthOverrun: return "LengthOverrun";
    case Errc::GroupSizeMismatch: return "GroupSizeMismatch";
    case Errc::UnknownScheme: return "UnknownScheme";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::InfeasibleScheme: return "InfeasibleScheme";
    case Errc::SolverInfeasible: return "SolverInfeasible";
    case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
    case Errc::NoCaseMatches: return "NoCaseMatches";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeMSE: return "NegativeMSE";
    case Errc::ZeroRho: return "ZeroRho";
    case Errc::ZeroMSE: return "ZeroMSE";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::QueryTooLarge: return "QueryTooLarge";
    case Errc::DegenerateQuery: return "DegenerateQuery";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InvalidDomain: return "InvalidDomain";
  }
  return "Unknown";
}

}  // namespace emdstego
