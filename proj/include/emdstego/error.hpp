#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace emdstego {

enum class Errc {
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedPayload,
  LengthOverrun,
  GroupSizeMismatch,
  UnknownScheme,
  InvalidParameter,
  InfeasibleScheme,
  SolverInfeasible,
  SymbolOutOfRange,
  NoCaseMatches,
  InvalidSplit,
  CapacityExceeded,
  DimensionMismatch,
  NegativeMSE,
  ZeroRho,
  ZeroMSE,
  InvalidQuery,
  QueryTooLarge,
  DegenerateQuery,
  EmptyRange,
  RankDeficient,
  InvalidDomain,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace emdstego
