#include "ahp/error.hpp"

#include <fmt/format.h>

namespace ahp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::SaatyBoundViolation: return "SaatyBoundViolation";
    case ErrorCode::OutOfUnitInterval: return "OutOfUnitInterval";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::OrderTooSmallForTriads: return "OrderTooSmallForTriads";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), detail)),
      code_(code) {}

NoConvergenceError::NoConvergenceError(std::size_t iterations,
                                       double last_residual)
    : Error(ErrorCode::NoConvergence,
            fmt::format("power iteration did not converge after {} "
                        "iterations (last residual {:.3g})",
                        iterations, last_residual)),
      iterations_(iterations),
      last_residual_(last_residual) {}

}  // namespace ahp
