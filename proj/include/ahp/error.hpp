#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ahp {

enum class ErrorCode {
  NonSquare,
  OrderTooSmall,
  NonPositiveEntry,
  BadDiagonal,
  ReciprocityViolation,
  SaatyBoundViolation,
  OutOfUnitInterval,
  DomainViolation,
  NonPositiveWeight,
  OrderTooSmallForTriads,
  IndexOutOfRange,
  InvalidArgument,
  NoConvergence,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every contract violation raised by the library.
/// `code()` identifies the violated invariant; `what()` carries detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when power iteration exhausts its iteration budget.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::size_t iterations, double last_residual);

  std::size_t iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

 private:
  std::size_t iterations_;
  double last_residual_;
};

}  // namespace ahp
