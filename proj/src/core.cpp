#include "ahp/core.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ahp {
namespace {

constexpr double kDiagonalTol = 1e-12;
constexpr double kReciprocityTol = 1e-9;

std::size_t checked_order(const RawMatrix& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NonSquare,
                  fmt::format("row {} has {} entries, expected {}", i + 1,
                              raw[i].size(), n));
    }
  }
  if (n < 2) {
    throw Error(ErrorCode::OrderTooSmall,
                fmt::format("matrix order must be at least 2, got {}", n));
  }
  return n;
}

RawMatrix rows_of(std::size_t n, std::span<const double> entries) {
  RawMatrix rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].assign(entries.begin() + i * n, entries.begin() + (i + 1) * n);
  }
  return rows;
}

bool within_saaty_scale(double a) {
  return a >= (1.0 / 9.0) * (1.0 - kSaatyBoundRelTol) &&
         a <= 9.0 * (1.0 + kSaatyBoundRelTol);
}

}  // namespace

RawMatrix PairwiseComparisonMatrix::to_rows() const {
  return rows_of(n_, entries_);
}

RawMatrix ReciprocalRelation::to_rows() const { return rows_of(n_, entries_); }

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) {
    throw Error(ErrorCode::NonPositiveWeight, "weight vector is empty");
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!(w_[i] > 0.0) || !std::isfinite(w_[i])) {
      throw Error(ErrorCode::NonPositiveWeight,
                  fmt::format("w[{}] = {} is not positive and finite", i + 1,
                              w_[i]));
    }
  }
}

PairwiseComparisonMatrix validate_pcm(const RawMatrix& raw,
                                      bool require_saaty_bounds) {
  const std::size_t n = checked_order(raw);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = raw[i][j];
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorCode::NonPositiveEntry,
                    fmt::format("a[{},{}] = {} is not positive and finite",
                                i + 1, j + 1, a));
      }
    }
  }

  std::vector<double> entries(n * n);
  bool bounded = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw[i][i] - 1.0) > kDiagonalTol) {
      throw Error(ErrorCode::BadDiagonal,
                  fmt::format("a[{0},{0}] = {1} but the diagonal must be 1",
                              i + 1, raw[i][i]));
    }
    entries[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = raw[i][j];
      const double lower = raw[j][i];
      if (std::abs(upper * lower - 1.0) > kReciprocityTol) {
        throw Error(ErrorCode::ReciprocityViolation,
                    fmt::format("a[{0},{1}] * a[{1},{0}] = {2} is not 1 "
                                "(reciprocity violated)",
                                i + 1, j + 1, upper * lower));
      }
      entries[i * n + j] = upper;
      entries[j * n + i] = 1.0 / upper;
      bounded = bounded && within_saaty_scale(upper) &&
                within_saaty_scale(1.0 / upper);
    }
  }

  if (require_saaty_bounds && !bounded) {
    throw Error(ErrorCode::SaatyBoundViolation,
                "entries must lie in the Saaty range [1/9, 9]");
  }
  return PairwiseComparisonMatrix(n, std::move(entries), bounded);
}

ReciprocalRelation validate_reciprocal(const RawMatrix& raw) {
  const std::size_t n = checked_order(raw);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r = raw[i][j];
      if (!(r >= 0.0 && r <= 1.0)) {
        throw Error(ErrorCode::OutOfUnitInterval,
                    fmt::format("r[{},{}] = {} is outside [0, 1]", i + 1,
                                j + 1, r));
      }
    }
  }

  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw[i][i] - 0.5) > kDiagonalTol) {
      throw Error(ErrorCode::BadDiagonal,
                  fmt::format("r[{0},{0}] = {1} but the diagonal must be 0.5",
                              i + 1, raw[i][i]));
    }
    entries[i * n + i] = 0.5;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = raw[i][j];
      const double lower = raw[j][i];
      if (std::abs(upper + lower - 1.0) > kReciprocityTol) {
        throw Error(ErrorCode::ReciprocityViolation,
                    fmt::format("r[{0},{1}] + r[{1},{0}] = {2} is not 1 "
                                "(reciprocity violated)",
                                i + 1, j + 1, upper + lower));
      }
      entries[i * n + j] = upper;
      entries[j * n + i] = 1.0 - upper;
    }
  }
  return ReciprocalRelation(n, std::move(entries));
}

bool is_consistent_pcm(const PairwiseComparisonMatrix& m, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(m(i, k) - m(i, j) * m(j, k)) > tol * m(i, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_additively_consistent(const ReciprocalRelation& r, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  const std::size_t n = r.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(r(i, j) - r(i, k) - r(k, j) + 0.5) > tol) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ahp
