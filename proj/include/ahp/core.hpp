#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ahp/error.hpp"

namespace ahp {

/// Row-major input as read from a file or built by hand. Not validated.
using RawMatrix = std::vector<std::vector<double>>;

/// Entries within this relative slack of 1/9 or 9 still count as lying on
/// the Saaty scale. Decimal files written with 15 significant digits store
/// 1/9 as 0.111111111111111, whose reciprocal is 9 + 9e-15.
inline constexpr double kSaatyBoundRelTol = 1e-12;

/// Positive reciprocal n x n matrix of multiplicative preference ratios.
///
/// Only the upper triangle of the input is trusted: the lower triangle is
/// stored as exact floating-point reciprocals and the diagonal as 1.
class PairwiseComparisonMatrix {
 public:
  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  /// Row-major view of all n*n entries.
  std::span<const double> entries() const noexcept { return entries_; }
  bool saaty_bounded() const noexcept { return saaty_bounded_; }

  RawMatrix to_rows() const;

  friend bool operator==(const PairwiseComparisonMatrix&,
                         const PairwiseComparisonMatrix&) = default;

 private:
  friend PairwiseComparisonMatrix validate_pcm(const RawMatrix&, bool);

  PairwiseComparisonMatrix(std::size_t n, std::vector<double> entries,
                           bool saaty_bounded)
      : n_(n), entries_(std::move(entries)), saaty_bounded_(saaty_bounded) {}

  std::size_t n_;
  std::vector<double> entries_;
  bool saaty_bounded_;
};

/// Additive reciprocal relation: r_ij in [0, 1], r_ii = 0.5, r_ij + r_ji = 1.
/// The lower triangle is stored as 1 - r_ij of the upper triangle.
class ReciprocalRelation {
 public:
  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  std::span<const double> entries() const noexcept { return entries_; }

  RawMatrix to_rows() const;

  friend bool operator==(const ReciprocalRelation&,
                         const ReciprocalRelation&) = default;

 private:
  friend ReciprocalRelation validate_reciprocal(const RawMatrix&);

  ReciprocalRelation(std::size_t n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_;
  std::vector<double> entries_;
};

/// Strictly positive priority weights. Not normalized.
class WeightVector {
 public:
  /// Throws NonPositiveWeight unless every component is positive and finite.
  explicit WeightVector(std::vector<double> w);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const noexcept { return w_[i]; }
  std::span<const double> values() const noexcept { return w_; }

 private:
  std::vector<double> w_;
};

/// Validates `raw` and returns it with the lower triangle rebuilt from the
/// upper one.
///
/// Rejects: NonSquare, OrderTooSmall (n < 2), NonPositiveEntry (also for
/// non-finite values), BadDiagonal (|a_ii - 1| > 1e-12),
/// ReciprocityViolation (|a_ij * a_ji - 1| > 1e-9) and, when
/// `require_saaty_bounds` is set, SaatyBoundViolation.
PairwiseComparisonMatrix validate_pcm(const RawMatrix& raw,
                                      bool require_saaty_bounds = false);

/// Rejects: NonSquare, OrderTooSmall, OutOfUnitInterval, BadDiagonal
/// (|r_ii - 0.5| > 1e-12), ReciprocityViolation (|r_ij + r_ji - 1| > 1e-9).
ReciprocalRelation validate_reciprocal(const RawMatrix& raw);

/// Multiplicative transitivity a_ik = a_ij * a_jk, checked relative to a_ik.
bool is_consistent_pcm(const PairwiseComparisonMatrix& m, double tol);

/// Additive transitivity r_ij - r_ik - r_kj + 0.5 = 0 for every triple.
bool is_additively_consistent(const ReciprocalRelation& r, double tol);

}  // namespace ahp
