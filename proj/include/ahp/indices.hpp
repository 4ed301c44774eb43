#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ahp/core.hpp"

namespace ahp {

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr std::size_t kDefaultEigenMaxIters = 100000;

/// Number of unordered triads {i, j, k} among n alternatives.
std::uint64_t binomial3(std::size_t n);

/// The exact ratio rho / GCI, 3 / (4 ln^2 9).
double rho_gci_constant();

struct EigenResult {
  double lambda_max;
  std::size_t iterations;
  /// max-norm of (A v - lambda v) over max-norm of v at the final iterate.
  double residual;
};

/// Perron eigenvalue by power iteration from the all-ones vector with
/// max-norm normalization. Stops once two successive estimates differ by at
/// most `tol` and the residual is at most `tol`; throws NoConvergenceError
/// when `max_iters` steps are not enough.
EigenResult dominant_eigenvalue(const PairwiseComparisonMatrix& m,
                                double tol = kDefaultEigenTol,
                                std::size_t max_iters = kDefaultEigenMaxIters);

/// Saaty's index (lambda_max - n) / (n - 1).
double saaty_ci(const PairwiseComparisonMatrix& m,
                double tol = kDefaultEigenTol);

/// Geometric consistency index over geometric-mean weights. Needs n >= 3.
double gci(const PairwiseComparisonMatrix& m);

/// x + 1/x - 2 with x = a_ik / (a_ij a_jk): the determinant of the 3x3
/// reciprocal submatrix on {i, j, k}. Zero iff the triad is consistent.
double triad_determinant(double a_ij, double a_ik, double a_jk);

/// Mean triad determinant over all i < j < k. Needs n >= 3.
double ci_star(const PairwiseComparisonMatrix& m);

/// Characteristic-polynomial coefficient c3 via the reciprocal-matrix
/// closed form: minus the sum of all triad determinants. Needs n >= 3.
double c3_direct(const PairwiseComparisonMatrix& m);

/// c3 from its definition, -(sum of all principal 3x3 minors), each minor
/// expanded by cofactors on the raw entries. Independent of c3_direct.
double c3_charpoly_oracle(const PairwiseComparisonMatrix& m);

/// t_ijk = r_ij - r_ik - r_kj + 0.5 (zero-based indices).
double triad_deviation(const ReciprocalRelation& r, std::size_t i,
                       std::size_t j, std::size_t k);

/// Mean squared triad deviation over all i < j < k. Needs n >= 3.
double rho(const ReciprocalRelation& r);

struct IndexReport {
  std::size_t n;
  double lambda_max;
  std::size_t eigen_iterations;
  double ci;
  // Triad-based indices exist only for n >= 3; rho additionally needs a
  // Saaty-bounded matrix.
  std::optional<double> gci;
  std::optional<double> ci_star;
  std::optional<double> c3;
  std::optional<double> rho;
};

IndexReport full_report(const PairwiseComparisonMatrix& m,
                        double eig_tol = kDefaultEigenTol);

/// Report for a reciprocal relation: indices of its multiplicative
/// counterpart, with rho evaluated on `r` itself.
IndexReport full_report(const ReciprocalRelation& r,
                        double eig_tol = kDefaultEigenTol);

struct IdentityCheck {
  double lhs;
  double rhs;
  double abs_gap;
  bool pass;
};

/// Relative-or-absolute gate used by both identity checks.
inline constexpr double kIdentityTol = 1e-9;

/// c3 against -C(n,3) CI*.
IdentityCheck verify_proposition_1(const PairwiseComparisonMatrix& m);

/// rho(r) against 3 / (4 ln^2 9) * GCI of the multiplicative counterpart.
IdentityCheck verify_proposition_2(const ReciprocalRelation& r);

}  // namespace ahp
