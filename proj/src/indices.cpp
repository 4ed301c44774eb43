#include "ahp/indices.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ahp/transforms.hpp"

namespace ahp {
namespace {

void require_triads(std::size_t n, const char* what) {
  if (n < 3) {
    throw Error(ErrorCode::OrderTooSmallForTriads,
                fmt::format("{} needs n >= 3, got n = {}", what, n));
  }
}

double max_norm(const std::vector<double>& v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

double det3(double a00, double a01, double a02, double a10, double a11,
            double a12, double a20, double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

IndexReport multiplicative_report(const PairwiseComparisonMatrix& m,
                                  double eig_tol) {
  const EigenResult eig = dominant_eigenvalue(m, eig_tol);
  const double n = static_cast<double>(m.n());

  IndexReport report{};
  report.n = m.n();
  report.lambda_max = eig.lambda_max;
  report.eigen_iterations = eig.iterations;
  report.ci = (eig.lambda_max - n) / (n - 1.0);
  if (m.n() >= 3) {
    report.gci = gci(m);
    report.ci_star = ci_star(m);
    report.c3 = c3_direct(m);
  }
  return report;
}

}  // namespace

std::uint64_t binomial3(std::size_t n) {
  if (n < 3) return 0;
  const std::uint64_t k = n;
  return k * (k - 1) * (k - 2) / 6;
}

double rho_gci_constant() {
  const double ln9 = std::log(9.0);
  return 3.0 / (4.0 * ln9 * ln9);
}

EigenResult dominant_eigenvalue(const PairwiseComparisonMatrix& m, double tol,
                                std::size_t max_iters) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "eigenvalue tolerance must be > 0");
  }
  if (max_iters < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
  }

  const std::size_t n = m.n();
  std::vector<double> v(n, 1.0);
  std::vector<double> y(n);
  double previous = 0.0;
  double residual = 0.0;

  for (std::size_t iter = 1; iter <= max_iters; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
      y[i] = s;
    }
    const double norm_v = max_norm(v);
    const double norm_y = max_norm(y);
    const double lambda = norm_y / norm_v;

    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - lambda * v[i]));
    }
    residual /= norm_v;

    if (iter > 1 && std::abs(lambda - previous) <= tol && residual <= tol) {
      return EigenResult{lambda, iter, residual};
    }
    previous = lambda;
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / norm_y;
  }
  throw NoConvergenceError(max_iters, residual);
}

double saaty_ci(const PairwiseComparisonMatrix& m, double tol) {
  const double n = static_cast<double>(m.n());
  return (dominant_eigenvalue(m, tol).lambda_max - n) / (n - 1.0);
}

double gci(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.n();
  require_triads(n, "GCI");

  const WeightVector w = geometric_mean_weights(m);
  std::vector<double> log_w(n);
  for (std::size_t i = 0; i < n; ++i) log_w[i] = std::log(w[i]);

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // ln e_ij with e_ij = a_ij w_j / w_i
      const double log_e = std::log(m(i, j)) + log_w[j] - log_w[i];
      sum += log_e * log_e;
    }
  }
  const double nd = static_cast<double>(n);
  return 2.0 * sum / ((nd - 1.0) * (nd - 2.0));
}

double triad_determinant(double a_ij, double a_ik, double a_jk) {
  if (!(a_ij > 0.0 && a_ik > 0.0 && a_jk > 0.0)) {
    throw Error(ErrorCode::NonPositiveEntry,
                "triad entries must be strictly positive");
  }
  const double x = a_ik / (a_ij * a_jk);
  return x + 1.0 / x - 2.0;
}

namespace {

double triad_determinant_sum(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.n();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        sum += triad_determinant(m(i, j), m(i, k), m(j, k));
      }
    }
  }
  return sum;
}

}  // namespace

double ci_star(const PairwiseComparisonMatrix& m) {
  require_triads(m.n(), "CI*");
  return triad_determinant_sum(m) / static_cast<double>(binomial3(m.n()));
}

double c3_direct(const PairwiseComparisonMatrix& m) {
  require_triads(m.n(), "c3");
  return -triad_determinant_sum(m);
}

double c3_charpoly_oracle(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.n();
  require_triads(n, "c3");
  double minors = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        minors += det3(m(i, i), m(i, j), m(i, k),  //
                       m(j, i), m(j, j), m(j, k),  //
                       m(k, i), m(k, j), m(k, k));
      }
    }
  }
  return -minors;
}

double triad_deviation(const ReciprocalRelation& r, std::size_t i,
                       std::size_t j, std::size_t k) {
  const std::size_t n = r.n();
  if (i >= n || j >= n || k >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                fmt::format("triple ({}, {}, {}) out of range for n = {}", i,
                            j, k, n));
  }
  return r(i, j) - r(i, k) - r(k, j) + 0.5;
}

double rho(const ReciprocalRelation& r) {
  const std::size_t n = r.n();
  require_triads(n, "rho");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double t = r(i, j) - r(i, k) - r(k, j) + 0.5;
        sum += t * t;
      }
    }
  }
  return sum / static_cast<double>(binomial3(n));
}

IndexReport full_report(const PairwiseComparisonMatrix& m, double eig_tol) {
  IndexReport report = multiplicative_report(m, eig_tol);
  if (m.n() >= 3 && m.saaty_bounded()) {
    report.rho = rho(pcm_to_reciprocal(m));
  }
  return report;
}

IndexReport full_report(const ReciprocalRelation& r, double eig_tol) {
  IndexReport report = multiplicative_report(reciprocal_to_pcm(r), eig_tol);
  if (r.n() >= 3) report.rho = rho(r);
  return report;
}

IdentityCheck verify_proposition_1(const PairwiseComparisonMatrix& m) {
  require_triads(m.n(), "c3 / CI* identity check");
  IdentityCheck out{};
  out.lhs = c3_direct(m);
  out.rhs = -static_cast<double>(binomial3(m.n())) * ci_star(m);
  out.abs_gap = std::abs(out.lhs - out.rhs);
  out.pass = out.abs_gap <= kIdentityTol * std::max(1.0, std::abs(out.lhs));
  return out;
}

IdentityCheck verify_proposition_2(const ReciprocalRelation& r) {
  require_triads(r.n(), "rho / GCI identity check");
  IdentityCheck out{};
  out.lhs = rho(r);
  out.rhs = rho_gci_constant() * gci(reciprocal_to_pcm(r));
  out.abs_gap = std::abs(out.lhs - out.rhs);
  out.pass = out.abs_gap <= kIdentityTol * std::max(1.0, out.lhs);
  return out;
}

}  // namespace ahp
