#include "ahp/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace ahp {
namespace {

const double kLn9 = std::log(9.0);

}  // namespace

ReciprocalRelation pcm_to_reciprocal(const PairwiseComparisonMatrix& m) {
  if (!m.saaty_bounded()) {
    throw Error(ErrorCode::DomainViolation,
                "transform to a reciprocal relation needs entries in [1/9, 9]");
  }
  const std::size_t n = m.n();
  RawMatrix rows(n, std::vector<double>(n, 0.5));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = 0.5 * (1.0 + std::log(m(i, j)) / kLn9);
      rows[i][j] = std::clamp(r, 0.0, 1.0);
      rows[j][i] = 1.0 - rows[i][j];
    }
  }
  return validate_reciprocal(rows);
}

PairwiseComparisonMatrix reciprocal_to_pcm(const ReciprocalRelation& r) {
  const std::size_t n = r.n();
  RawMatrix rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rows[i][j] = std::pow(9.0, 2.0 * (r(i, j) - 0.5));
      rows[j][i] = 1.0 / rows[i][j];
    }
  }
  return validate_pcm(rows, /*require_saaty_bounds=*/true);
}

WeightVector geometric_mean_weights(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.n();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(m(i, j));
    w[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return WeightVector(std::move(w));
}

PairwiseComparisonMatrix pcm_from_weights(const WeightVector& w) {
  const std::size_t n = w.size();
  RawMatrix rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rows[i][j] = w[i] / w[j];
      rows[j][i] = 1.0 / rows[i][j];
    }
  }
  return validate_pcm(rows);
}

}  // namespace ahp
