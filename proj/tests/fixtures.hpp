#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ahp/core.hpp"

namespace ahp::fixtures {

// w = (2, 1, 0.5)
inline const RawMatrix kConsistent3 = {
    {1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}};

// a_12 a_23 = 2 but a_13 = 4: one inconsistent triad.
inline const RawMatrix kRunning3 = {
    {1, 2, 4}, {0.5, 1, 1}, {0.25, 1, 1}};

// kRunning3 extended by a fourth alternative chosen so that triads {1,2,4}
// and {1,3,4} are consistent; {2,3,4} then inherits the inconsistency.
inline const RawMatrix kRunning4 = {
    {1, 2, 4, 4}, {0.5, 1, 1, 2}, {0.25, 1, 1, 1}, {0.25, 0.5, 1, 1}};

// Values below were computed outside the library: lambda by bisection on
// lambda^3 - 3 lambda^2 - 0.5, GCI as 3 (ln 2 / 3)^2, rho as (log_9 2 / 2)^2.
inline constexpr double kRunningLambda = 3.0536215758789726;
inline constexpr double kRunningCi = 0.026810787939486325;
inline constexpr double kRunningGci = 0.16015100463940046;
inline constexpr double kRunningRho = 0.02487952212135875;
inline constexpr double kRhoGciConstant = 0.1553503968169168;

inline std::vector<std::size_t> random_permutation(std::size_t n,
                                                   std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// B_ij = A_{p(i) p(j)}.
inline RawMatrix permuted(const RawMatrix& a,
                          const std::vector<std::size_t>& p) {
  RawMatrix out(a.size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[p[i]][p[j]];
  return out;
}

inline RawMatrix transposed(const RawMatrix& a) {
  RawMatrix out(a.size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[j][i];
  return out;
}

}  // namespace ahp::fixtures
