#pragma once

#include "ahp/core.hpp"

namespace ahp {

/// r_ij = (1 + log_9 a_ij) / 2. Throws DomainViolation unless `m` is
/// Saaty-bounded. Round-off within kSaatyBoundRelTol of the scale ends is
/// clamped onto [0, 1].
ReciprocalRelation pcm_to_reciprocal(const PairwiseComparisonMatrix& m);

/// a_ij = 9^(2 (r_ij - 0.5)). The result is always Saaty-bounded.
PairwiseComparisonMatrix reciprocal_to_pcm(const ReciprocalRelation& r);

/// Row geometric means, computed as exp(mean_j ln a_ij). Not normalized.
WeightVector geometric_mean_weights(const PairwiseComparisonMatrix& m);

/// a_ij = w_i / w_j.
PairwiseComparisonMatrix pcm_from_weights(const WeightVector& w);

}  // namespace ahp
