#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ahp/core.hpp"

namespace ahp {

enum class Scheme {
  /// Upper-triangle entries drawn uniformly from {1/9, ..., 1/2, 1, 2, ..., 9}.
  DiscreteSaaty,
  /// r_ij uniform on [0, 1), mapped through a_ij = 9^(2 (r_ij - 0.5)).
  ContinuousLogUniform,
};

std::string_view to_string(Scheme scheme);
/// Accepts "discrete" and "continuous".
std::optional<Scheme> parse_scheme(std::string_view text);

/// Identifier of the pseudo-random algorithm behind every generated stream:
/// std::mt19937_64, uniform reals as (x >> 11) * 2^-53, uniform integers by
/// rejection sampling on the raw 64-bit output.
inline constexpr std::string_view kPrngAlgorithm = "mt19937_64";

struct GeneratorConfig {
  std::size_t n;
  Scheme scheme;
  std::uint64_t seed;
};

/// Seeded generator producing a sequence of random matrices of one order.
class MatrixGenerator {
 public:
  /// Throws OrderTooSmallForTriads when cfg.n < 3.
  explicit MatrixGenerator(const GeneratorConfig& cfg);

  PairwiseComparisonMatrix next();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on {0, ..., bound - 1}.
  std::uint64_t uniform_index(std::uint64_t bound);

  const GeneratorConfig& config() const noexcept { return cfg_; }

 private:
  GeneratorConfig cfg_;
  std::mt19937_64 engine_;
};

/// First matrix of the stream seeded by `cfg`.
PairwiseComparisonMatrix generate_random_pcm(const GeneratorConfig& cfg);

struct LineFit {
  double slope;
  double max_abs_residual;
};

/// Least-squares slope through the origin, sum(xy) / sum(x^2). Returns
/// nullopt (degenerate fit) when every x is zero. Throws InvalidArgument on
/// an empty point set.
std::optional<LineFit> fit_line_through_origin(
    std::span<const std::pair<double, double>> points);

struct ScatterRow {
  double ci_star;
  double c3;
  double gci;
  double rho;
};

struct ExperimentResult {
  GeneratorConfig config;
  std::size_t count;
  std::string_view prng;
  std::vector<ScatterRow> rows;
  /// (CI*, c3) points, fitted against slope -C(n, 3).
  std::optional<LineFit> fit_p1;
  /// (GCI, rho) points, fitted against slope 3 / (4 ln^2 9).
  std::optional<LineFit> fit_p2;
  double expected_slope_p1;
  double expected_slope_p2;
  double max_identity_gap_p1;
  double max_identity_gap_p2;
  /// Largest |c3| and |rho| seen; scales the residual gates.
  double max_abs_y_p1;
  double max_abs_y_p2;
  bool all_identities_pass;

  std::vector<std::pair<double, double>> points_p1() const;
  std::vector<std::pair<double, double>> points_p2() const;
};

inline constexpr double kSlopeRelTol = 1e-6;
inline constexpr double kResidualTol = 1e-9;

struct GateStatus {
  bool slope_p1;
  bool slope_p2;
  bool residual_p1;
  bool residual_p2;
  bool identities;

  bool all() const {
    return slope_p1 && slope_p2 && residual_p1 && residual_p2 && identities;
  }
};

/// Evaluates slope, collinearity and identity gates. A degenerate fit (all
/// points at the origin) passes the slope and residual gates trivially.
GateStatus evaluate_gates(const ExperimentResult& result);

/// Indices, fits and identity gaps for a batch of Saaty-bounded matrices
/// of one order n >= 3, in input order.
ExperimentResult analyze_batch(std::span<const PairwiseComparisonMatrix> batch,
                               const GeneratorConfig& config);

/// Generates `count` matrices from one seeded stream and analyzes them.
/// Throws InvalidArgument when count < 2.
ExperimentResult run_experiment(std::size_t count, const GeneratorConfig& cfg);

}  // namespace ahp
