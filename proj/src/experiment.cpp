#include "ahp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ahp/indices.hpp"
#include "ahp/transforms.hpp"

namespace ahp {
namespace {

constexpr std::uint64_t kSaatyScaleSize = 17;

// Index 0..16 onto 1/9, 1/8, ..., 1/2, 1, 2, ..., 9.
double saaty_scale_value(std::uint64_t index) {
  if (index < 8) return 1.0 / static_cast<double>(9 - index);
  return static_cast<double>(index - 7);
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::DiscreteSaaty: return "discrete";
    case Scheme::ContinuousLogUniform: return "continuous";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  if (text == "discrete") return Scheme::DiscreteSaaty;
  if (text == "continuous") return Scheme::ContinuousLogUniform;
  return std::nullopt;
}

MatrixGenerator::MatrixGenerator(const GeneratorConfig& cfg)
    : cfg_(cfg), engine_(cfg.seed) {
  if (cfg.n < 3) {
    throw Error(ErrorCode::OrderTooSmallForTriads,
                fmt::format("generator needs n >= 3, got n = {}", cfg.n));
  }
}

double MatrixGenerator::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t MatrixGenerator::uniform_index(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

PairwiseComparisonMatrix MatrixGenerator::next() {
  const std::size_t n = cfg_.n;
  RawMatrix rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = 1.0;
      switch (cfg_.scheme) {
        case Scheme::DiscreteSaaty:
          a = saaty_scale_value(uniform_index(kSaatyScaleSize));
          break;
        case Scheme::ContinuousLogUniform:
          a = std::pow(9.0, 2.0 * (uniform01() - 0.5));
          break;
      }
      rows[i][j] = a;
      rows[j][i] = 1.0 / a;
    }
  }
  return validate_pcm(rows, /*require_saaty_bounds=*/true);
}

PairwiseComparisonMatrix generate_random_pcm(const GeneratorConfig& cfg) {
  return MatrixGenerator(cfg).next();
}

std::optional<LineFit> fit_line_through_origin(
    std::span<const std::pair<double, double>> points) {
  if (points.empty()) {
    throw Error(ErrorCode::InvalidArgument, "line fit needs at least one point");
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += x * x;
    sxy += x * y;
  }
  if (sxx == 0.0) return std::nullopt;

  LineFit fit{sxy / sxx, 0.0};
  for (const auto& [x, y] : points) {
    fit.max_abs_residual =
        std::max(fit.max_abs_residual, std::abs(y - fit.slope * x));
  }
  return fit;
}

std::vector<std::pair<double, double>> ExperimentResult::points_p1() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.emplace_back(row.ci_star, row.c3);
  return out;
}

std::vector<std::pair<double, double>> ExperimentResult::points_p2() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.emplace_back(row.gci, row.rho);
  return out;
}

ExperimentResult analyze_batch(std::span<const PairwiseComparisonMatrix> batch,
                               const GeneratorConfig& config) {
  if (batch.empty()) {
    throw Error(ErrorCode::InvalidArgument, "batch is empty");
  }
  const std::size_t n = config.n;
  if (n < 3) {
    throw Error(ErrorCode::OrderTooSmallForTriads,
                fmt::format("experiment needs n >= 3, got n = {}", n));
  }

  ExperimentResult result{};
  result.config = config;
  result.count = batch.size();
  result.prng = kPrngAlgorithm;
  result.expected_slope_p1 = -static_cast<double>(binomial3(n));
  result.expected_slope_p2 = rho_gci_constant();
  result.all_identities_pass = true;
  result.rows.reserve(batch.size());

  for (std::size_t idx = 0; idx < batch.size(); ++idx) {
    const PairwiseComparisonMatrix& m = batch[idx];
    if (m.n() != n) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("matrix {} has order {}, batch order is {}",
                              idx, m.n(), n));
    }
    const ReciprocalRelation r = pcm_to_reciprocal(m);

    ScatterRow row{ci_star(m), c3_direct(m), gci(m), rho(r)};
    result.rows.push_back(row);

    const IdentityCheck p1 = verify_proposition_1(m);
    const IdentityCheck p2 = verify_proposition_2(r);
    result.max_identity_gap_p1 = std::max(result.max_identity_gap_p1, p1.abs_gap);
    result.max_identity_gap_p2 = std::max(result.max_identity_gap_p2, p2.abs_gap);
    result.all_identities_pass = result.all_identities_pass && p1.pass && p2.pass;
    result.max_abs_y_p1 = std::max(result.max_abs_y_p1, std::abs(row.c3));
    result.max_abs_y_p2 = std::max(result.max_abs_y_p2, std::abs(row.rho));
  }

  result.fit_p1 = fit_line_through_origin(result.points_p1());
  result.fit_p2 = fit_line_through_origin(result.points_p2());
  return result;
}

ExperimentResult run_experiment(std::size_t count, const GeneratorConfig& cfg) {
  if (count < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("experiment needs count >= 2, got {}", count));
  }
  MatrixGenerator gen(cfg);
  std::vector<PairwiseComparisonMatrix> batch;
  batch.reserve(count);
  for (std::size_t i = 0; i < count; ++i) batch.push_back(gen.next());
  return analyze_batch(batch, cfg);
}

GateStatus evaluate_gates(const ExperimentResult& result) {
  auto slope_ok = [](const std::optional<LineFit>& fit, double expected) {
    if (!fit) return true;
    return std::abs(fit->slope - expected) <= kSlopeRelTol * std::abs(expected);
  };
  auto residual_ok = [](const std::optional<LineFit>& fit, double max_y) {
    if (!fit) return true;
    return fit->max_abs_residual <= kResidualTol * std::max(1.0, max_y);
  };
  return GateStatus{
      slope_ok(result.fit_p1, result.expected_slope_p1),
      slope_ok(result.fit_p2, result.expected_slope_p2),
      residual_ok(result.fit_p1, result.max_abs_y_p1),
      residual_ok(result.fit_p2, result.max_abs_y_p2),
      result.all_identities_pass,
  };
}

}  // namespace ahp
