// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "ahp/cli.hpp"
#include "ahp/experiment.hpp"
#include "ahp/indices.hpp"
#include "ahp/transforms.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace ahp;

namespace {

constexpr std::size_t kPerOrder = 1000;
constexpr std::size_t kMinOrder = 3;
constexpr std::size_t kMaxOrder = 8;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::string detail;
};

/// 1000 matrices per order 3..8 under both generation schemes.
std::vector<PairwiseComparisonMatrix> random_sample() {
  std::vector<PairwiseComparisonMatrix> sample;
  for (std::size_t n = kMinOrder; n <= kMaxOrder; ++n) {
    for (auto scheme : {Scheme::DiscreteSaaty, Scheme::ContinuousLogUniform}) {
      const std::uint64_t seed =
          0xA11CE000ULL + 16 * n + static_cast<std::uint64_t>(scheme);
      MatrixGenerator gen({n, scheme, seed});
      for (std::size_t i = 0; i < kPerOrder; ++i) sample.push_back(gen.next());
    }
  }
  return sample;
}

double gate(double scale) { return 1e-9 * std::max(1.0, scale); }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ahp-consistency");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Criterion c1_proposition_1(const std::vector<PairwiseComparisonMatrix>& sample,
                           std::chrono::steady_clock::time_point started) {
  Criterion c{1, "c3 = -C(n,3) CI* on every random matrix"};
  double worst = 0.0;
  std::size_t failures = 0;
  for (const auto& m : sample) {
    const double c3 = c3_direct(m);
    const double gap =
        std::abs(c3 + static_cast<double>(binomial3(m.n())) * ci_star(m));
    worst = std::max(worst, gap / std::max(1.0, std::abs(c3)));
    if (gap > gate(std::abs(c3))) ++failures;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.pass = failures == 0 && seconds < 10.0;
  c.detail = fmt::format("{} matrices, {} failures, worst scaled gap {:.3g}, "
                         "generation+check {:.3f}s",
                         sample.size(), failures, worst, seconds);
  return c;
}

Criterion c2_proposition_2(const std::vector<PairwiseComparisonMatrix>& sample) {
  Criterion c{2, "rho = 3/(4 ln^2 9) GCI on every random matrix"};
  const double ln9 = std::log(9.0);
  const double k = 3.0 / (4.0 * ln9 * ln9);
  double worst = 0.0;
  std::size_t failures = 0;
  for (const auto& m : sample) {
    const double r = rho(pcm_to_reciprocal(m));
    const double gap = std::abs(r - k * gci(m));
    worst = std::max(worst, gap / std::max(1.0, r));
    if (gap > gate(r)) ++failures;
  }
  c.pass = failures == 0;
  c.detail = fmt::format("constant {:.17g}, {} failures, worst scaled gap {:.3g}",
                         k, failures, worst);
  return c;
}

Criterion c3_scatter_line(const fs::path& dir) {
  Criterion c{3, "experiment n=5 count=1000: slopes and collinearity"};
  const fs::path out = dir / "scatter.csv";
  const CliRun run = run_cli({"experiment", "--n", "5", "--count", "1000",
                              "--seed", "42", "--output", out.string()});
  if (run.code != cli::kOk) {
    c.pass = false;
    c.detail = fmt::format("exit {} {}", run.code, run.err);
    return c;
  }
  const auto summary = nlohmann::json::parse(run.out);

  // Largest |y| per fit, read back from the emitted scatter.
  double max_c3 = 0.0;
  double max_rho = 0.0;
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);  // header
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    std::vector<double> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) {
      f.push_back(std::stod(cell));
    }
    max_c3 = std::max(max_c3, std::abs(f.at(2)));
    max_rho = std::max(max_rho, std::abs(f.at(4)));
    ++rows;
  }

  const double ln9 = std::log(9.0);
  const double k = 3.0 / (4.0 * ln9 * ln9);
  const auto& p1 = summary["fit_c3_vs_ci_star"];
  const auto& p2 = summary["fit_rho_vs_gci"];
  const double s1 = p1["slope"].get<double>();
  const double s2 = p2["slope"].get<double>();
  const double r1 = p1["max_abs_residual"].get<double>();
  const double r2 = p2["max_abs_residual"].get<double>();

  c.pass = rows == 1000 && std::abs(s1 + 10.0) <= 1e-6 * 10.0 &&
           std::abs(s2 - k) <= 1e-6 * k && r1 <= gate(max_c3) &&
           r2 <= gate(max_rho);
  c.detail = fmt::format(
      "slope_p1 {:.15g}, slope_p2 {:.15g} (expected {:.15g}), residuals "
      "{:.3g} / {:.3g}",
      s1, s2, k, r1, r2);
  return c;
}

Criterion c4_c3_oracle(const std::vector<PairwiseComparisonMatrix>& sample) {
  Criterion c{4, "c3 triple sum equals the principal-minor route"};
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& m : sample) {
    const double direct = c3_direct(m);
    const double gap = std::abs(direct - c3_charpoly_oracle(m));
    worst = std::max(worst, gap / std::max(1.0, std::abs(direct)));
    if (gap > gate(std::abs(direct))) ++failures;
  }
  c.pass = failures == 0;
  c.detail = fmt::format("{} failures, worst scaled gap {:.3g}", failures, worst);
  return c;
}

Criterion c5_consistency_zeroing() {
  Criterion c{5, "consistent matrices zero every index and lambda_max = n"};
  std::mt19937_64 rng(0xC0FFEE);
  // ln w uniform on [-ln 3, ln 3] keeps every ratio on the Saaty scale.
  std::uniform_real_distribution<double> log_w(-std::log(3.0), std::log(3.0));
  double worst = 0.0;
  for (std::size_t n = kMinOrder; n <= kMaxOrder; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> w(n);
      for (auto& x : w) x = std::exp(log_w(rng));
      const auto rep = full_report(pcm_from_weights(WeightVector(w)));
      if (!rep.rho) {
        c.pass = false;
        c.detail = "consistent matrix left the Saaty scale";
        return c;
      }
      for (double v : {rep.ci, *rep.gci, *rep.ci_star, *rep.c3, *rep.rho,
                       rep.lambda_max - static_cast<double>(n)}) {
        worst = std::max(worst, std::abs(v));
      }
    }
  }
  c.pass = worst <= 1e-9;
  c.detail = fmt::format("600 matrices, largest |index| {:.3g}", worst);
  return c;
}

Criterion c6_signs_and_invariance(
    const std::vector<PairwiseComparisonMatrix>& sample) {
  Criterion c{6, "sign/floor conditions and permutation/transpose invariance"};
  std::size_t sign_failures = 0;
  for (const auto& m : sample) {
    const auto rep = full_report(m);
    const bool ok = rep.ci >= -1e-9 && *rep.gci >= 0.0 && *rep.ci_star >= 0.0 &&
                    *rep.rho >= 0.0 && *rep.c3 <= 1e-12 &&
                    rep.lambda_max >= static_cast<double>(m.n()) - 1e-9;
    if (!ok) ++sign_failures;
  }

  std::mt19937_64 rng(0xBEEF);
  double worst = 0.0;
  for (std::size_t idx = 0; idx < 100; ++idx) {
    const auto& m = sample[(idx * 997) % sample.size()];
    const auto base = full_report(m);
    const auto raw = m.to_rows();
    const auto perm = fixtures::random_permutation(m.n(), rng);
    for (const auto& variant :
         {validate_pcm(fixtures::permuted(raw, perm)),
          validate_pcm(fixtures::transposed(raw))}) {
      const auto rep = full_report(variant);
      worst = std::max({worst, std::abs(rep.ci - base.ci),
                        std::abs(*rep.gci - *base.gci),
                        std::abs(*rep.ci_star - *base.ci_star),
                        std::abs(*rep.c3 - *base.c3),
                        std::abs(*rep.rho - *base.rho)});
    }
  }
  c.pass = sign_failures == 0 && worst <= 1e-10;
  c.detail = fmt::format("{} sign failures, worst invariance drift {:.3g}",
                         sign_failures, worst);
  return c;
}

Criterion c7_worked_example() {
  Criterion c{7, "worked example [[1,2,4],[0.5,1,1],[0.25,1,1]]"};
  const auto m = validate_pcm(fixtures::kRunning3);

  // lambda oracle: root of lambda^3 - 3 lambda^2 - 0.5 by bisection
  const double lambda_oracle = oracle::bisect(
      [](double x) { return x * x * x - 3 * x * x - 0.5; }, 3.0, 4.0);

  const auto rep = full_report(m);
  const double k = rho_gci_constant();
  const std::vector<std::pair<double, double>> vs_oracle = {
      {rep.lambda_max, lambda_oracle}, {rep.lambda_max, 3.05362},
      {rep.ci, 0.02681},               {*rep.gci, 0.160152},
      {*rep.ci_star, 0.5},             {*rep.c3, -0.5},
      {*rep.rho, 0.0248797},
  };
  double worst_oracle = 0.0;
  for (const auto& [got, want] : vs_oracle) {
    worst_oracle = std::max(worst_oracle, std::abs(got - want));
  }
  const double worst_identity = std::max(
      {std::abs(*rep.c3 + *rep.ci_star),
       std::abs(*rep.rho - k * *rep.gci),
       std::abs(rep.ci - (rep.lambda_max - 3.0) / 2.0),
       std::abs(*rep.c3 - c3_charpoly_oracle(m))});
  c.pass = worst_oracle <= 1e-4 && worst_identity <= 1e-9;
  c.detail = fmt::format(
      "lambda {:.9g} ci {:.9g} gci {:.9g} ci* {:.9g} c3 {:.9g} rho {:.9g}; "
      "max oracle diff {:.3g}, max identity gap {:.3g}",
      rep.lambda_max, rep.ci, *rep.gci, *rep.ci_star, *rep.c3, *rep.rho,
      worst_oracle, worst_identity);
  return c;
}

Criterion c8_transform_bijection() {
  Criterion c{8, "transform round trips on 1000 Saaty-bounded matrices"};
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto scheme =
        i % 2 ? Scheme::ContinuousLogUniform : Scheme::DiscreteSaaty;
    const auto m = generate_random_pcm({3 + i % 6, scheme, 0x5EED0000 + i});
    const auto r = pcm_to_reciprocal(m);
    const auto back = reciprocal_to_pcm(r);
    const auto r_again = pcm_to_reciprocal(back);
    for (std::size_t e = 0; e < m.entries().size(); ++e) {
      worst = std::max({worst, std::abs(back.entries()[e] - m.entries()[e]),
                        std::abs(r_again.entries()[e] - r.entries()[e])});
    }
  }
  c.pass = worst <= 1e-12;
  c.detail = fmt::format("largest entry drift {:.3g}", worst);
  return c;
}

Criterion c9_determinism(const fs::path& dir) {
  Criterion c{9, "repeated experiment invocations are byte-identical"};
  bool all_same = true;
  for (const char* scheme : {"discrete", "continuous"}) {
    const fs::path a = dir / fmt::format("{}_a.csv", scheme);
    const fs::path b = dir / fmt::format("{}_b.csv", scheme);
    const std::vector<std::string> base = {"experiment", "--n", "6", "--count",
                                           "500", "--scheme", scheme, "--seed",
                                           "18446744073709551615"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--output", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--output", b.string()});
    const CliRun ra = run_cli(args_a);
    const CliRun rb = run_cli(args_b);
    const std::string fa = slurp(a);
    all_same = all_same && ra.code == cli::kOk && rb.code == cli::kOk &&
               !fa.empty() && fa == slurp(b) && ra.out == rb.out;
  }
  c.pass = all_same;
  c.detail = all_same ? "scatter files and summaries identical"
                      : "outputs differ";
  return c;
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() /
                       fmt::format("ahp_acceptance_{}", ::getpid());
  fs::create_directories(dir);

  const auto t0 = std::chrono::steady_clock::now();
  const auto sample = random_sample();
  std::vector<Criterion> results;
  results.push_back(c1_proposition_1(sample, t0));
  results.push_back(c2_proposition_2(sample));
  results.push_back(c3_scatter_line(dir));
  results.push_back(c4_c3_oracle(sample));
  results.push_back(c5_consistency_zeroing());
  results.push_back(c6_signs_and_invariance(sample));
  results.push_back(c7_worked_example());
  results.push_back(c8_transform_bijection());
  results.push_back(c9_determinism(dir));

  fs::remove_all(dir);

  bool all = true;
  for (const auto& c : results) {
    std::cout << fmt::format("[{}] AC{} {} -- {}\n", c.pass ? "PASS" : "FAIL",
                             c.id, c.title, c.detail);
    all = all && c.pass;
  }
  std::cout << (all ? "all acceptance criteria passed\n"
                    : "acceptance criteria FAILED\n");
  return all ? 0 : 1;
}
