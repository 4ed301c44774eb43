#include "ahp/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ahp/experiment.hpp"
#include "ahp/indices.hpp"
#include "ahp/matrix_io.hpp"
#include "ahp/transforms.hpp"

namespace ahp::cli {
namespace {

/// Writes one flat JSON object, keys in insertion order.
class JsonRecord {
 public:
  JsonRecord& number(std::string_view key, double v) {
    return raw(key, format_number(v));
  }
  JsonRecord& number(std::string_view key, const std::optional<double>& v) {
    return raw(key, v ? format_number(*v) : "null");
  }
  JsonRecord& integer(std::string_view key, std::uint64_t v) {
    return raw(key, fmt::format("{}", v));
  }
  JsonRecord& boolean(std::string_view key, bool v) {
    return raw(key, v ? "true" : "false");
  }
  JsonRecord& string(std::string_view key, std::string_view v) {
    return raw(key, fmt::format("\"{}\"", v));
  }
  JsonRecord& object(std::string_view key, const JsonRecord& v) {
    return raw(key, v.str());
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  JsonRecord& raw(std::string_view key, std::string_view value) {
    if (!body_.empty()) body_ += ',';
    body_ += fmt::format("\"{}\":{}", key, value);
    return *this;
  }

  std::string body_;
};

JsonRecord identity_record(const IdentityCheck& check) {
  JsonRecord rec;
  rec.number("lhs", check.lhs)
      .number("rhs", check.rhs)
      .number("abs_gap", check.abs_gap)
      .boolean("pass", check.pass);
  return rec;
}

JsonRecord fit_record(const std::optional<LineFit>& fit, double expected) {
  JsonRecord rec;
  rec.boolean("degenerate", !fit.has_value())
      .number("slope", fit ? std::optional<double>(fit->slope) : std::nullopt)
      .number("expected_slope", expected)
      .number("max_abs_residual",
              fit ? std::optional<double>(fit->max_abs_residual)
                  : std::nullopt);
  return rec;
}

/// Thrown for contract violations that belong to the usage exit class.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<MatrixKind> kind_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_kind(text);
}

Scheme scheme_flag(const std::string& text) {
  const auto scheme = parse_scheme(text);
  if (!scheme) {
    throw UsageError(
        fmt::format("--scheme must be 'discrete' or 'continuous', got '{}'",
                    text));
  }
  return *scheme;
}

void require_order(long long n) {
  if (n < 3) {
    throw UsageError(fmt::format("--n needs n ≥ 3, got {}", n));
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << contents) || !file.flush()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("cannot write '{}'", path));
  }
}

std::string report_json(const IndexReport& report, MatrixKind kind,
                        bool saaty_bounded) {
  JsonRecord rec;
  rec.string("kind", to_string(kind))
      .integer("n", report.n)
      .boolean("saaty_bounded", saaty_bounded)
      .number("lambda_max", report.lambda_max)
      .integer("eigen_iterations", report.eigen_iterations)
      .number("ci", report.ci)
      .number("gci", report.gci)
      .number("ci_star", report.ci_star)
      .number("c3", report.c3)
      .number("rho", report.rho);
  return rec.str();
}

struct Options {
  std::string input;
  std::string output;
  std::string kind;
  std::string scheme = "discrete";
  long long n = 0;
  long long count = 1000;
  std::uint64_t seed = 42;
  double eig_tol = kDefaultEigenTol;
};

int cmd_compute(const Options& opt, std::ostream& out) {
  if (!(opt.eig_tol > 0.0)) throw UsageError("--eig-tol must be positive");
  const MatrixFile file = read_matrix_file(opt.input, kind_flag(opt.kind));
  if (file.kind == MatrixKind::Reciprocal) {
    const ReciprocalRelation r = validate_reciprocal(file.matrix);
    out << report_json(full_report(r, opt.eig_tol), file.kind, true) << '\n';
  } else {
    const PairwiseComparisonMatrix m = validate_pcm(file.matrix);
    out << report_json(full_report(m, opt.eig_tol), file.kind,
                       m.saaty_bounded())
        << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const MatrixFile file = read_matrix_file(opt.input, kind_flag(opt.kind));
  if (file.matrix.size() < 3) {
    throw UsageError(fmt::format(
        "identity checks need n ≥ 3, got n = {}", file.matrix.size()));
  }

  IdentityCheck p1{};
  IdentityCheck p2{};
  if (file.kind == MatrixKind::Reciprocal) {
    const ReciprocalRelation r = validate_reciprocal(file.matrix);
    p1 = verify_proposition_1(reciprocal_to_pcm(r));
    p2 = verify_proposition_2(r);
  } else {
    const PairwiseComparisonMatrix m = validate_pcm(file.matrix);
    p1 = verify_proposition_1(m);
    p2 = verify_proposition_2(pcm_to_reciprocal(m));
  }

  JsonRecord rec;
  rec.integer("n", file.matrix.size())
      .object("c3_vs_ci_star", identity_record(p1))
      .object("rho_vs_gci", identity_record(p2))
      .boolean("pass", p1.pass && p2.pass);
  out << rec.str() << '\n';
  return p1.pass && p2.pass ? kOk : kNumericError;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  require_order(opt.n);
  const GeneratorConfig cfg{static_cast<std::size_t>(opt.n),
                            scheme_flag(opt.scheme), opt.seed};
  const std::string csv = format_matrix_csv(generate_random_pcm(cfg).to_rows());
  if (opt.output.empty()) {
    out << csv;
  } else {
    write_file(opt.output, csv);
  }
  return kOk;
}

int cmd_experiment(const Options& opt, std::ostream& out) {
  require_order(opt.n);
  if (opt.count < 2) {
    throw UsageError(
        fmt::format("--count must be at least 2 to fit a line, got {}",
                    opt.count));
  }
  const GeneratorConfig cfg{static_cast<std::size_t>(opt.n),
                            scheme_flag(opt.scheme), opt.seed};
  const ExperimentResult result =
      run_experiment(static_cast<std::size_t>(opt.count), cfg);
  const GateStatus gates = evaluate_gates(result);

  if (!opt.output.empty()) {
    std::string csv = "index,ci_star,c3,gci,rho\n";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const ScatterRow& row = result.rows[i];
      csv += fmt::format("{},{},{},{},{}\n", i, format_number(row.ci_star),
                         format_number(row.c3), format_number(row.gci),
                         format_number(row.rho));
    }
    write_file(opt.output, csv);
  }

  JsonRecord gate_rec;
  gate_rec.boolean("slope_c3_vs_ci_star", gates.slope_p1)
      .boolean("slope_rho_vs_gci", gates.slope_p2)
      .boolean("residual_c3_vs_ci_star", gates.residual_p1)
      .boolean("residual_rho_vs_gci", gates.residual_p2)
      .boolean("identities", gates.identities);

  JsonRecord rec;
  rec.integer("n", cfg.n)
      .integer("count", result.count)
      .string("scheme", to_string(cfg.scheme))
      .integer("seed", cfg.seed)
      .string("prng", result.prng)
      .object("fit_c3_vs_ci_star",
              fit_record(result.fit_p1, result.expected_slope_p1))
      .object("fit_rho_vs_gci",
              fit_record(result.fit_p2, result.expected_slope_p2))
      .number("max_identity_gap_c3_vs_ci_star", result.max_identity_gap_p1)
      .number("max_identity_gap_rho_vs_gci", result.max_identity_gap_p2)
      .object("gates", gate_rec)
      .boolean("pass", gates.all());
  out << rec.str() << '\n';
  return gates.all() ? kOk : kNumericError;
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Consistency indices for pairwise comparison matrices"};
  app.require_subcommand(1);

  Options opt;
  auto* compute = app.add_subcommand("compute", "Print all consistency indices");
  compute->add_option("--input", opt.input, "Matrix file (CSV or structured)")
      ->required();
  compute->add_option("--kind", opt.kind, "pcm | reciprocal")
      ->check(CLI::IsMember({"pcm", "reciprocal"}));
  compute->add_option("--eig-tol", opt.eig_tol, "Power iteration tolerance");

  auto* verify = app.add_subcommand(
      "verify", "Check the c3/CI* and rho/GCI proportionality identities");
  verify->add_option("--input", opt.input, "Matrix file")->required();
  verify->add_option("--kind", opt.kind, "pcm | reciprocal")
      ->check(CLI::IsMember({"pcm", "reciprocal"}));

  auto* generate =
      app.add_subcommand("generate", "Write one seeded random matrix as CSV");
  generate->add_option("--n", opt.n, "Matrix order")->required();
  generate->add_option("--scheme", opt.scheme, "discrete | continuous");
  generate->add_option("--seed", opt.seed, "64-bit seed");
  generate->add_option("--output", opt.output, "Destination (default stdout)");

  auto* experiment = app.add_subcommand(
      "experiment", "Scatter both index pairs over a random batch");
  experiment->add_option("--n", opt.n, "Matrix order")->required();
  experiment->add_option("--count", opt.count, "Batch size");
  experiment->add_option("--scheme", opt.scheme, "discrete | continuous");
  experiment->add_option("--seed", opt.seed, "64-bit seed");
  experiment->add_option("--output", opt.output, "Scatter CSV destination");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kUsageError;
  }

  try {
    if (*compute) return cmd_compute(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*generate) return cmd_generate(opt, out);
    if (*experiment) return cmd_experiment(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kUsageError;
  } catch (const NoConvergenceError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kNumericError;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace ahp::cli
