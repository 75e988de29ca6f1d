// Command-line front end. Reports go to stdout as one JSON document; diagnostics go to
// stderr. Exit codes: 0 success / property holds, 1 negative verdict, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "spherical/io.hpp"
#include "spherical/sampling.hpp"

namespace {

using namespace spherical;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  bool exact = true;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::string restrict_to = "none";
  double radius = 1.0;
  std::size_t count = 50;
  std::string input;
  std::string output;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void warn_low_dimension(std::size_t n) {
  if (n < 3)
    std::cerr << "warning: dimension " << n
              << " < 3; the axiomatic characterization of spherical preferences does not apply\n";
}

Restriction parse_restriction(const std::string& s) {
  if (s == "none") return Restriction::None;
  if (s == "linear") return Restriction::Linear;
  if (s == "euclidean") return Restriction::Euclidean;
  if (s == "anti-euclidean") return Restriction::AntiEuclidean;
  throw ParseError("unknown restriction '" + s + "'");
}

template <class T>
int cmd_classify(const RunConfig& cfg) {
  const auto params = params_from_json<T>(read_json_file(cfg.input));
  emit(class_to_json(classify(params)));
  return kExitOk;
}

template <class T>
int cmd_rationalize(const RunConfig& cfg) {
  const auto data = dataset_from_json<T>(read_json_file(cfg.input));
  data.validate();
  warn_low_dimension(data.dimension);
  const auto verdict = rationalize_restricted(data, parse_restriction(cfg.restrict_to));
  emit(verdict_to_json(verdict));
  return verdict.rationalizable ? kExitOk : kExitNegative;
}

/// The input is spherical parameters, an oracle spec, or a built-in oracle name.
template <class T>
struct AxiomSubject {
  std::optional<SphericalParams<T>> params;
  std::optional<UtilityOracle<T>> utility;
};

template <class T>
AxiomSubject<T> load_subject(const std::string& input) {
  AxiomSubject<T> subject;
  Json j;
  if (!std::filesystem::exists(input)) j = Json(input);  // bare built-in name
  else j = read_json_file(input);
  if (j.is_object() && j.contains("c")) {
    auto p = params_from_json<T>(j);
    subject.params = p;
    subject.utility.emplace(p.dimension(), [p](const Vec<T>& x) { return utility(p, x); });
  } else {
    subject.utility.emplace(oracle_spec_from_json<T>(j).make());
  }
  return subject;
}

template <class T>
int cmd_check_axioms(const RunConfig& cfg) {
  const auto subject = load_subject<T>(cfg.input);
  const UtilityOracle<T>& u = *subject.utility;
  warn_low_dimension(u.dimension());
  CheckOptions options;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.execution = Execution::Parallel;
  const double sqi_tol = is_exact_v<T> ? 0.0 : cfg.tolerance.value_or(1e-9);

  const auto oracle = comparison_from(u);
  std::vector<AxiomReport<T>> reports{check_oioi(oracle, options), check_perp_diff(oracle, options),
                                      check_soioi(oracle, options), check_homotheticity(oracle, options)};
  CheckOptions sqi = options;
  sqi.trials = std::max<std::size_t>(options.trials, 2);
  reports.push_back(check_status_quo_independence(u, sqi, sqi_tol));

  Json out{{"dimension", u.dimension()}, {"mode", is_exact_v<T> ? "exact" : "float"}, {"seed", cfg.seed}};
  Json list = Json::array();
  bool clean = true;
  for (const auto& r : reports) {
    clean = clean && r.clean();
    list.push_back(report_to_json(r));
  }
  out["reports"] = std::move(list);
  if (subject.params) {
    const auto& p = *subject.params;
    out["class"] = class_to_json(classify(p));
    const auto z = find_monotone_direction(p);
    out["monotone_direction"] = z ? vec_to_json(*z) : Json(nullptr);
    // Informational: only Euclidean preferences are strictly convex.
    out["strict_convexity"] = report_to_json(check_strict_convexity(p, options));
  }
  out["holds"] = clean;
  emit(out);
  return clean ? kExitOk : kExitNegative;
}

template <class T>
int cmd_decompose(const RunConfig& cfg) {
  Json j;
  if (!std::filesystem::exists(cfg.input)) j = Json(cfg.input);
  else j = read_json_file(cfg.input);
  const auto u = oracle_spec_from_json<T>(j).make();
  std::vector<Vec<T>> probes{Vec<T>::zeros(u.dimension())};
  Rng rng(splitmix64(cfg.seed));
  for (int k = 0; k < 3; ++k) probes.push_back(sample_vec<T>(rng, u.dimension(), 5.0));
  DecomposeOptions options;
  if (cfg.tolerance) options.tolerance = *cfg.tolerance;
  try {
    emit(decomposition_to_json(decompose<T>(u, probes, options)));
    return kExitOk;
  } catch (const NotQuadLin<T>& e) {
    Json out{{"error", "NotQuadLin"}, {"message", e.what()}};
    out.update(decomposition_to_json(e.fit()));
    emit(out);
    return kExitNegative;
  }
}

template <class T>
int cmd_generate(const RunConfig& cfg) {
  const auto params = params_from_json<T>(read_json_file(cfg.input));
  const auto data = generate_dataset(params, cfg.count, cfg.seed, cfg.radius);
  const std::string text = dataset_to_json(data).dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + cfg.output + "'");
    out << text;
  }
  return kExitOk;
}

template <class T>
int dispatch(const std::string& command, const RunConfig& cfg) {
  if (command == "classify") return cmd_classify<T>(cfg);
  if (command == "rationalize") return cmd_rationalize<T>(cfg);
  if (command == "check-axioms") return cmd_check_axioms<T>(cfg);
  if (command == "decompose") return cmd_decompose<T>(cfg);
  if (command == "generate") return cmd_generate<T>(cfg);
  throw ParseError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical preferences: classification, rationalizability, axiom checks, cardinal decomposition"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  bool use_float = false, use_exact = false;
  double tol = 0;

  auto* exact_flag = app.add_flag("--exact", use_exact, "Exact rational arithmetic (default)");
  app.add_flag("--float", use_float, "Binary floating-point arithmetic")->excludes(exact_flag);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--trials", cfg.trials, "Trials per axiom checker")->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance override (float mode only)")->check(CLI::NonNegativeNumber);
  app.add_option("--restrict", cfg.restrict_to, "Preference class restriction")
      ->check(CLI::IsMember({"none", "linear", "euclidean", "anti-euclidean"}));
  app.add_option("--radius", cfg.radius, "Sampling box radius")->check(CLI::PositiveNumber);
  app.add_option("--count", cfg.count, "Number of sampled pairs")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Classify spherical parameters {\"c\", \"d\"}");
  auto* rationalize = app.add_subcommand("rationalize", "Decide rationalizability of a dataset");
  auto* axioms = app.add_subcommand("check-axioms", "Property-check the axioms on parameters or an oracle");
  auto* decompose = app.add_subcommand("decompose", "Quadratic plus linear decomposition of a utility oracle");
  auto* generate = app.add_subcommand("generate", "Sample a dataset rationalized by the given parameters");
  for (auto* sub : {classify, rationalize, axioms, decompose, generate})
    sub->add_option("input", cfg.input, "Input JSON file (or built-in oracle name)")->required();
  generate->add_option("-o,--output", cfg.output, "Write the dataset here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  cfg.exact = !use_float;
  if (tol_opt->count() > 0) {
    if (cfg.exact) {
      std::cerr << "error: --tol is only meaningful with --float\n";
      return kExitInput;
    }
    cfg.tolerance = tol;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return cfg.exact ? dispatch<Rational>(command, cfg) : dispatch<double>(command, cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInput;
}
