#include "qwalk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/analytics.hpp"
#include "qwalk/coin_evolution.hpp"
#include "qwalk/decoherence_mc.hpp"
#include "qwalk/lattice_state.hpp"
#include "qwalk/measurement.hpp"

namespace qwalk::cli {

namespace {

void require_probability(double value, const char* flag) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw FlagError(std::string(flag) + " must lie in [0, 1], got " + format_double(value));
  }
}

void check_norm(const WalkState& state, const char* what) {
  const double drift = std::abs(state.norm_squared() - 1.0);
  if (!(drift <= kNormTolerance)) {
    throw InvariantViolation(std::string(what) + ": norm drifted by " + format_double(drift) +
                             " at t=" + std::to_string(state.time()));
  }
}

Cell num(double v) { return v; }
Cell num(int v) { return static_cast<std::int64_t>(v); }

nlohmann::json config_of(const EvolveOptions& o) { return {{"p", o.p}, {"steps", o.steps}}; }

nlohmann::json config_of(const EntropyOptions& o) { return {{"p", o.p}, {"t_max", o.t_max}}; }

nlohmann::json config_of(const DecohereOptions& o) {
  return {{"p", o.p},         {"q", o.q_values},     {"steps", o.steps},
          {"trials", o.trials}, {"seed", o.seed}, {"exact", o.exact}};
}

nlohmann::json config_of(const RecoverDemoOptions& o) {
  return {{"p", o.p}, {"t", o.t}, {"seed", o.seed}};
}

struct OutputFlags {
  std::string format = "csv";
  std::string path;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", flags.path, "Output file (default: standard output)");
}

template <typename Options>
void emit(const std::string& command, const Options& options, const Table& table,
          const OutputFlags& flags, std::ostream& out) {
  std::ofstream file;
  if (!flags.path.empty()) {
    file.open(flags.path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw FlagError("cannot open output file " + flags.path);
    }
  }
  std::ostream& sink = flags.path.empty() ? out : file;
  if (flags.format == "json") {
    write_json(sink, command, config_of(options), table);
  } else {
    write_csv(sink, table);
  }
  sink.flush();
}

}  // namespace

Table evolve_records(const EvolveOptions& options) {
  require_probability(options.p, "--p");
  if (options.steps < 0) {
    throw FlagError("--steps must be >= 0");
  }
  const WalkState state = evolve(initial_state(), CoinSpec(options.p), options.steps);
  check_norm(state, "evolve");

  Table table{{"n", "psi_plus", "psi_minus", "rho"}, {}};
  for (int n = -options.steps; n <= options.steps; n += 2) {
    const double up = state.plus(n);
    const double down = state.minus(n);
    table.rows.push_back({num(n), num(up), num(down), num(up * up + down * down)});
  }
  return table;
}

Table entropy_records(const EntropyOptions& options) {
  require_probability(options.p, "--p");
  if (options.t_max < 1) {
    throw FlagError("--t-max must be >= 1");
  }
  const CoinSpec spec(options.p);
  Table table{{"t", "S_c", "asymptote"}, {}};
  WalkState state = initial_state();
  for (int t = 1; t <= options.t_max; ++t) {
    state = step(state, spec);
    check_norm(state, "entropy");
    table.rows.push_back(
        {num(t), num(entanglement_entropy(reduced_density(state))), num(entropy_asymptote(t))});
  }
  return table;
}

Table decohere_records(const DecohereOptions& options) {
  require_probability(options.p, "--p");
  if (options.q_values.empty()) {
    throw FlagError("--q needs at least one value");
  }
  for (double q : options.q_values) {
    require_probability(q, "--q");
  }
  if (options.steps < 0) {
    throw FlagError("--steps must be >= 0");
  }
  if (options.trials < 1) {
    throw FlagError("--trials must be >= 1");
  }

  Table table{{"kind", "q", "n", "rho", "mean", "variance", "bimodal"}, {}};
  for (double q : options.q_values) {
    DecoherenceConfig config;
    config.p = options.p;
    config.q = q;
    config.t_max = options.steps;
    config.trials = options.trials;
    config.master_seed = options.seed;
    config.exact_readout = options.exact;
    try {
      validate(config);
    } catch (const std::exception& e) {
      throw FlagError(e.what());
    }
    const EnsembleResult result = run_ensemble(config, options.threads);
    const double total = result.empirical_pmf.total();
    if (!(std::abs(total - 1.0) <= kNormTolerance)) {
      throw InvariantViolation("decohere: empirical pmf sums to " + format_double(total));
    }
    const auto mass = result.empirical_pmf.masses();
    for (std::size_t i = 0; i < mass.size(); ++i) {
      table.rows.push_back({std::string("pmf"), num(q), num(result.empirical_pmf.site_at(i)),
                            num(mass[i]), {}, {}, {}});
    }
    const bool bimodal = detect_bimodality(result.empirical_pmf);
    table.rows.push_back({std::string("summary"), num(q), {}, {}, num(result.mean),
                          num(result.variance), num(bimodal ? 1 : 0)});
  }
  return table;
}

Table recover_demo_records(const RecoverDemoOptions& options) {
  require_probability(options.p, "--p");
  if (options.t < 1) {
    throw FlagError("--t must be >= 1");
  }
  const WalkState psi = evolve(initial_state(), CoinSpec(options.p), options.t);
  check_norm(psi, "recover-demo");
  RandomStream rng = make_stream(options.seed, 0);
  const auto [outcome, collapsed] = measure_chirality(psi, rng);
  const WalkState restored = recover(collapsed, outcome, options.p);
  const WalkState wrong = wrong_recover(collapsed, outcome, options.p);
  check_norm(restored, "recover-demo");
  check_norm(wrong, "recover-demo");

  Table table{{"kind", "n", "psi_plus", "psi_minus", "value"}, {}};
  for (int n = -options.t; n <= options.t; n += 2) {
    table.rows.push_back({std::string("state"), num(n), num(psi.plus(n)), num(psi.minus(n)), {}});
  }
  const int sign = outcome.sign == Chirality::plus ? 1 : -1;
  table.rows.push_back({std::string("outcome"), {}, {}, {}, num(sign)});
  table.rows.push_back({std::string("outcome_probability"), {}, {}, {}, num(outcome.probability)});
  table.rows.push_back({std::string("fidelity"), {}, {}, {}, num(inner_product(psi, restored))});
  table.rows.push_back({std::string("wrong_overlap"), {}, {}, {}, num(inner_product(psi, wrong))});
  return table;
}

unsigned default_thread_count() {
  const char* raw = std::getenv("QWALK_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return 0;
  }
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value > 4096) {
    return 0;
  }
  return static_cast<unsigned>(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum walk with a binomial position distribution"};
  app.name("qwalk");
  app.require_subcommand(1);

  EvolveOptions evolve_opts;
  OutputFlags evolve_out;
  auto* evolve_cmd = app.add_subcommand("evolve", "Wave function at the final time");
  evolve_cmd->add_option("--p", evolve_opts.p, "Bias p")->capture_default_str();
  evolve_cmd->add_option("--steps", evolve_opts.steps, "Number of steps")->capture_default_str();
  add_output_flags(evolve_cmd, evolve_out);

  EntropyOptions entropy_opts;
  OutputFlags entropy_out;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entanglement entropy for t = 1..t-max");
  entropy_cmd->add_option("--p", entropy_opts.p, "Bias p")->capture_default_str();
  entropy_cmd->add_option("--t-max", entropy_opts.t_max, "Last time step")->capture_default_str();
  add_output_flags(entropy_cmd, entropy_out);

  DecohereOptions decohere_opts;
  decohere_opts.threads = default_thread_count();
  OutputFlags decohere_out;
  auto* decohere_cmd =
      app.add_subcommand("decohere", "Monte Carlo ensemble with random position measurements");
  decohere_cmd->add_option("--p", decohere_opts.p, "Bias p")->capture_default_str();
  decohere_cmd->add_option("--q", decohere_opts.q_values, "Measurement probabilities, comma separated")
      ->delimiter(',');
  decohere_cmd->add_option("--steps", decohere_opts.steps, "Time horizon")->capture_default_str();
  decohere_cmd->add_option("--trials", decohere_opts.trials, "Realizations per q")
      ->capture_default_str();
  decohere_cmd->add_option("--seed", decohere_opts.seed, "Master seed")->capture_default_str();
  decohere_cmd->add_flag("--exact", decohere_opts.exact,
                         "Accumulate the final PMF instead of sampling a readout");
  decohere_cmd->add_option("--threads", decohere_opts.threads,
                           "Worker threads (default: QWALK_THREADS or all cores)");
  add_output_flags(decohere_cmd, decohere_out);

  RecoverDemoOptions recover_opts;
  OutputFlags recover_out;
  auto* recover_cmd = app.add_subcommand(
      "recover-demo", "Measure the chirality, then undo it with the right and the wrong protocol");
  recover_cmd->add_option("--p", recover_opts.p, "Bias p")->capture_default_str();
  recover_cmd->add_option("--t", recover_opts.t, "Measurement time")->capture_default_str();
  recover_cmd->add_option("--seed", recover_opts.seed, "Seed for the measurement")
      ->capture_default_str();
  add_output_flags(recover_cmd, recover_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitFlagError;
  }

  try {
    if (evolve_cmd->parsed()) {
      emit("evolve", evolve_opts, evolve_records(evolve_opts), evolve_out, out);
    } else if (entropy_cmd->parsed()) {
      emit("entropy", entropy_opts, entropy_records(entropy_opts), entropy_out, out);
    } else if (decohere_cmd->parsed()) {
      emit("decohere", decohere_opts, decohere_records(decohere_opts), decohere_out, out);
    } else if (recover_cmd->parsed()) {
      emit("recover-demo", recover_opts, recover_demo_records(recover_opts), recover_out, out);
    }
  } catch (const FlagError& e) {
    err << "qwalk: " << e.what() << '\n';
    return kExitFlagError;
  } catch (const InvariantViolation& e) {
    err << "qwalk: numerical invariant violated: " << e.what() << '\n';
    return kExitInvariantViolation;
  }
  return kExitSuccess;
}

}  // namespace qwalk::cli
