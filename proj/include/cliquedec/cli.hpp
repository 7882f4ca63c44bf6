#pragma once

/**
 * Command-line front end. dispatch() parses argv, runs one subcommand and
 * returns the process exit code:
 *   0 success, 1 invalid arguments, 2 refused as infeasible, 3 internal error.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquedec/asymptotics.hpp"
#include "cliquedec/enumerator.hpp"
#include "cliquedec/io.hpp"
#include "cliquedec/order_experiment.hpp"
#include "cliquedec/removal.hpp"
#include "cliquedec/run_cache.hpp"
#include "cliquedec/typicality.hpp"

namespace cliquedec::cli {

enum ExitCode : int { kOk = 0, kInvalidArguments = 1, kInfeasible = 2, kInternalError = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline auto read_json_file(const std::string& path) -> Json {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline auto emit(const std::string& text, const std::string& out_path, Streams& io) -> void {
  if (out_path.empty()) {
    io.out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + out_path);
  file << text;
}

// Serves a cached payload when allowed, otherwise computes and stores one.
template <typename Compute>
auto cached(const std::string& command, const Json& params, bool use_cache, Streams& io, Compute compute) -> Json {
  RunCache cache(RunCache::default_directory());
  if (use_cache) {
    auto hit = cache.lookup(command, params);
    for (const auto& w : cache.warnings()) io.err << "warning: " << w << '\n';
    if (hit) return *hit;
  }
  Json result = compute();
  try {
    RunRecord record;
    record.command = command;
    record.params = params;
    record.result = result;
    cache.store(std::move(record));
  } catch (const std::exception& e) {
    io.err << "warning: " << e.what() << '\n';
  }
  return result;
}

struct RemovalFlags {
  int n = 200;
  double c = 0.4;
  std::uint64_t seed = 42;
  int checkpoint_every = 0;
  int samples = kDefaultSamplesPerSize;
  std::optional<std::int64_t> s4;
  std::optional<std::int64_t> s3_steps;

  auto add_to(CLI::App* cmd) -> void {
    cmd->add_option("--n", n, "Vertex count")->check(CLI::Range(1, kMaxVertices));
    cmd->add_option("--c", c, "Triangle-phase truncation exponent, in (0,1)");
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--checkpoint-every", checkpoint_every, "Steps between typicality checks (0 = auto)");
    cmd->add_option("--samples", samples, "Sampled sets per subset size in typicality checks");
    cmd->add_option("--s4", s4, "Override the number of K4-removal steps");
    cmd->add_option("--s3-steps", s3_steps, "Override the number of K3-removal steps");
  }

  auto config() const -> RemovalConfig {
    RemovalConfig cfg;
    cfg.n = n;
    cfg.c = c;
    cfg.seed = seed;
    cfg.checkpoint_every = checkpoint_every;
    cfg.k_samples = samples;
    if (s4 || s3_steps) {
      const auto def = default_schedule(n, c);
      cfg.schedule_override = PhaseSchedule{s4.value_or(def.four_clique_steps), s3_steps.value_or(def.triangle_steps)};
    }
    return cfg;
  }
};

}  // namespace detail

inline auto dispatch(int argc, const char* const* argv, Streams io) -> int {
  CLI::App app{"Clique decompositions of K_n: exact enumeration, removal processes, and asymptotic bounds",
               "cliquedec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string out_path;
  int threads = 0;
  bool no_cache = false;
  bool as_csv = false;
  bool as_json = true;
  auto add_common = [&](CLI::App* cmd, bool csv) {
    cmd->add_option("--out", out_path, "Write output to this file");
    cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    cmd->add_flag("--json", as_json, "Emit JSON (default)");
    if (csv) cmd->add_flag("--csv", as_csv, "Emit the profile table as CSV");
  };

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Count clique decompositions of K_n exactly");
  int enum_n = 0;
  int cutoff = kDefaultCutoff;
  bool by_profile = false;
  bool force = false;
  std::string method = "canonical";
  enumerate->add_option("--n", enum_n, "Vertex count")->required();
  enumerate->add_option("--cutoff", cutoff, "Profile size cutoff L");
  enumerate->add_flag("--by-profile", by_profile, "Include counts per profile");
  enumerate->add_flag("--force", force, "Allow n above the default feasibility cap");
  enumerate->add_option("--method", method, "canonical or exact-cover")
      ->check(CLI::IsMember({"canonical", "exact-cover"}));
  enumerate->add_flag("--no-cache", no_cache, "Recompute even if a cached result exists");
  add_common(enumerate, true);

  // sample
  auto* sample = app.add_subcommand("sample", "Run the K4-then-K3 removal process");
  detail::RemovalFlags sample_flags;
  int sample_trials = 1;
  bool no_decomposition = false;
  sample_flags.add_to(sample);
  sample->add_option("--trials", sample_trials, "Independent runs (one JSON line each)")->check(CLI::PositiveNumber);
  sample->add_flag("--no-decomposition", no_decomposition, "Omit decompositions from the output");
  add_common(sample, false);

  // abort-rate
  auto* abort_rate = app.add_subcommand("abort-rate", "Estimate abort and typicality rates of the removal process");
  detail::RemovalFlags abort_flags;
  int abort_trials = 100;
  abort_flags.add_to(abort_rate);
  abort_rate->add_option("--trials", abort_trials, "Independent runs")->check(CLI::PositiveNumber);
  add_common(abort_rate, false);

  // asymptote
  auto* asymptote = app.add_subcommand("asymptote", "Evaluate the optimal profile and the upper/lower bounds");
  double asym_n = 1e6;
  int asym_cutoff = kDefaultCutoff;
  double asym_c = 0.4;
  asymptote->add_option("--n", asym_n, "Scale n (real, e.g. 1e6)");
  asymptote->add_option("--cutoff", asym_cutoff, "Size cutoff L");
  asymptote->add_option("--c", asym_c, "Truncation exponent reported with the lower bound");
  add_common(asymptote, false);

  // identities
  auto* identities = app.add_subcommand("identities", "Exact rank-1 and rank-2 matroid counts");
  int ident_n = 0;
  identities->add_option("--n", ident_n, "Ground set size")->required();
  add_common(identities, false);

  // typicality
  auto* typicality = app.add_subcommand("typicality", "Check (epsilon,h)-typicality of a graph");
  std::string graph_file;
  std::string decomposition_file;
  std::size_t prefix = 0;
  std::optional<double> epsilon;
  std::optional<double> additive;
  int typ_h = 3;
  std::optional<int> typ_samples;
  std::uint64_t typ_seed = 42;
  bool exhaustive = false;
  auto* graph_opt = typicality->add_option("--graph", graph_file, "Graph JSON {n, edges}");
  auto* decomp_opt = typicality->add_option("--decomposition", decomposition_file, "Decomposition JSON {n, cliques}");
  graph_opt->excludes(decomp_opt);
  typicality->add_option("--prefix", prefix, "With --decomposition: remove the first m cliques from K_n")->needs(decomp_opt);
  auto* eps_opt = typicality->add_option("--epsilon", epsilon, "Relative tolerance");
  auto* add_opt = typicality->add_option("--additive", additive, "Additive tolerance (default sqrt(n) log n)");
  eps_opt->excludes(add_opt);
  typicality->set_help_flag("--help", "Print this help message and exit");
  typicality->add_option("--h", typ_h, "Largest probed set size");
  typicality->add_option("--samples", typ_samples, "Sampled sets per size (default: auto mode)");
  typicality->add_option("--seed", typ_seed, "Seed for sampled mode");
  typicality->add_flag("--exhaustive", exhaustive, "Probe every set of size <= h");
  add_common(typicality, false);

  // order-experiment
  auto* order = app.add_subcommand("order-experiment", "Random-ordering concentration experiment");
  std::string order_file;
  detail::RemovalFlags order_source;
  OrderExperimentConfig order_cfg;
  std::uint64_t sample_seed = 42;
  order->add_option("--decomposition", order_file, "Decomposition JSON; default: sample one");
  order->add_option("--n", order_source.n, "Sampled decomposition: vertex count");
  order->add_option("--c", order_source.c, "Sampled decomposition: truncation exponent");
  order->add_option("--sample-seed", sample_seed, "Sampled decomposition: seed");
  order->add_option("--trials", order_cfg.trials, "Random orderings")->check(CLI::PositiveNumber);
  order->add_option("--checkpoints", order_cfg.checkpoints, "Evenly spaced prefixes")->check(CLI::PositiveNumber);
  order->set_help_flag("--help", "Print this help message and exit");
  order->add_option("--h", order_cfg.h, "Largest probed set size")->check(CLI::PositiveNumber);
  order->add_option("--seed", order_cfg.seed, "Master seed for the orderings");
  order->add_option("--samples", order_cfg.k_samples, "Sampled sets per size");
  add_common(order, false);

  // report
  auto* report = app.add_subcommand("report", "Bound report over several n plus the small-n exact table");
  std::vector<double> n_values{1e3, 1e4, 1e5, 1e6};
  int enumerate_up_to = 6;
  int report_cutoff = kDefaultCutoff;
  double report_c = 0.4;
  report->add_option("--n-values", n_values, "Scales for the bound report")->delimiter(',');
  report->add_option("--enumerate-up-to", enumerate_up_to, "Largest n in the exact table")->check(CLI::Range(1, kDefaultEnumerationCap));
  report->add_option("--cutoff", report_cutoff, "Size cutoff L");
  report->add_option("--c", report_c, "Truncation exponent");
  report->add_flag("--no-cache", no_cache, "Recompute even if a cached result exists");
  add_common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    io.out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    io.err << sub->help();
    return kInvalidArguments;
  }

  try {
    if (enumerate->parsed()) {
      const Json params{{"n", enum_n}, {"cutoff", cutoff}, {"method", method}};
      auto compute = [&]() -> Json {
        const auto result = method == "canonical" ? count_all(enum_n, cutoff, {force, threads})
                                                  : count_exact_cover_by_profile(enum_n, cutoff);
        io.err << "elapsed: " << result.elapsed.count() << " s\n";
        return to_json(result, true);
      };
      if (method == "canonical") cliquedec::detail::check_enumeration_size(enum_n, force);
      Json full = detail::cached("enumerate", params, !no_cache, io, compute);
      if (as_csv) {
        std::ostringstream os;
        for (int k = 2; k <= cutoff; ++k) os << 's' << k << ',';
        os << "E,count\n";
        for (const auto& p : full.at("profiles")) {
          for (const auto& s : p.at("s")) os << s.get<std::int64_t>() << ',';
          os << p.at("E").get<std::int64_t>() << ',' << p.at("count").get<std::string>() << '\n';
        }
        detail::emit(os.str(), out_path, io);
      } else {
        if (!by_profile) full.erase("profiles");
        detail::emit(full.dump(2) + "\n", out_path, io);
      }
      return kOk;
    }

    if (sample->parsed()) {
      const auto cfg = sample_flags.config();
      io.err << "seed: " << cfg.seed << '\n';
      const auto runs = sample_trials == 1 ? std::vector<RunResult>{sample_gamma_c(cfg)} : run_trials(cfg, sample_trials, threads);
      std::string lines;
      for (const auto& r : runs) lines += to_json(r, !no_decomposition).dump() + "\n";
      detail::emit(lines, out_path, io);
      if (!out_path.empty()) io.out << to_json(summarize_runs(runs, cfg.seed)).dump(2) << '\n';
      return kOk;
    }

    if (abort_rate->parsed()) {
      const auto cfg = abort_flags.config();
      io.err << "seed: " << cfg.seed << '\n';
      detail::emit(to_json(estimate_abort_rate(cfg, abort_trials, threads)).dump(2) + "\n", out_path, io);
      return kOk;
    }

    if (asymptote->parsed()) {
      const Real n = asym_n;
      const Json j{{"optimal_profile", to_json(optimal_profile(n, asym_cutoff))},
                   {"bound_report", to_json(bound_report(n, asym_cutoff, asym_c))},
                   {"lower_bound", to_json(lower_bound_log(n, asym_c))},
                   {"theorem",
                    {{"constant", static_cast<double>(theorem_constant())},
                     {"log_constant", static_cast<double>(theorem_log_constant())}}}};
      detail::emit(j.dump(2) + "\n", out_path, io);
      return kOk;
    }

    if (identities->parsed()) {
      detail::emit(to_json(small_rank_counts(ident_n)).dump(2) + "\n", out_path, io);
      return kOk;
    }

    if (typicality->parsed()) {
      DenseGraph g;
      if (!graph_file.empty()) {
        g = graph_from_json(detail::read_json_file(graph_file));
      } else if (!decomposition_file.empty()) {
        const auto d = decomposition_from_json(detail::read_json_file(decomposition_file));
        if (!validate(d)) throw UsageError(decomposition_file + ": not a valid clique decomposition");
        g = uncovered_graph(d, prefix);
      } else {
        throw UsageError("typicality: one of --graph or --decomposition is required");
      }
      ScanMode mode = exhaustive ? ScanMode{ExhaustiveScan{}}
                      : typ_samples ? ScanMode{SampledScan{*typ_samples, typ_seed}}
                                    : choose_scan_mode(g.order(), typ_h, kDefaultSamplesPerSize, typ_seed);
      if (std::holds_alternative<SampledScan>(mode)) io.err << "seed: " << typ_seed << '\n';
      const auto rep = epsilon ? is_typical(g, *epsilon, typ_h, mode)
                               : is_typical_additive(g, additive.value_or(coneighborhood_tolerance(g.order())), typ_h, mode);
      Json j = to_json(rep);
      j["seed"] = typ_seed;
      detail::emit(j.dump(2) + "\n", out_path, io);
      return kOk;
    }

    if (order->parsed()) {
      CliqueDecomposition d;
      if (!order_file.empty()) {
        d = decomposition_from_json(detail::read_json_file(order_file));
      } else {
        auto cfg = order_source.config();
        cfg.seed = sample_seed;
        const auto run = sample_gamma_c(cfg);
        if (!run.succeeded()) throw std::runtime_error("order-experiment: the sampled run aborted; try another --sample-seed");
        d = run.decomposition();
      }
      order_cfg.threads = threads;
      io.err << "seed: " << order_cfg.seed << '\n';
      Json j = to_json(random_order_experiment(d, order_cfg));
      if (order_file.empty()) j["sample_seed"] = sample_seed;
      detail::emit(j.dump(2) + "\n", out_path, io);
      return kOk;
    }

    if (report->parsed()) {
      Json n_json = Json::array();
      for (double v : n_values) n_json.push_back(v);
      const Json params{{"n_values", n_json}, {"enumerate_up_to", enumerate_up_to}, {"cutoff", report_cutoff}, {"c", report_c}};
      Json full = detail::cached("report", params, !no_cache, io, [&]() -> Json {
        Json bounds = Json::array();
        for (double v : n_values) bounds.push_back(to_json(bound_report(v, report_cutoff, report_c)));
        Json exact = Json::array();
        for (int n = 1; n <= enumerate_up_to; ++n) exact.push_back(to_json(count_all(n, report_cutoff, {false, threads}), true));
        return {{"theorem_constant", static_cast<double>(theorem_constant())}, {"bounds", bounds}, {"exact", exact}};
      });
      if (as_csv) {
        std::ostringstream os;
        os << "n,";
        for (int k = 2; k <= report_cutoff; ++k) os << 's' << k << ',';
        os << "E,count\n";
        for (const auto& table : full.at("exact"))
          for (const auto& p : table.at("profiles")) {
            os << table.at("n").get<int>() << ',';
            for (const auto& s : p.at("s")) os << s.get<std::int64_t>() << ',';
            os << p.at("E").get<std::int64_t>() << ',' << p.at("count").get<std::string>() << '\n';
          }
        detail::emit(os.str(), out_path, io);
      } else {
        detail::emit(full.dump(2) + "\n", out_path, io);
      }
      return kOk;
    }
  } catch (const InfeasibleRequest& e) {
    io.err << "refused: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const Json::exception& e) {
    io.err << "error: malformed input: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::exception& e) {
    io.err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace cliquedec::cli
