#pragma once

// End-to-end run: load -> order/color -> (SCT build) -> solve -> extract,
// producing a one-line JSON report.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "kdense/extract.hpp"
#include "kdense/fw.hpp"
#include "kdense/graph.hpp"
#include "kdense/sampler.hpp"
#include "kdense/sct.hpp"

namespace kdense {

enum class Algorithm { Kcl, Psctl, Spath };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Kcl: return "kcl";
    case Algorithm::Psctl: return "psctl";
    case Algorithm::Spath: return "spath";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "kcl") return Algorithm::Kcl;
  if (s == "psctl") return Algorithm::Psctl;
  if (s == "spath") return Algorithm::Spath;
  throw DomainError("unknown algorithm '" + s + "' (expected kcl, psctl or spath)");
}

struct RunConfig {
  std::string input;
  Algorithm algorithm = Algorithm::Psctl;
  std::size_t k = 3;
  std::uint32_t iterations = 10;
  std::uint64_t samples = 500000;
  std::uint64_t seed = 0;
  TieMode tie = TieMode::Random;
  bool shuffle_pairs = false;
  bool plateau_only = false;
  bool until_converged = false;  // iterations becomes a cap
  std::uint32_t patience = 1;     // passes the prefix must hold still
  bool exact_for_sampled = false;
  std::string output;

  void validate() const {
    if (k < 2) throw DomainError("k must be at least 2");
    if (iterations < 1) throw DomainError("iterations must be at least 1");
    if (patience < 1) throw DomainError("patience must be at least 1");
    if (algorithm == Algorithm::Spath && samples < 1) throw DomainError("samples must be at least 1");
  }
};

struct RunOutcome {
  DensityReport report;
  nlohmann::ordered_json json;
  std::uint32_t iterations_used = 0;
};

namespace detail {

class StageTimer {
public:
  using Clock = std::chrono::steady_clock;
  explicit StageTimer(std::ostream* log) : log_(log), start_(Clock::now()), last_(start_) {}

  void mark(const std::string& stage) {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    stages_[stage] = ms;
    if (log_) *log_ << "[kdense] " << stage << ": " << ms << " ms\n";
    last_ = now;
  }
  double total_ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }
  const nlohmann::ordered_json& stages() const { return stages_; }

private:
  std::ostream* log_;
  Clock::time_point start_, last_;
  nlohmann::ordered_json stages_ = nlohmann::ordered_json::object();
};

}  // namespace detail

// Runs one solver on an already loaded graph. `log` receives stage timings.
inline RunOutcome run_on_graph(const Graph& g, const RunConfig& cfg, std::ostream* log = nullptr) {
  cfg.validate();
  detail::StageTimer timer(log);
  const std::size_t k = cfg.k;
  FwOptions opt{cfg.seed, cfg.tie, cfg.shuffle_pairs};

  DegeneracyOrder ord = degeneracy_order(g);
  timer.mark("order");

  RunOutcome out;
  std::optional<std::size_t> eta;
  std::optional<SampleSet> samples;
  RankVector ranks;
  std::optional<std::uint64_t> total;

  auto converge_loop = [&](auto& solver, ExactExtractor& ex) {
    run_until_stable(solver, ex, cfg.iterations, cfg.patience);
  };

  if (cfg.algorithm == Algorithm::Psctl) {
    SctForest forest = build_sct(g, ord, k);
    eta = forest.eta();
    total = total_pair_count(forest, k);
    timer.mark("sct-build");
    if (cfg.until_converged) {
      ExactExtractor ex(g, ord, k, total);
      Psctl solver(forest, g.n(), k, opt);
      converge_loop(solver, ex);
      ranks = solver.ranks();
    } else {
      ranks = psctl_run(forest, g.n(), k, cfg.iterations, opt);
    }
    timer.mark("solve");
  } else if (cfg.algorithm == Algorithm::Kcl) {
    ForwardAdjacency fwd(g, ord);
    ListedCliques source{&fwd, k};
    if (cfg.until_converged) {
      ExactExtractor ex(g, ord, k);
      Kcl<ListedCliques> solver(source, g.n(), opt);
      converge_loop(solver, ex);
      ranks = solver.ranks();
    } else {
      ranks = kcl_run(source, g.n(), cfg.iterations, opt);
    }
    total = ranks.total() / ranks.iterations_done;
    timer.mark("solve");
  } else {
    Coloring col = greedy_color(g, ord);
    timer.mark("color");
    SpathResult res = spath_run(g, col, k, cfg.samples, cfg.iterations, opt);
    ranks = std::move(res.ranks);
    samples = std::move(res.samples);
    timer.mark("solve");
  }

  auto order = rank_sort(ranks);
  if (samples) {
    out.report = best_prefix_sampled(order, *samples);
    if (cfg.exact_for_sampled && !out.report.empty) {
      ExactExtractor ex(g, ord, k);
      out.report.exact = {ex.count_in(out.report.nodes), out.report.nodes.size()};
      out.report.exact_known = true;
    }
  } else {
    ExactExtractor ex(g, ord, k, total);
    out.report = ex.best_prefix(order, cfg.plateau_only ? &ranks : nullptr);
  }
  timer.mark("extract");
  out.iterations_used = ranks.iterations_done;

  const DensityReport& rep = out.report;
  auto& j = out.json;
  j["solver"] = to_string(cfg.algorithm);
  j["k"] = k;
  j["T"] = ranks.iterations_done;
  if (cfg.algorithm == Algorithm::Spath)
    j["t"] = cfg.samples;
  else
    j["t"] = nullptr;
  j["seed"] = cfg.seed;
  j["tie"] = cfg.tie == TieMode::Random ? "random" : "smallest-id";
  j["density"] = rep.density();
  j["density_mode"] = to_string(rep.mode);
  if (rep.exact_known) {
    j["clique_count"] = rep.exact.count;
    j["density_exact"] = rep.exact.to_fixed2();
  } else {
    j["clique_count"] = nullptr;
  }
  j["size"] = rep.nodes.size();
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (NodeId u : rep.nodes) labels.push_back(g.label(u));
  j["nodes"] = std::move(labels);
  if (eta)
    j["eta"] = *eta;
  else
    j["eta"] = nullptr;
  j["delta"] = ord.delta;
  j["n"] = g.n();
  j["m"] = g.m();
  j["empty"] = rep.empty;
  if (samples) {
    j["density_sampled"] = rep.sampled.value();
    j["sample_hits"] = samples->hits;
    j["sample_distinct"] = samples->size();
    j["paths_total"] = kdense::to_string(samples->paths_total);
    j["clique_estimate"] = static_cast<double>(samples->clique_estimate());
    j["insufficient_samples"] = samples->empty();
  }
  j["stage_wall_ms"] = timer.stages();
  j["wall_ms"] = timer.total_ms();
  return out;
}

inline RunOutcome run(const RunConfig& cfg, std::ostream* log = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g = load_edge_list_file(cfg.input);
  double load_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (log) *log << "[kdense] load: " << load_ms << " ms (n=" << g.n() << ", m=" << g.m() << ")\n";
  RunOutcome out = run_on_graph(g, cfg, log);
  out.json["stage_wall_ms"]["load"] = load_ms;
  out.json["wall_ms"] = out.json["wall_ms"].get<double>() + load_ms;
  return out;
}

}  // namespace kdense
