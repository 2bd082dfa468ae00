// dense: command-line front end for the kdense library.
//
//   dense [--algo kcl|psctl|spath] --k K [--iters T] [--samples t] INPUT
//   dense oracle {cliques|densest|color-paths} --k K INPUT
//   dense sct --k K --out FILE INPUT
//   dense plan --k K --eps E --theta H [--pilot t] INPUT
//   dense gen {gnp|planted|powerlaw} ... --out FILE

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kdense/kdense.hpp"
#include "kdense/pipeline.hpp"

namespace {

using namespace kdense;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

int run_oracle(const std::string& which, std::size_t k, const std::string& input, bool json) {
  Graph g = load_edge_list_file(input);
  auto lim = oracle::OracleLimits::from_env();
  nlohmann::ordered_json j;
  if (which == "cliques") {
    auto cl = oracle::brute_cliques(g, k, lim);
    if (json) {
      j["k"] = k;
      j["count"] = cl.size();
    } else {
      std::cout << cl.size() << '\n';
    }
  } else if (which == "densest") {
    auto best = oracle::brute_densest(g, k, lim);
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (NodeId u : best.nodes) nodes.push_back(g.label(u));
    if (json) {
      j["k"] = k;
      j["density"] = best.density.value();
      j["density_exact"] = best.density.to_fixed2();
      j["clique_count"] = best.density.count;
      j["size"] = best.density.size;
      j["nodes"] = nodes;
    } else {
      std::cout << best.density.to_fixed2() << '\n' << nodes.dump() << '\n';
    }
  } else if (which == "color-paths") {
    auto ord = degeneracy_order(g);
    auto col = greedy_color(g, ord);
    auto paths = oracle::brute_color_paths(g, col, k, lim);
    if (json) {
      j["k"] = k;
      j["count"] = paths.size();
    } else {
      std::cout << paths.size() << '\n';
    }
  }
  if (json) std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-clique densest subgraph search (kCL, PSCTL, SPath)", "dense"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string algo = "psctl", tie = "random";
  app.add_option("input", cfg.input, "Edge-list file");
  app.add_option("--algo", algo, "Solver: kcl, psctl or spath")->capture_default_str();
  app.add_option("--k", cfg.k, "Clique size (>= 2)")->capture_default_str();
  app.add_option("--iters,-T", cfg.iterations, "Frank-Wolfe passes (cap with --converge)")->capture_default_str();
  app.add_option("--samples,-t", cfg.samples, "SPath color-path draws")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--tie", tie, "Tie breaking: random or smallest-id")->capture_default_str();
  app.add_flag("--shuffle-pairs", cfg.shuffle_pairs, "PSCTL: shuffle pair order every pass");
  app.add_flag("--plateau-only", cfg.plateau_only, "Only compare prefixes at rank changes (heuristic)");
  app.add_flag("--converge", cfg.until_converged, "Stop once the extracted prefix repeats");
  app.add_option("--patience", cfg.patience, "With --converge: passes the prefix must repeat")->capture_default_str();
  app.add_flag("--exact", cfg.exact_for_sampled, "SPath: also count the chosen set's cliques exactly");
  app.add_option("--out,-o", cfg.output, "Write the JSON report here instead of stdout");
  bool quiet = false;
  app.add_flag("--quiet,-q", quiet, "No stage timings on stderr");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth (small graphs only)");
  std::string oracle_which, oracle_input;
  std::size_t oracle_k = 3;
  bool oracle_json = false;
  oracle_cmd->add_option("what", oracle_which, "cliques, densest or color-paths")
      ->required()
      ->check(CLI::IsMember({"cliques", "densest", "color-paths"}));
  oracle_cmd->add_option("input", oracle_input, "Edge-list file")->required();
  oracle_cmd->add_option("--k", oracle_k, "Clique or path size")->required();
  oracle_cmd->add_flag("--json", oracle_json, "Print JSON");

  auto* sct_cmd = app.add_subcommand("sct", "Build and serialize the succinct clique tree");
  std::string sct_input, sct_out;
  std::size_t sct_k = 0;
  sct_cmd->add_option("input", sct_input, "Edge-list file")->required();
  sct_cmd->add_option("--k", sct_k, "Filter for this k (0 = unfiltered)");
  sct_cmd->add_option("--out,-o", sct_out, "Binary output file");

  auto* plan_cmd = app.add_subcommand("plan", "Recommend an SPath sample size from a pilot run");
  std::string plan_input;
  std::size_t plan_k = 3;
  double plan_eps = 0.05, plan_theta = 0.1;
  std::uint64_t plan_pilot = 100000, plan_seed = 0;
  plan_cmd->add_option("input", plan_input, "Edge-list file")->required();
  plan_cmd->add_option("--k", plan_k, "Clique size")->required();
  plan_cmd->add_option("--eps", plan_eps, "Failure probability")->capture_default_str();
  plan_cmd->add_option("--theta", plan_theta, "Relative accuracy")->capture_default_str();
  plan_cmd->add_option("--pilot", plan_pilot, "Pilot draws used to estimate the hit rate")->capture_default_str();
  plan_cmd->add_option("--seed", plan_seed, "Random seed")->capture_default_str();

  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random graph");
  std::string gen_kind, gen_out;
  std::size_t gen_n = 12, gen_clique = 0;
  double gen_p = 0.5, gen_avg = 10.0, gen_exp = 2.5;
  std::uint64_t gen_seed = 1;
  gen_cmd->add_option("kind", gen_kind, "gnp, planted or powerlaw")
      ->required()
      ->check(CLI::IsMember({"gnp", "planted", "powerlaw"}));
  gen_cmd->add_option("--n", gen_n, "Node count")->capture_default_str();
  gen_cmd->add_option("--p", gen_p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--clique", gen_clique, "Planted clique size (nodes 0..c-1)")->capture_default_str();
  gen_cmd->add_option("--avg-degree", gen_avg, "powerlaw: mean degree")->capture_default_str();
  gen_cmd->add_option("--exponent", gen_exp, "powerlaw: degree exponent")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out,-o", gen_out, "Output edge list (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*oracle_cmd) return run_oracle(oracle_which, oracle_k, oracle_input, oracle_json);

    if (*sct_cmd) {
      Graph g = load_edge_list_file(sct_input);
      SctForest f = build_sct(g, degeneracy_order(g));
      if (sct_k > 0) f = filter_pairs(f, sct_k);
      if (!sct_out.empty()) {
        std::ofstream out(sct_out, std::ios::binary);
        if (!out) throw Error("cannot write '" + sct_out + "'");
        write_sct(f, out);
      }
      std::cout << "eta " << f.eta() << '\n';
      return 0;
    }

    if (*plan_cmd) {
      Graph g = load_edge_list_file(plan_input);
      auto col = greedy_color(g, degeneracy_order(g));
      Rng rng(plan_seed);
      SampleSet pilot = sample_k_cliques(g, col, plan_k, plan_pilot, rng);
      if (pilot.hits == 0) throw Error("pilot run found no " + std::to_string(plan_k) + "-cliques");
      std::uint64_t t = recommend_samples(plan_eps, plan_theta, g.n(), pilot.hit_rate());
      nlohmann::ordered_json j;
      j["hit_rate"] = pilot.hit_rate();
      j["paths_total"] = kdense::to_string(pilot.paths_total);
      j["clique_estimate"] = static_cast<double>(pilot.clique_estimate());
      j["recommended_t"] = t;
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (*gen_cmd) {
      Graph g;
      if (gen_kind == "gnp") {
        g = gen::gnp(gen_n, gen_p, gen_seed);
      } else if (gen_kind == "planted") {
        std::vector<NodeId> members(gen_clique);
        std::iota(members.begin(), members.end(), NodeId{0});
        g = gen::planted(gen_n, gen_p, members, gen_seed);
      } else {
        g = gen::power_law(gen_n, gen_avg, gen_exp, gen_seed);
      }
      std::ostringstream os;
      write_edge_list(g, os);
      write_text(gen_out, os.str());
      return 0;
    }

    if (cfg.input.empty()) {
      std::cerr << "dense: an input edge list is required\n" << app.help();
      return 2;
    }
    cfg.algorithm = parse_algorithm(algo);
    if (tie == "random")
      cfg.tie = TieMode::Random;
    else if (tie == "smallest-id")
      cfg.tie = TieMode::SmallestId;
    else
      throw DomainError("unknown tie mode '" + tie + "'");

    RunOutcome res = run(cfg, quiet ? nullptr : &std::cerr);
    const DensityReport& rep = res.report;
    std::ostringstream summary;
    summary << to_string(cfg.algorithm) << " k=" << cfg.k << " T=" << res.iterations_used;
    if (rep.empty) {
      summary << (cfg.algorithm == Algorithm::Spath ? " insufficient samples" : " no k-clique") << '\n';
    } else if (rep.mode == DensityMode::Exact) {
      summary << " density=" << rep.exact.to_fixed2() << " (" << rep.exact.count << "/" << rep.exact.size << ")\n";
    } else {
      summary << " density~" << static_cast<double>(*rep.estimated) << " (estimated; sampled "
              << rep.sampled.to_fixed2() << ") size=" << rep.nodes.size();
      if (rep.exact_known) summary << " exact=" << rep.exact.to_fixed2();
      summary << '\n';
    }
    if (cfg.output.empty()) {
      std::cout << res.json.dump() << '\n';
      std::cerr << summary.str();
    } else {
      write_text(cfg.output, res.json.dump() + "\n");
      std::cout << summary.str();
    }
    return 0;
  } catch (const kdense::ParseError& e) {
    std::cerr << "dense: parse error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "dense: " << e.what() << '\n';
    return 1;
  }
}
