#include "hspec/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hspec/bounds.hpp"
#include "hspec/clique.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/lagrange.hpp"
#include "hspec/spectral.hpp"
#include "hspec/util.hpp"

namespace hspec::cli {

namespace {

std::vector<int> parse_type_list(const std::string& csv) {
  std::vector<int> types;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      types.push_back(v);
    } catch (const std::exception&) {
      throw Error(errc::parse_error, "bad edge type list: " + csv);
    }
  }
  if (types.empty()) {
    throw Error(errc::parse_error, "edge type list is empty");
  }
  return types;
}

nlohmann::ordered_json spectral_to_json(const SpectralResult& s) {
  nlohmann::ordered_json j;
  j["schema"] = "hspec/1";
  j["rho"] = round12(s.rho);
  j["lambda_lo"] = round12(s.lambda_lo);
  j["lambda_hi"] = round12(s.lambda_hi);
  j["iterations"] = s.iterations;
  j["residual"] = round12(s.residual);
  j["positive_support"] = s.positive_support;
  j["eigenvector_sum"] = round12(principal_eigenvector_sum(s));
  nlohmann::ordered_json comp = nlohmann::ordered_json::array();
  for (double r : s.component_rho) comp.push_back(round12(r));
  j["component_rho"] = comp;
  nlohmann::ordered_json vec = nlohmann::ordered_json::array();
  for (double v : s.eigenvector) vec.push_back(round12(v));
  j["eigenvector"] = vec;
  return j;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"spectral, clique and Lagrangian analysis of general hypergraphs"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  double tol = 1e-10;
  long max_iter = 100000;
  double shift = 1.0;
  int starts = 32;
  std::uint64_t seed = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "hypergraph file (text or JSON)")
        ->required();
  };
  auto add_power_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "power-iteration bracket tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", max_iter, "iteration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--shift", shift, "diagonal shift epsilon")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_opt_flags = [&](CLI::App* cmd) {
    cmd->add_option("--starts", starts, "optimizer start count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis and bound report");
  add_input(analyze);
  add_format(analyze);
  add_power_flags(analyze);
  add_opt_flags(analyze);

  CLI::App* spectral = app.add_subcommand("spectral", "spectral radius and eigenvector");
  add_input(spectral);
  add_format(spectral);
  add_power_flags(spectral);

  CLI::App* lagrangian = app.add_subcommand("lagrangian", "maximize the simplex polynomial");
  add_input(lagrangian);
  add_format(lagrangian);
  add_opt_flags(lagrangian);
  lagrangian->add_option("--tol", tol, "projected-gradient tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* clique = app.add_subcommand("clique", "exact clique number");
  add_input(clique);
  add_format(clique);

  CLI::App* bounds = app.add_subcommand("bounds", "bound report only");
  add_input(bounds);
  add_format(bounds);
  add_power_flags(bounds);
  add_opt_flags(bounds);

  CLI::App* gen = app.add_subcommand("gen", "generate a hypergraph");
  gen->require_subcommand(1);
  int gen_n = 0;
  std::string gen_types;
  double gen_prob = 0.5;
  std::uint64_t gen_seed = 0;
  CLI::App* gen_complete = gen->add_subcommand("complete", "complete R-graph");
  gen_complete->add_option("--n", gen_n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_complete->add_option("--types", gen_types, "comma-separated edge types")
      ->required();
  add_format(gen_complete);
  CLI::App* gen_random = gen->add_subcommand("random", "independent edges with probability p");
  gen_random->add_option("--n", gen_n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_random->add_option("--types", gen_types, "comma-separated edge types")
      ->required();
  gen_random->add_option("--prob", gen_prob, "keep probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", gen_seed, "random seed");
  add_format(gen_random);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hspec");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const bool json = format == "json";

  if (gen_complete->parsed() || gen_random->parsed()) {
    const std::vector<int> types = parse_type_list(gen_types);
    const Hypergraph h = gen_complete->parsed()
                             ? complete_r_graph(gen_n, types)
                             : random_r_graph(gen_n, types, gen_prob, gen_seed);
    out << (json ? to_json_string(h) + "\n" : to_text(h));
    return 0;
  }

  const Hypergraph h = load_hypergraph(path);
  AnalysisConfig cfg;
  cfg.power.tolerance = tol;
  cfg.power.max_iterations = max_iter;
  cfg.power.shift = shift;
  cfg.starts = starts;
  cfg.seed = seed;
  cfg.lagrange_tol = tol;

  if (spectral->parsed()) {
    const SpectralResult s = spectral_radius(h, cfg.power);
    if (json) {
      out << spectral_to_json(s).dump(2) << '\n';
    } else {
      out << "rho " << fmt12(s.rho) << '\n';
      out << "bracket [" << fmt12(s.lambda_lo) << ", " << fmt12(s.lambda_hi)
          << "]\n";
      out << "iterations " << s.iterations << '\n';
      out << "residual " << fmt12(s.residual) << '\n';
      out << "positive_support " << (s.positive_support ? "yes" : "no") << '\n';
      out << "eigenvector";
      for (double v : s.eigenvector) out << ' ' << fmt12(v);
      out << '\n';
    }
    return 0;
  }

  if (lagrangian->parsed()) {
    const LagrangianResult r = maximize_L(h, starts, seed, tol);
    if (json) {
      nlohmann::ordered_json j;
      j["schema"] = "hspec/1";
      j["value"] = round12(r.value);
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (double v : r.maximizer.weights()) w.push_back(round12(v));
      j["maximizer"] = w;
      j["kkt_residual"] = round12(r.kkt_residual);
      j["starts_used"] = r.starts_used;
      out << j.dump(2) << '\n';
    } else {
      out << "value " << fmt12(r.value) << '\n';
      out << "maximizer";
      for (double v : r.maximizer.weights()) out << ' ' << fmt12(v);
      out << '\n';
      out << "kkt_residual " << fmt12(r.kkt_residual) << '\n';
      out << "starts_used " << r.starts_used << '\n';
    }
    return 0;
  }

  if (clique->parsed()) {
    const CliqueResult c = clique_number(h);
    if (json) {
      nlohmann::ordered_json j;
      j["schema"] = "hspec/1";
      j["omega"] = c.omega;
      j["witness"] = c.witness;
      j["nodes_explored"] = c.nodes_explored;
      out << j.dump(2) << '\n';
    } else {
      out << "omega " << c.omega << '\n';
      out << "witness";
      for (int v : c.witness) out << ' ' << v;
      out << '\n';
      out << "nodes_explored " << c.nodes_explored << '\n';
    }
    return 0;
  }

  // analyze / bounds share the pipeline.
  const Analysis a = analyze_hypergraph(h, cfg);
  if (analyze->parsed()) {
    out << (json ? analysis_to_json(a) + "\n" : analysis_to_text(a));
  } else {
    out << (json ? bounds_to_json(a.bounds) + "\n" : bounds_to_text(a.bounds));
  }
  if (!a.bounds.spectral_converged || !a.bounds.lagrangian_converged) {
    err << "warning: analysis incomplete, a solver did not converge\n";
    return 2;
  }
  if (a.bounds.has_violation()) {
    err << "internal assertion failure: a proved bound came back violated\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (bracket [" << fmt12(e.lambda_lo())
        << ", " << fmt12(e.lambda_hi()) << "] after " << e.iterations()
        << " iterations)\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == errc::not_converged) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hspec::cli
