// Command-line front end. Every subcommand prints one JSON report.
//
//   domgraph gamma --graph6 'F?~v_'
//   domgraph dominate --input g.txt --format edgelist --k 3 --l 2 --m 5
//   domgraph verify --suite ore --suite ckshep --seed 7

#include "domgraph/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

void add_graph_input(CLI::App *cmd, domgraph::RunConfig &cfg) {
  cmd->add_option("--input,-i", cfg.input_path, "Graph file");
  cmd->add_option("--graph6,-g", cfg.inline_graph6, "Inline graph6 string");
  cmd->add_option("--format", cfg.format, "Input format of --input")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, domgraph::InputFormat>{{"graph6", domgraph::InputFormat::graph6},
                                                       {"edgelist", domgraph::InputFormat::edgelist}}));
}

void add_klm(CLI::App *cmd, domgraph::RunConfig &cfg, bool with_m = true) {
  cmd->add_option("--k", cfg.k, "Clique size of the forbidden K*_k");
  cmd->add_option("--l", cfg.l, "Leg count of the forbidden S*_l");
  if (with_m)
    cmd->add_option("--m", cfg.m, "Order of the forbidden path P_m");
}

} // namespace

int main(int argc, char **argv) {
  domgraph::RunConfig cfg;
  cfg.fixture_dir = DOMGRAPH_FIXTURE_DIR;

  CLI::App app{"Domination number tools for forbidden induced subgraph families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for sampled corpora");

  auto *gamma = app.add_subcommand("gamma", "Exact domination number");
  add_graph_input(gamma, cfg);

  auto *free = app.add_subcommand("free", "Induced-subgraph freeness test");
  add_graph_input(free, cfg);
  add_klm(free, cfg);
  free->add_option("--forbid", cfg.forbid, "Pattern: family:size (path, complete, empty, cycle, star, kstar, "
                                           "sstar), claw, or g6:<graph6>");

  auto *dominate = app.add_subcommand("dominate", "Layered dominating set with bound report");
  add_graph_input(dominate, cfg);
  add_klm(dominate, cfg);
  dominate->add_option("--root", cfg.root, "BFS root (default: lowest-id central vertex)");
  dominate->add_flag("--check-free", cfg.check_free, "Also test {K*_k, S*_l, P_m}-freeness");

  auto *witness = app.add_subcommand("witness", "Extract forbidden K*_k / S*_l witnesses");
  add_graph_input(witness, cfg);
  add_klm(witness, cfg, false);
  witness->add_option("--root", cfg.root, "BFS root (default: lowest-id central vertex)");
  witness->add_option("--layer", cfg.layer, "Only this layer (>= 2)");

  auto *leq = app.add_subcommand("leq", "H1 <= H2 between forbidden families");
  leq->add_option("--left", cfg.left, "Patterns of H1");
  leq->add_option("--right", cfg.right, "Patterns of H2");

  auto *bounds = app.add_subcommand("bounds", "Tables of g, f and the domination bound");
  add_klm(bounds, cfg);

  auto *gen = app.add_subcommand("gen", "Generate a named graph");
  gen->add_option("--family", cfg.family, "path, complete, empty, cycle, star, kstar or sstar")->required();
  gen->add_option("--size", cfg.size, "Family parameter")->required();

  auto *verify = app.add_subcommand("verify", "Run acceptance criteria");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "Criterion name or 'all' (repeatable)");
  verify->add_option("--samples", cfg.samples, "Random graphs per sampled pool");
  verify->add_option("--fixtures", cfg.fixture_dir, "Directory holding connected_upto8.g6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return domgraph::exit_input_error;
  }
  if (!suites.empty())
    cfg.suites = suites;
  cfg.command = app.get_subcommands().front()->get_name();
  return domgraph::run(cfg, std::cout, std::cerr);
}
