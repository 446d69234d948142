#include "domgraph/run.hpp"

#include "domgraph/bounds.hpp"
#include "domgraph/corpus.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/io.hpp"
#include "domgraph/report.hpp"
#include "domgraph/subgraph.hpp"
#include "domgraph/verify.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace domgraph {

namespace {

// Bad user input: unreadable files, malformed graphs, missing parameters.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

Graph family_graph(std::string_view family, std::size_t size) {
  if (family == "path")
    return gen_path(size);
  if (family == "complete")
    return gen_complete(size);
  if (family == "empty")
    return gen_empty(size);
  if (family == "cycle")
    return gen_cycle(size);
  if (family == "star")
    return gen_star(size);
  if (family == "kstar")
    return gen_k_star(size);
  if (family == "sstar")
    return gen_s_star(size);
  throw InputError("unknown family '" + std::string(family) +
                   "' (expected path, complete, empty, cycle, star, kstar or sstar)");
}

// "kstar:3", "path:5", "claw", "g6:<graph6>"
Graph pattern_from_spec(std::string_view spec) {
  if (spec == "claw")
    return gen_star(3);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw InputError("pattern '" + std::string(spec) + "' must look like family:size, claw or g6:<graph6>");
  const auto head = spec.substr(0, colon);
  const auto tail = spec.substr(colon + 1);
  if (head == "g6")
    return parse_graph6(tail);
  return family_graph(head, parse_count(tail, "pattern size"));
}

std::vector<Graph> patterns_from_specs(const std::vector<std::string> &specs) {
  std::vector<Graph> out;
  for (const auto &s : specs)
    out.push_back(pattern_from_spec(s));
  return out;
}

Graph load_input(const RunConfig &c) {
  if (c.input_path && c.inline_graph6)
    throw InputError("give either --input or --graph6, not both");
  if (c.inline_graph6) {
    if (c.format != InputFormat::graph6)
      throw InputError("--graph6 requires --format graph6");
    return parse_graph6(*c.inline_graph6);
  }
  if (!c.input_path)
    throw InputError("command '" + c.command + "' needs --input <path> or --graph6 <string>");
  std::ifstream in(*c.input_path);
  if (!in)
    throw InputError("cannot read input file " + c.input_path->string());
  if (c.format == InputFormat::edgelist)
    return parse_edge_list(in);
  const auto lines = read_graph6_lines(in);
  if (lines.size() != 1)
    throw InputError("expected exactly one graph6 line in " + c.input_path->string() + ", found " +
                     std::to_string(lines.size()));
  return parse_graph6(lines.front());
}

std::size_t require(const std::optional<std::size_t> &v, const char *flag, const std::string &command) {
  if (!v)
    throw InputError("command '" + command + "' needs " + flag);
  if (*v == 0)
    throw InputError(std::string(flag) + " must be positive");
  return *v;
}

std::optional<BoundParams> optional_params(const RunConfig &c) {
  const int given = (c.k ? 1 : 0) + (c.l ? 1 : 0) + (c.m ? 1 : 0);
  if (given == 0)
    return std::nullopt;
  if (given != 3)
    throw InputError("--k, --l and --m must be given together");
  return BoundParams{require(c.k, "--k", c.command), require(c.l, "--l", c.command),
                     require(c.m, "--m", c.command)};
}

Json base_report(const RunConfig &c, const Json &input, const Json &canonical = nullptr) {
  Json j;
  j["command"] = c.command;
  j["input"] = input;
  j["input_canonical"] = canonical;
  Json params = Json::object();
  if (c.k)
    params["k"] = *c.k;
  if (c.l)
    params["l"] = *c.l;
  if (c.m)
    params["m"] = *c.m;
  if (c.root)
    params["root"] = *c.root;
  if (c.layer)
    params["layer"] = *c.layer;
  if (c.family)
    params["family"] = *c.family;
  if (c.size)
    params["size"] = *c.size;
  if (!c.forbid.empty())
    params["forbid"] = c.forbid;
  if (!c.left.empty())
    params["left"] = c.left;
  if (!c.right.empty())
    params["right"] = c.right;
  if (c.command == "dominate")
    params["check_free"] = c.check_free;
  if (c.command == "verify") {
    params["suites"] = c.suites;
    params["samples"] = c.samples;
  }
  params["seed"] = c.seed;
  j["parameters"] = std::move(params);
  return j;
}

int dispatch(const RunConfig &c, Json &report) {
  const auto &cmd = c.command;
  if (cmd == "gen") {
    if (!c.family)
      throw InputError("command 'gen' needs --family");
    const Graph g = family_graph(*c.family, c.size.value_or(0));
    report = base_report(c, nullptr);
    Json result;
    result["graph6"] = to_graph6(g);
    result["order"] = g.order();
    result["edges"] = g.edge_count();
    report["result"] = std::move(result);
    return exit_ok;
  }
  if (cmd == "bounds") {
    const std::size_t k = require(c.k, "--k", cmd);
    const std::size_t l = require(c.l, "--l", cmd);
    const std::size_t m = require(c.m, "--m", cmd);
    report = base_report(c, nullptr);
    Json result;
    result["ramsey"] = to_json(ramsey_upper(k, l));
    Json table = Json::array();
    for (std::size_t i = 1; i + 2 <= std::max<std::size_t>(m, 3); ++i) {
      Json row;
      row["i"] = i;
      row["g"] = to_json(g_value(k, l, i));
      row["f"] = i >= 2 ? to_json(f_value(k, l, i)) : Json(nullptr);
      table.push_back(std::move(row));
    }
    result["table"] = std::move(table);
    result["theorem_bound"] = to_json(theorem_bound(k, l, m));
    result["certificate"] = to_string(theorem_bound_kind(k, l, m));
    report["result"] = std::move(result);
    return exit_ok;
  }
  if (cmd == "leq") {
    if (c.left.empty() && c.right.empty())
      throw InputError("command 'leq' needs --left and/or --right patterns");
    const auto h1 = patterns_from_specs(c.left);
    const auto h2 = patterns_from_specs(c.right);
    Json input;
    Json left = Json::array();
    Json right = Json::array();
    for (const auto &g : h1)
      left.push_back(to_graph6(g));
    for (const auto &g : h2)
      right.push_back(to_graph6(g));
    input["left"] = std::move(left);
    input["right"] = std::move(right);
    report = base_report(c, input);
    Json result;
    result["leq"] = leq_relation(h1, h2);
    report["result"] = std::move(result);
    return exit_ok;
  }
  if (cmd == "verify") {
    VerifyOptions opts{c.seed, c.samples, c.fixture_dir};
    const auto results = run_verification(c.suites, opts);
    report = base_report(c, nullptr);
    bool all = true;
    Json list = Json::array();
    for (const auto &r : results) {
      all = all && r.passed;
      list.push_back(to_json(r));
    }
    Json result;
    result["passed"] = all;
    result["criteria_run"] = results.size();
    report["result"] = std::move(result);
    report["criteria"] = std::move(list);
    return all ? exit_ok : exit_violation;
  }

  // Commands below act on one input graph.
  if (cmd != "gamma" && cmd != "free" && cmd != "dominate" && cmd != "witness")
    throw InputError("unknown command '" + cmd + "'");
  const Graph g = load_input(c);
  report = base_report(c, to_graph6(g), canonical_graph6(g));
  if (c.root)
    g.check_vertex(*c.root);

  if (cmd == "gamma") {
    report["result"] = to_json(gamma_exact(g));
  } else if (cmd == "free") {
    std::vector<Graph> patterns;
    if (const auto p = optional_params(c))
      patterns = forbidden_family(*p);
    const auto extra = patterns_from_specs(c.forbid);
    patterns.insert(patterns.end(), extra.begin(), extra.end());
    if (patterns.empty())
      throw InputError("command 'free' needs --forbid patterns or --k/--l/--m");
    const auto fr = is_free(g, patterns);
    Json result;
    result["free"] = fr.free;
    result["violated_pattern"] = fr.violated_pattern ? Json(*fr.violated_pattern) : Json(nullptr);
    result["pattern_graph6"] = fr.violated_pattern ? Json(to_graph6(patterns[*fr.violated_pattern])) : Json(nullptr);
    result["embedding"] = fr.embedding ? Json(fr.embedding->map) : Json(nullptr);
    report["result"] = std::move(result);
  } else if (cmd == "dominate") {
    const auto params = optional_params(c);
    if (c.check_free && !params)
      throw InputError("--check-free needs --k, --l and --m");
    std::optional<Vertex> root;
    if (c.root)
      root = *c.root;
    const auto built = construct_dominating_set(g, {root, params, c.check_free});
    Json result;
    result["dominating_set"] = to_json(built.dominating_set);
    result["size"] = built.dominating_set.size();
    result["is_dominating"] = is_dominating(g, built.dominating_set);
    report["result"] = std::move(result);
    report["bound_report"] = to_json(built.report);
  } else {
    const std::size_t k = require(c.k, "--k", cmd);
    const std::size_t l = require(c.l, "--l", cmd);
    require_connected(g);
    const Vertex root = c.root ? *c.root : central_vertex(g);
    const auto layers = bfs_layers(g, root);
    std::vector<ForbiddenWitness> found;
    if (c.layer) {
      if (*c.layer < 2)
        throw InputError("--layer must be at least 2");
      if (auto w = extract_forbidden_witness(g, layers, *c.layer, k, l))
        found.push_back(std::move(*w));
    } else {
      found = extract_all_witnesses(g, layers, k, l);
    }
    Json result;
    result["root"] = root;
    result["depth"] = layers.depth();
    result["found"] = found.size();
    report["result"] = std::move(result);
    Json ws = Json::array();
    for (const auto &w : found)
      ws.push_back(to_json(w));
    report["witnesses"] = std::move(ws);
  }
  return exit_ok;
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  Json report;
  int status = exit_ok;
  try {
    status = dispatch(config, report);
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const FormatError &e) {
    err << "error: malformed graph: " << e.what() << '\n';
    return exit_input_error;
  } catch (const GraphError &e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_input_error;
  } catch (const ExtractionContradiction &e) {
    err << "error: internal contradiction: " << e.what() << '\n';
    return exit_violation;
  } catch (const BoundOverflow &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::runtime_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  const std::string text = report.dump(2) + "\n";
  if (config.output) {
    std::ofstream file(*config.output);
    if (!file) {
      err << "error: cannot write report to " << config.output->string() << '\n';
      return exit_input_error;
    }
    file << text;
  } else {
    out << text;
  }
  return status;
}

} // namespace domgraph
