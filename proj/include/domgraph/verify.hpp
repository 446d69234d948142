#pragma once

#include "domgraph/graph.hpp"
#include "domgraph/report.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace domgraph {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 1000; // per random pool
  std::filesystem::path fixture_dir;
};

struct CriterionResult {
  CriterionResult(std::string id_, int number_, std::string title_)
      : id(std::move(id_)), number(number_), title(std::move(title_)) {}

  std::string id;
  int number = 0;
  std::string title;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures; // first few only

  void fail(std::string why);
  void expect(bool ok, const std::string &why) {
    ++checked;
    if (!ok)
      fail(why);
  }
};

Json to_json(const CriterionResult &r);

/// Suite names in acceptance order: paths, families, ore, ckshep, soundness,
/// proposition, ramsey, witness, bounds, oracle, roundtrip.
const std::vector<std::string> &criterion_names();

/// Runs the named criteria ("all" expands to every one) in acceptance order.
/// Throws std::invalid_argument for unknown names and std::runtime_error
/// when the fixture corpus is missing.
std::vector<CriterionResult> run_verification(const std::vector<std::string> &names, const VerifyOptions &opts);

} // namespace domgraph
