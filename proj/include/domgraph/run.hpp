#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace domgraph {

enum class InputFormat { graph6, edgelist };

struct RunConfig {
  std::string command; // gamma|free|dominate|witness|leq|bounds|gen|verify
  std::optional<std::filesystem::path> input_path;
  std::optional<std::string> inline_graph6;
  InputFormat format = InputFormat::graph6;

  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<std::size_t> m;
  std::optional<std::uint32_t> root;
  std::optional<std::size_t> layer;
  std::optional<std::string> family;
  std::optional<std::size_t> size;
  bool check_free = false;

  std::vector<std::string> forbid; // pattern specs for `free`
  std::vector<std::string> left;   // H1 for `leq`
  std::vector<std::string> right;  // H2 for `leq`

  std::vector<std::string> suites{"all"};
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::filesystem::path fixture_dir;

  std::optional<std::filesystem::path> output; // stdout when absent
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input_error = 2;

/// Executes one command and writes a single JSON report to `out` (or the
/// configured output file). Errors go to `err` as "error: <message>" and
/// yield exit_input_error.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace domgraph
