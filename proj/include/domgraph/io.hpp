#pragma once

#include "domgraph/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace domgraph {

enum class FormatErrorKind {
  malformed_length,
  byte_out_of_range,
  trailing_garbage,
  malformed_edge_list,
  graph_error,
};

class FormatError : public std::runtime_error {
public:
  FormatError(FormatErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  FormatErrorKind kind() const noexcept { return kind_; }

private:
  FormatErrorKind kind_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header is stripped.
/// Padding bits in the last byte must be zero.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

/// All graph6 lines of a stream; blank lines are skipped.
std::vector<Graph> read_graph6(std::istream &in);
std::vector<std::string> read_graph6_lines(std::istream &in);

/// "n m" header followed by m lines "u v"; '#' starts a comment.
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph &g);

} // namespace domgraph
