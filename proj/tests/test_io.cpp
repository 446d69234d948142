#include "domgraph/corpus.hpp"
#include "domgraph/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace domgraph;

namespace {

FormatErrorKind format_kind(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const FormatError &e) {
    return e.kind();
  }
  FAIL("expected FormatError for ", text);
  return FormatErrorKind::graph_error;
}

} // namespace

TEST_CASE("graph6 small examples") {
  CHECK(parse_graph6("A_") == gen_complete(2));
  CHECK(to_graph6(gen_complete(2)) == "A_");
  CHECK(parse_graph6("D??") == gen_empty(5));
  CHECK(to_graph6(gen_empty(5)) == "D??");
  CHECK(parse_graph6("?") == gen_empty(0));
  CHECK(parse_graph6("@") == gen_empty(1));
  CHECK(parse_graph6("Bw") == gen_complete(3));
  CHECK(parse_graph6(">>graph6<<A_") == gen_complete(2));
}

TEST_CASE("graph6 rejects malformed input") {
  // Five vertices need ten bits, so two body bytes.
  CHECK(format_kind("D?") == FormatErrorKind::malformed_length);
  CHECK(format_kind("D???") == FormatErrorKind::trailing_garbage);
  CHECK(format_kind("") == FormatErrorKind::malformed_length);
  CHECK(format_kind("A\x7f") == FormatErrorKind::byte_out_of_range);
  CHECK(format_kind("A ") == FormatErrorKind::byte_out_of_range);
  // 'A' + 0b100001: a padding bit is set.
  CHECK(format_kind("A`") == FormatErrorKind::trailing_garbage);
}

TEST_CASE("graph6 long order forms") {
  for (std::size_t n : {62u, 63u, 64u, 100u, 258u}) {
    const Graph g = gen_path(n);
    const std::string text = to_graph6(g);
    if (n >= 63)
      CHECK(text.front() == '~');
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 round trip over generators and random graphs") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (const Graph &g : {gen_path(n), gen_complete(n), gen_empty(n), gen_k_star(n), gen_s_star(n)})
      CHECK(parse_graph6(to_graph6(g)) == g);

  GraphSampler sampler(7);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = sampler.erdos_renyi(sampler.uniform(0, 70), sampler.unit());
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("read_graph6 skips blanks and trims") {
  std::istringstream in("A_\n\n  D??  \r\nBw\n");
  const auto gs = read_graph6(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0] == gen_complete(2));
  CHECK(gs[1] == gen_empty(5));
  CHECK(gs[2] == gen_complete(3));
}

TEST_CASE("edge list format") {
  const Graph p3 = parse_edge_list("# a path\n3 2\n0 1\n1 2\n");
  CHECK(p3 == gen_path(3));
  CHECK(parse_edge_list(to_edge_list(gen_k_star(4))) == gen_k_star(4));

  auto kind = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const FormatError &e) {
      return e.kind();
    }
    return FormatErrorKind::malformed_length;
  };
  CHECK(kind("3 2\n0 1\n") == FormatErrorKind::malformed_edge_list);
  CHECK(kind("3 1\n0 x\n") == FormatErrorKind::malformed_edge_list);
  CHECK(kind("") == FormatErrorKind::malformed_edge_list);
  CHECK(kind("3 1\n0 3\n") == FormatErrorKind::malformed_edge_list);
  CHECK(kind("3 1\n1 1\n") == FormatErrorKind::graph_error);
  CHECK(kind("3 2\n0 1\n1 0\n") == FormatErrorKind::graph_error);
}
