#include "domgraph/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>

namespace domgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kBias = 63;

unsigned char checked_byte(char c, std::size_t pos) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw FormatError(FormatErrorKind::byte_out_of_range,
                      "graph6 byte " + std::to_string(static_cast<int>(b)) + " at offset " +
                          std::to_string(pos) + " is outside [63,126]");
  return static_cast<unsigned char>(b - kBias);
}

// Reads N(n) and returns the offset of the first adjacency byte.
std::size_t read_order(std::string_view s, std::uint64_t &n) {
  if (s.empty())
    throw FormatError(FormatErrorKind::malformed_length, "empty graph6 string");
  auto wide = [&](std::size_t offset, std::size_t count) {
    if (s.size() < offset + count)
      throw FormatError(FormatErrorKind::malformed_length, "truncated graph6 order field");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i)
      value = (value << 6) | checked_byte(s[offset + i], offset + i);
    return value;
  };
  if (s[0] != '~') {
    n = checked_byte(s[0], 0);
    return 1;
  }
  if (s.size() > 1 && s[1] == '~') {
    n = wide(2, 6);
    return 8;
  }
  n = wide(1, 3);
  return 4;
}

void write_order(std::string &out, std::size_t n) {
  auto emit = [&](std::size_t count) {
    for (std::size_t i = count; i-- > 0;)
      out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3F) + kBias));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    emit(3);
  } else {
    out.append("~~");
    emit(6);
  }
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

} // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader))
    text.remove_prefix(kHeader.size());
  std::uint64_t n = 0;
  const std::size_t offset = read_order(text, n);
  if (n > 1u << 20)
    throw FormatError(FormatErrorKind::malformed_length, "graph6 order " + std::to_string(n) + " too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() < offset + bytes)
    throw FormatError(FormatErrorKind::malformed_length,
                      "graph6 body has " + std::to_string(text.size() - offset) + " bytes, expected " +
                          std::to_string(bytes));
  if (text.size() > offset + bytes) {
    // Report a bad byte first so the message points at the real problem.
    for (std::size_t i = offset + bytes; i < text.size(); ++i)
      checked_byte(text[i], i);
    throw FormatError(FormatErrorKind::trailing_garbage,
                      "graph6 string has " + std::to_string(text.size() - offset - bytes) + " trailing bytes");
  }

  std::vector<Edge> es;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = checked_byte(text[offset + k / 6], offset + k / 6);
      if (byte & (0x20 >> (k % 6)))
        es.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const auto last = checked_byte(text[offset + bytes - 1], offset + bytes - 1);
    if (last & ((1u << (6 - bits % 6)) - 1))
      throw FormatError(FormatErrorKind::trailing_garbage, "graph6 padding bits are not zero");
  }
  for (std::uint64_t b = 0; b < bytes; ++b)
    checked_byte(text[offset + b], offset + b);
  return Graph::from_edge_list(n, es);
}

std::string to_graph6(const Graph &g) {
  const std::size_t n = g.order();
  std::string out;
  write_order(out, n);
  unsigned char acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<std::string> read_graph6_lines(std::istream &in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.starts_with(kHeader))
      t.remove_prefix(kHeader.size());
    if (!t.empty())
      lines.emplace_back(t);
  }
  return lines;
}

std::vector<Graph> read_graph6(std::istream &in) {
  std::vector<Graph> out;
  for (const auto &line : read_graph6_lines(in))
    out.push_back(parse_graph6(line));
  return out;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> nums;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
      ++pos;
    if (pos == line.size())
      break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw FormatError(FormatErrorKind::malformed_edge_list,
                        "line " + std::to_string(line_no) + ": expected non-negative integers");
    nums.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return nums;
}

} // namespace

Graph parse_edge_list(std::istream &in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> es;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto nums = parse_numbers(line, line_no);
    if (nums.size() != 2)
      throw FormatError(FormatErrorKind::malformed_edge_list,
                        "line " + std::to_string(line_no) + ": expected two integers");
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      have_header = true;
      if (n > 1u << 20)
        throw FormatError(FormatErrorKind::malformed_edge_list, "vertex count too large");
      continue;
    }
    if (es.size() == m)
      throw FormatError(FormatErrorKind::malformed_edge_list,
                        "more than the declared " + std::to_string(m) + " edges");
    if (nums[0] >= n || nums[1] >= n)
      throw FormatError(FormatErrorKind::malformed_edge_list,
                        "line " + std::to_string(line_no) + ": vertex id outside [0," + std::to_string(n) + ")");
    es.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!have_header)
    throw FormatError(FormatErrorKind::malformed_edge_list, "missing \"n m\" header");
  if (es.size() != m)
    throw FormatError(FormatErrorKind::malformed_edge_list,
                      "declared " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  try {
    return Graph::from_edge_list(n, es);
  } catch (const GraphError &e) {
    throw FormatError(FormatErrorKind::graph_error, e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

} // namespace domgraph
