#include "subcomp/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kMaxSmall = 62;
constexpr std::size_t kMaxMedium = 258047;
constexpr std::uint64_t kMaxLarge = (std::uint64_t{1} << 36) - 1;
// Dense bit rows make anything larger impractical.
constexpr std::uint64_t kMaxDecodable = 1 << 16;

auto sextet(char c) -> int {
  auto value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return value - kBias;
}

auto read_big_endian(std::string_view text, std::size_t offset, std::size_t count) -> std::uint64_t {
  if (text.size() < offset + count) throw ParseError("graph6: truncated vertex count");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(sextet(text[offset + i]));
  return value;
}

void write_big_endian(std::string& out, std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) out += static_cast<char>(((value >> (6 * i)) & 63) + kBias);
}

// Strips '#' comments and splits on whitespace, keeping line structure.
auto tokenize_lines(std::string_view text) -> std::vector<std::vector<std::string_view>> {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = eol + 1;
  }
  return lines;
}

auto parse_count(std::string_view token, const char* what) -> std::size_t {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(std::string("edge list: invalid ") + what + " '" + std::string(token) + "'");
  return value;
}

}  // namespace

auto decode_graph6(std::string_view text) -> Graph {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty string");

  std::uint64_t n = 0;
  std::size_t offset = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    offset = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    n = read_big_endian(text, 2, 6);
    offset = 8;
  } else {
    n = read_big_endian(text, 1, 3);
    offset = 4;
  }

  if (n > kMaxDecodable) throw ParseError("graph6: unsupported size n=" + std::to_string(n));
  const auto bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const auto expected = (bits + 5) / 6;
  if (text.size() - offset != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data characters for n=" + std::to_string(n) +
                     ", found " + std::to_string(text.size() - offset));

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      auto value = sextet(text[offset + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    auto last = sextet(text.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

auto encode_graph6(const Graph& g) -> std::string {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= kMaxSmall) {
    out += static_cast<char>(n + kBias);
  } else if (n <= kMaxMedium) {
    out += '~';
    write_big_endian(out, n, 3);
  } else if (n <= kMaxLarge) {
    out += "~~";
    write_big_endian(out, n, 6);
  } else {
    throw GraphError("graph6: graph too large to encode");
  }

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

auto parse_edge_list(std::string_view text) -> Graph {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("edge list: missing header line \"n m\"");
  if (lines[0].size() != 2) throw ParseError("edge list: header must be \"n m\"");
  auto n = parse_count(lines[0][0], "vertex count");
  auto m = parse_count(lines[0][1], "edge count");
  if (lines.size() - 1 != m)
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw ParseError("edge list: line " + std::to_string(i + 1) + " must be \"u v\"");
    edges.emplace_back(parse_count(lines[i][0], "vertex"), parse_count(lines[i][1], "vertex"));
  }
  try {
    return Graph(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

auto format_edge_list(const Graph& g) -> std::string {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

auto graph_digest(const Graph& g) -> std::string {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : encode_graph6(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

}  // namespace subcomp
