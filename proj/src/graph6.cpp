#include "sunspot/graph6.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sunspot/errors.hpp"

namespace sunspot {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int value_at(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw Graph6ParseError("character out of graph6 range 63..126", i);
  return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (base < text.size() && (text[base] == ' ' || text[base] == '\t')) ++base;
  std::string_view s = text.substr(base);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw Graph6ParseError("empty graph6 string", base);

  // Vertex count: one byte for n <= 62, '~' + 3 bytes (18 bits) up to 258047.
  std::size_t pos = 0;
  long long n = 0;
  int v0 = value_at(s, pos);
  if (v0 < 63) {
    n = v0;
    pos = 1;
  } else {
    if (s.size() < 2) throw Graph6ParseError("truncated vertex count", base + 1);
    if (value_at(s, 1) == 63)
      throw Graph6ParseError("8-byte vertex counts not supported", base + 1);
    if (s.size() < 4) throw Graph6ParseError("truncated vertex count", base + s.size());
    n = (long long(value_at(s, 1)) << 12) | (long long(value_at(s, 2)) << 6) |
        long long(value_at(s, 3));
    pos = 4;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = std::size_t((bits + 5) / 6);
  if (s.size() != pos + body)
    throw Graph6ParseError("bad length: expected " + std::to_string(pos + body) +
                               " bytes for n=" + std::to_string(n) + ", got " +
                               std::to_string(s.size()),
                           base + std::min(s.size(), pos + body));

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (std::size_t i = 0; i < body; ++i) {
    int val = value_at(s, pos + i);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool on = (val >> b) & 1;
      if (bit >= bits) {
        if (on) throw Graph6ParseError("nonzero padding bits", base + pos + i);
        continue;
      }
      if (!on) continue;
      // Column order: bit index runs over (0,1),(0,2),(1,2),(0,3),...
      long long k = bit;
      int col = 1;
      while (k >= col) k -= col++;
      edges.emplace_back(int(k), col);
    }
  }
  return Graph(int(n), edges);
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back(char(126));
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    throw PreconditionError("graph too large for supported graph6 sizes");
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int r = 0; r < col; ++r) {
      acc = (acc << 1) | (g.adjacent(r, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw PreconditionError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw PreconditionError("edge list: negative header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw PreconditionError("edge list: expected " + std::to_string(m) +
                              " edges, got " + std::to_string(i));
    edges.emplace_back(int(u), int(v));
  }
  return Graph(int(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = line;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) continue;
    if (s == kHeader) continue;
    out.push_back(parse_graph6(s));
  }
  return out;
}

std::vector<Graph> load_graphs(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw PreconditionError("cannot open " + path);
    content.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  // A first line of exactly two decimal integers marks an edge list; graph6
  // bytes are all >= 63, so the formats cannot collide.
  std::istringstream stream(content);
  std::string first;
  while (std::getline(stream, first))
    if (first.find_first_not_of(" \t\r\n") != std::string::npos) break;
  std::istringstream probe(first);
  long long a, b;
  char extra;
  const bool edge_list = bool(probe >> a >> b) && !(probe >> extra);
  stream.clear();
  stream.seekg(0);
  if (edge_list) return {parse_edge_list(stream)};
  return read_graph6_lines(stream);
}

} // namespace sunspot
