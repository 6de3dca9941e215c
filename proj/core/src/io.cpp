#include "interlace/io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

namespace {

// Splits text into non-blank lines of unsigned integer tokens, remembering
// the 1-based source line of each.
struct Line {
  std::size_t number;
  std::vector<std::size_t> values;
};

std::vector<Line> tokenize(std::string_view text, const char* what) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + raw.size(), value);
      const std::size_t used = static_cast<std::size_t>(ptr - (raw.data() + i));
      if (ec != std::errc{} || used == 0 ||
          (i + used < raw.size() && raw[i + used] != ' ' && raw[i + used] != '\t' && raw[i + used] != '\r')) {
        throw ParseError(std::string(what) + " line " + std::to_string(number) +
                         ": expected non-negative integers, got '" + std::string(raw) + "'");
      }
      line.values.push_back(value);
      i += used;
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

struct Header {
  std::size_t n;
  std::size_t m;
};

Header read_header(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw ParseError(std::string(what) + ": empty input");
  const Line& h = lines.front();
  if (h.values.size() != 2) {
    throw ParseError(std::string(what) + " line " + std::to_string(h.number) + ": header must be \"n m\"");
  }
  if (lines.size() - 1 != h.values[1]) {
    throw ParseError(std::string(what) + ": header declares " + std::to_string(h.values[1]) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  return {h.values[0], h.values[1]};
}

std::pair<std::size_t, std::size_t> read_pair(const Line& line, std::size_t n, const char* what) {
  if (line.values.size() != 2) {
    throw ParseError(std::string(what) + " line " + std::to_string(line.number) + ": expected \"u v\"");
  }
  for (std::size_t v : line.values) {
    if (v >= n) {
      throw ParseError(std::string(what) + " line " + std::to_string(line.number) + ": vertex " +
                       std::to_string(v) + " out of range for n = " + std::to_string(n));
    }
  }
  return {line.values[0], line.values[1]};
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text, "graph");
  const Header h = read_header(lines, "graph");
  if (h.n > kMaxVertices) {
    throw CapacityError("graph: " + std::to_string(h.n) + " vertices; at most " + std::to_string(kMaxVertices) +
                        " supported");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  bool loops = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = read_pair(lines[i], h.n, "graph");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw ParseError("graph line " + std::to_string(lines[i].number) + ": duplicate edge " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    loops = loops || u == v;
    edges.emplace_back(u, v);
  }
  return SimpleGraph::from_edges(h.n, edges, loops);
}

std::string format_graph(const SimpleGraph& g) {
  const auto edges = g.edges();
  std::ostringstream os;
  os << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::string graph_to_json(const SimpleGraph& g) {
  std::ostringstream os;
  os << "{\"n\":" << g.n() << ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << '[' << u << ',' << v << ']';
    first = false;
  }
  os << "]}";
  return os.str();
}

EulerianDigraph parse_digraph(std::string_view text) {
  const auto lines = tokenize(text, "digraph");
  const Header h = read_header(lines, "digraph");
  EulerianDigraph d{h.n, {}};
  d.edges.reserve(h.m);
  for (std::size_t i = 1; i < lines.size(); ++i) d.edges.push_back(read_pair(lines[i], h.n, "digraph"));
  return d;
}

std::string format_digraph(const EulerianDigraph& d) {
  std::ostringstream os;
  os << d.n << ' ' << d.edges.size() << '\n';
  for (auto [t, h] : d.edges) os << t << ' ' << h << '\n';
  return os.str();
}

}  // namespace interlace
