#include "interlace/graph.hpp"

#include <bit>
#include <string>

#include "interlace/error.hpp"

namespace interlace {

namespace {

constexpr VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

// Uniform double in [0, 1) from the top 53 bits; keeps seeded streams
// identical across standard libraries.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_loopless(const SimpleGraph& g, const char* op) {
  if (g.has_loops()) throw ContractError(std::string(op) + ": graph has loops");
}

SimpleGraph pivot_impl(const SimpleGraph& g, std::size_t v, std::size_t w) {
  if (v >= g.n() || w >= g.n()) throw ContractError("pivot: vertex out of range");
  if (v == w || !g.has_edge(v, w)) {
    throw ContractError("pivot: " + std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
  }
  const VertexSet ends = bit(v) | bit(w);
  const VertexSet nv = g.neighbors(v) & ~ends;
  const VertexSet nw = g.neighbors(w) & ~ends;
  const VertexSet only_v = nv & ~nw;
  const VertexSet only_w = nw & ~nv;
  const VertexSet both = nv & nw;

  SimpleGraph out = g;
  auto toggle_across = [&](VertexSet from, VertexSet to) {
    for (VertexSet s = from; s; s &= s - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(s));
      for (VertexSet t = to; t; t &= t - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(t));
        out.toggle_edge(u, x);
      }
    }
  };
  toggle_across(only_v, only_w);
  toggle_across(only_v, both);
  toggle_across(only_w, both);
  return out;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, bool loops_allowed) : adj_(n, 0), loops_allowed_(loops_allowed) {
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; at most " +
                        std::to_string(kMaxVertices) + " supported");
  }
}

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    bool loops_allowed) {
  SimpleGraph g(n, loops_allowed);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

VertexSet SimpleGraph::all() const noexcept { return n() == 0 ? 0 : (bit(n()) - 1); }

void SimpleGraph::check_vertex(std::size_t v) const {
  if (v >= n()) {
    throw ContractError("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(n()) + " vertices");
  }
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

bool SimpleGraph::has_loops() const noexcept {
  for (std::size_t v = 0; v < n(); ++v)
    if ((adj_[v] >> v) & 1U) return true;
  return false;
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  std::size_t loops = 0;
  for (std::size_t v = 0; v < n(); ++v) {
    twice += static_cast<std::size_t>(std::popcount(adj_[v]));
    loops += (adj_[v] >> v) & 1U;
  }
  return (twice - loops) / 2 + loops;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n(); ++u) {
    for (VertexSet s = adj_[u] & ~(bit(u) - 1); s; s &= s - 1) {
      out.emplace_back(u, static_cast<std::size_t>(std::countr_zero(s)));
    }
  }
  return out;
}

void SimpleGraph::set_edge(std::size_t u, std::size_t v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v && present && !loops_allowed_) {
    throw ContractError("loop at vertex " + std::to_string(v) + " in a graph without loops");
  }
  if (present) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  } else {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
}

void SimpleGraph::toggle_edge(std::size_t u, std::size_t v) { set_edge(u, v, !has_edge(u, v)); }

VertexSet neighborhood_set(const SimpleGraph& g, VertexSet p) {
  if ((p & ~g.all()) != 0) throw ContractError("neighborhood_set: vertex out of range");
  VertexSet out = 0;
  for (VertexSet s = p; s; s &= s - 1) out ^= g.neighbors(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

SimpleGraph pivot(const SimpleGraph& g, std::size_t v, std::size_t w) {
  check_loopless(g, "pivot");
  return pivot_impl(g, v, w);
}

SimpleGraph pivot_unlooped_edge(const SimpleGraph& g, std::size_t v, std::size_t w) {
  if (v < g.n() && w < g.n() && (g.has_loop(v) || g.has_loop(w))) {
    throw ContractError("pivot: endpoints must be unlooped");
  }
  return pivot_impl(g, v, w);
}

SimpleGraph local_complement(const SimpleGraph& g, std::size_t v) {
  if (v >= g.n()) throw ContractError("local_complement: vertex out of range");
  const bool looped = g.has_loop(v);
  const VertexSet nbrs = g.neighbors(v) & ~bit(v);
  SimpleGraph out = g;
  for (VertexSet s = nbrs; s; s &= s - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(s));
    for (VertexSet t = nbrs & ~(bit(u + 1) - 1); t; t &= t - 1) {
      out.toggle_edge(u, static_cast<std::size_t>(std::countr_zero(t)));
    }
    if (looped) out.toggle_edge(u, u);
  }
  return out;
}

SimpleGraph swap_labels(const SimpleGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.n() || v >= g.n()) throw ContractError("swap_labels: vertex out of range");
  auto relabel = [&](std::size_t x) { return x == u ? v : (x == v ? u : x); };
  SimpleGraph out(g.n(), g.loops_allowed());
  for (auto [a, b] : g.edges()) out.add_edge(relabel(a), relabel(b));
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet w) {
  if ((w & ~g.all()) != 0) throw ContractError("induced_subgraph: vertex out of range");
  std::vector<std::size_t> keep;
  for (VertexSet s = w; s; s &= s - 1) keep.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  SimpleGraph out(keep.size(), g.loops_allowed());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

GF2Matrix adjacency_matrix(const SimpleGraph& g, VertexSet w) {
  if ((w & ~g.all()) != 0) throw ContractError("adjacency_matrix: vertex out of range");
  std::vector<std::size_t> keep;
  for (VertexSet s = w; s; s &= s - 1) keep.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  GF2Matrix m(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) m.set(i, j, true);
  return m;
}

GF2Matrix adjacency_matrix(const SimpleGraph& g) { return adjacency_matrix(g, g.all()); }

bool is_even_subgraph(const SimpleGraph& g, VertexSet p) {
  if ((p & ~g.all()) != 0) throw ContractError("is_even_subgraph: vertex out of range");
  for (VertexSet s = p; s; s &= s - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    if (std::popcount(g.neighbors(v) & p & ~bit(v)) % 2 != 0) return false;
  }
  return true;
}

SimpleGraph delete_vertex(const SimpleGraph& g, std::size_t v) {
  if (v >= g.n()) throw ContractError("delete_vertex: vertex out of range");
  return induced_subgraph(g, g.all() & ~bit(v));
}

std::string canonical_key(const SimpleGraph& g) {
  std::string key;
  key.reserve(1 + g.n() * 8);
  key.push_back(static_cast<char>(g.n() | (g.loops_allowed() ? 0x80 : 0)));
  for (std::size_t v = 0; v < g.n(); ++v) {
    const VertexSet upper = g.neighbors(v) >> v;  // includes the diagonal
    const std::size_t bytes = (g.n() - v + 7) / 8;
    for (std::size_t b = 0; b < bytes; ++b) key.push_back(static_cast<char>((upper >> (8 * b)) & 0xFF));
  }
  return key;
}

SimpleGraph graph_from_index(std::size_t n, std::uint64_t index) {
  SimpleGraph g(n);
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++k)
      if ((index >> k) & 1U) g.add_edge(u, v);
  return g;
}

SimpleGraph random_graph(std::size_t n, double edge_p, std::mt19937_64& rng, double loop_p) {
  SimpleGraph g(n, loop_p > 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    if (loop_p > 0.0 && unit_draw(rng) < loop_p) g.add_edge(u, u);
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit_draw(rng) < edge_p) g.add_edge(u, v);
  }
  return g;
}

}  // namespace interlace
