#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "interlace/gf2.hpp"

namespace interlace {

/// Vertex subsets are bit masks: bit v set iff v is in the set.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 63;

/// Labeled undirected graph on vertices 0..n-1 with adjacency bit rows.
///
/// Loops are diagonal bits and may only be present when loops_allowed() is
/// true. The adjacency relation is kept symmetric by every mutator.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n, bool loops_allowed = false);

  static SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                bool loops_allowed = false);
  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph empty(std::size_t n) { return SimpleGraph(n); }

  std::size_t n() const noexcept { return adj_.size(); }
  bool loops_allowed() const noexcept { return loops_allowed_; }
  VertexSet all() const noexcept;

  VertexSet neighbors(std::size_t v) const { return adj_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const;
  bool has_loop(std::size_t v) const { return has_edge(v, v); }
  bool has_loops() const noexcept;
  std::size_t edge_count() const noexcept;

  /// Undirected edges (u <= v), sorted lexicographically; loops appear as (v, v).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void set_edge(std::size_t u, std::size_t v, bool present);
  void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
  void toggle_edge(std::size_t u, std::size_t v);

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(std::size_t v) const;

  std::vector<VertexSet> adj_;
  bool loops_allowed_ = false;
};

/// XOR of the neighborhoods of the vertices in p: the vertices adjacent to
/// an odd number of members of p.
VertexSet neighborhood_set(const SimpleGraph& g, VertexSet p);

/// G^{vw}: toggles every pair lying in two distinct classes among the other
/// neighbors of v only, of w only, and of both. Requires vw to be an edge of
/// a loopless graph.
SimpleGraph pivot(const SimpleGraph& g, std::size_t v, std::size_t w);

/// Same class toggling as pivot, but only requires v and w themselves to be
/// unlooped; loops elsewhere are carried through unchanged. Used by the
/// two-variable reduction.
SimpleGraph pivot_unlooped_edge(const SimpleGraph& g, std::size_t v, std::size_t w);

/// G*v: complements the subgraph induced on the neighbors of v other than v.
/// When v carries a loop, the loops of those neighbors are toggled as well.
SimpleGraph local_complement(const SimpleGraph& g, std::size_t v);

/// Exchanges the labels of u and v.
SimpleGraph swap_labels(const SimpleGraph& g, std::size_t u, std::size_t v);

/// Subgraph on w, re-indexed in increasing vertex order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet w);

/// |W| x |W| adjacency matrix of G[W], rows in increasing vertex order;
/// loops land on the diagonal.
GF2Matrix adjacency_matrix(const SimpleGraph& g, VertexSet w);
GF2Matrix adjacency_matrix(const SimpleGraph& g);

/// True iff every vertex of G|P has even degree inside G|P.
bool is_even_subgraph(const SimpleGraph& g, VertexSet p);

SimpleGraph delete_vertex(const SimpleGraph& g, std::size_t v);

/// Byte encoding of (n, loops flag, adjacency upper triangle) for memo tables.
std::string canonical_key(const SimpleGraph& g);

/// Labeled loopless graph on n vertices whose edge set is given by the bits
/// of index over the pairs (0,1), (0,2), ..., (n-2,n-1).
SimpleGraph graph_from_index(std::size_t n, std::uint64_t index);

/// Number of vertex pairs, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Each pair is an edge with probability edge_p; each vertex gets a loop
/// with probability loop_p (loops_allowed is set iff loop_p > 0).
SimpleGraph random_graph(std::size_t n, double edge_p, std::mt19937_64& rng, double loop_p = 0.0);

}  // namespace interlace
