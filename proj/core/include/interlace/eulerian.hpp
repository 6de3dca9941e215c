#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

/// Directed multigraph with stable edge indices; loops and parallel edges allowed.
///
/// A loop at v counts once as an in-edge and once as an out-edge of v.
struct EulerianDigraph {
  using Edge = std::pair<std::size_t, std::size_t>;  // (tail, head)

  std::size_t n = 0;
  std::vector<Edge> edges;

  std::size_t edge_count() const noexcept { return edges.size(); }
  bool operator==(const EulerianDigraph&) const = default;
};

struct Validation {
  bool ok = true;
  std::string reason;  // first violation, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the 2-in-2-out degree condition at every vertex and connectivity
/// of the whole vertex set. The n = 0 digraph is valid.
Validation validate(const EulerianDigraph& d);

/// One transition choice per vertex. choice[v] == 0 joins the lower-indexed
/// in-edge to the lower-indexed out-edge; 1 crosses them.
struct GraphState {
  std::vector<std::uint8_t> choice;
};

/// Visits all 2^n graph states with their number of closed oriented cycles.
/// An edgeless digraph has a single empty state with 0 cycles. Throws
/// ContractError on any other invalid input.
void enumerate_states(const EulerianDigraph& d,
                      const std::function<void(const GraphState&, std::size_t)>& visit);

/// Histogram of cycle counts over all states (index = cycle count).
std::vector<std::uint64_t> state_histogram(const EulerianDigraph& d);

/// f(d; x) = sum_k f_k x^k; the constant 1 for an edgeless digraph.
UniPoly circuit_partition_poly(const EulerianDigraph& d);

/// m(d; x) recovered from f(d; x) = x m(d; x + 1).
UniPoly martin_poly(const EulerianDigraph& d);

/// Deterministic Euler circuit as a vertex visit sequence of length |E|.
/// Starts at the least vertex and always leaves along the least unused
/// out-edge.
std::vector<std::size_t> euler_circuit(const EulerianDigraph& d);

/// Every Euler circuit, each reported once as the edge-index sequence that
/// begins with out-edge 0 of the least vertex. Stops with CapacityError once
/// more than max_circuits have been found.
std::vector<std::vector<std::size_t>> all_euler_circuits(const EulerianDigraph& d,
                                                        std::size_t max_circuits = 1'000'000);

/// Vertex visit sequence (tails) of an edge-index circuit.
std::vector<std::size_t> visits_of(const EulerianDigraph& d, const std::vector<std::size_t>& circuit);

/// Double occurrence word. word holds symbol ids; labels[id] is the text of
/// the symbol. Every id occurs exactly twice.
struct ChordDiagram {
  std::vector<std::size_t> word;
  std::vector<std::string> labels;

  std::size_t chord_count() const noexcept { return labels.size(); }
  std::string to_string() const;
  bool operator==(const ChordDiagram&) const = default;
};

/// Uses the visit sequence itself as the word; symbol id = vertex number.
ChordDiagram chord_diagram_from_circuit(const std::vector<std::size_t>& visits);

/// Parses whitespace-separated symbols; ids follow first occurrence.
ChordDiagram parse_word(const std::string& text);

/// Interlacement graph: uv is an edge iff u and v alternate in the word.
SimpleGraph circle_graph(const ChordDiagram& cd);

struct TheoremACheck {
  UniPoly circuit_partition{"x"};
  UniPoly from_circle_graph{"x"};  // x * q_N(H; x + 1)
  SimpleGraph circle;
  bool holds = false;
};

/// Compares f(d; x) with x q_N(H; x + 1) where H is the circle graph of the
/// given (or, by default, the deterministic) Euler circuit.
TheoremACheck check_theorem_A(const EulerianDigraph& d,
                              const std::optional<std::vector<std::size_t>>& visits = std::nullopt);
bool verify_theorem_A(const EulerianDigraph& d);

/// Connected 2-in-2-out digraph read off a random cyclic double occurrence
/// word on n symbols. Deterministic in (n, seed).
EulerianDigraph random_eulerian_digraph(std::size_t n, std::uint64_t seed);

}  // namespace interlace
