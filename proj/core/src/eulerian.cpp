#include "interlace/eulerian.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "interlace/error.hpp"
#include "interlace/interlace.hpp"
#include "interlace/parallel.hpp"

namespace interlace {

namespace {

// Largest vertex count for the 2^n state enumeration.
constexpr std::size_t kMaxStateVertices = 30;

struct Incidence {
  std::vector<std::array<std::size_t, 2>> in;   // in[v] = in-edges of v, ascending
  std::vector<std::array<std::size_t, 2>> out;  // out[v] = out-edges of v, ascending
};

// Requires a valid digraph.
Incidence incidence(const EulerianDigraph& d) {
  Incidence inc{std::vector<std::array<std::size_t, 2>>(d.n), std::vector<std::array<std::size_t, 2>>(d.n)};
  std::vector<std::size_t> in_fill(d.n, 0);
  std::vector<std::size_t> out_fill(d.n, 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto [tail, head] = d.edges[e];
    inc.out[tail][out_fill[tail]++] = e;
    inc.in[head][in_fill[head]++] = e;
  }
  return inc;
}

void require_valid(const EulerianDigraph& d, const char* op) {
  if (auto v = validate(d); !v) throw ContractError(std::string(op) + ": " + v.reason);
}

void require_valid_nonempty(const EulerianDigraph& d, const char* op) {
  require_valid(d, op);
  if (d.edges.empty()) throw ContractError(std::string(op) + ": digraph has no edges");
}

void require_state_size(const EulerianDigraph& d) {
  if (d.n > kMaxStateVertices) {
    throw CapacityError("state enumeration: " + std::to_string(d.n) + " vertices exceeds the cap of " +
                        std::to_string(kMaxStateVertices));
  }
}

// Number of cycles of the successor permutation selected by the state bits.
std::size_t count_cycles(const Incidence& inc, std::uint64_t state, std::vector<std::size_t>& succ,
                         std::vector<char>& seen) {
  for (std::size_t v = 0; v < inc.in.size(); ++v) {
    const std::size_t cross = (state >> v) & 1U;
    succ[inc.in[v][0]] = inc.out[v][cross];
    succ[inc.in[v][1]] = inc.out[v][cross ^ 1U];
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::size_t cycles = 0;
  for (std::size_t e = 0; e < succ.size(); ++e) {
    if (seen[e]) continue;
    ++cycles;
    for (std::size_t f = e; !seen[f]; f = succ[f]) seen[f] = 1;
  }
  return cycles;
}

}  // namespace

Validation validate(const EulerianDigraph& d) {
  std::vector<std::size_t> indeg(d.n, 0);
  std::vector<std::size_t> outdeg(d.n, 0);
  std::vector<std::size_t> parent(d.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto [tail, head] = d.edges[e];
    if (tail >= d.n || head >= d.n) {
      return {false, "edge " + std::to_string(e) + " has an endpoint outside 0.." + std::to_string(d.n)};
    }
    ++outdeg[tail];
    ++indeg[head];
    parent[find(tail)] = find(head);
  }
  for (std::size_t v = 0; v < d.n; ++v) {
    if (indeg[v] != 2 || outdeg[v] != 2) {
      return {false, "vertex " + std::to_string(v) + " has in-degree " + std::to_string(indeg[v]) +
                         " and out-degree " + std::to_string(outdeg[v]) + "; expected 2 and 2"};
    }
  }
  for (std::size_t v = 1; v < d.n; ++v) {
    if (find(v) != find(0)) return {false, "digraph is disconnected (vertex " + std::to_string(v) + ")"};
  }
  return {};
}

void enumerate_states(const EulerianDigraph& d,
                      const std::function<void(const GraphState&, std::size_t)>& visit) {
  if (d.edges.empty()) {
    visit(GraphState{}, 0);
    return;
  }
  require_valid(d, "enumerate_states");
  require_state_size(d);
  const Incidence inc = incidence(d);
  std::vector<std::size_t> succ(d.edges.size());
  std::vector<char> seen(d.edges.size());
  GraphState state{std::vector<std::uint8_t>(d.n, 0)};
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << d.n); ++t) {
    for (std::size_t v = 0; v < d.n; ++v) state.choice[v] = static_cast<std::uint8_t>((t >> v) & 1U);
    visit(state, count_cycles(inc, t, succ, seen));
  }
}

std::vector<std::uint64_t> state_histogram(const EulerianDigraph& d) {
  if (d.edges.empty()) return {1};
  require_valid(d, "state_histogram");
  require_state_size(d);
  const Incidence inc = incidence(d);
  const std::size_t m = d.edges.size();
  const std::size_t workers = worker_count();
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(m + 1, 0));
  parallel_blocks(
      std::uint64_t{1} << d.n,
      [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
        std::vector<std::size_t> succ(m);
        std::vector<char> seen(m);
        for (std::uint64_t t = begin; t < end; ++t) ++partial[worker][count_cycles(inc, t, succ, seen)];
      },
      workers);
  std::vector<std::uint64_t> hist(m + 1, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k <= m; ++k) hist[k] += p[k];
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

UniPoly circuit_partition_poly(const EulerianDigraph& d) {
  const auto hist = state_histogram(d);
  std::vector<Integer> coeffs(hist.begin(), hist.end());
  return UniPoly("x", std::move(coeffs));
}

UniPoly martin_poly(const EulerianDigraph& d) {
  require_valid_nonempty(d, "martin_poly");
  return substitute(divide_by_var(circuit_partition_poly(d)), -1);
}

std::vector<std::size_t> euler_circuit(const EulerianDigraph& d) {
  require_valid_nonempty(d, "euler_circuit");
  const Incidence inc = incidence(d);
  std::vector<std::size_t> next_out(d.n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> reversed;
  reversed.reserve(d.edges.size() + 1);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    if (next_out[v] < 2) {
      const std::size_t e = inc.out[v][next_out[v]++];
      stack.push_back(d.edges[e].second);
    } else {
      reversed.push_back(v);
      stack.pop_back();
    }
  }
  // reversed holds the closed walk backwards, start vertex at both ends.
  std::vector<std::size_t> visits(reversed.rbegin(), reversed.rend());
  visits.pop_back();
  return visits;
}

std::vector<std::vector<std::size_t>> all_euler_circuits(const EulerianDigraph& d, std::size_t max_circuits) {
  require_valid_nonempty(d, "all_euler_circuits");
  const Incidence inc = incidence(d);
  const std::size_t m = d.edges.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> used(m, 0);
  std::vector<std::size_t> path;
  path.reserve(m);

  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (path.size() == m) {
      if (out.size() == max_circuits) {
        throw CapacityError("all_euler_circuits: more than " + std::to_string(max_circuits) + " circuits");
      }
      out.push_back(path);
      return;
    }
    for (std::size_t e : inc.out[v]) {
      if (used[e]) continue;
      used[e] = 1;
      path.push_back(e);
      self(self, d.edges[e].second);
      path.pop_back();
      used[e] = 0;
    }
  };
  const std::size_t first = inc.out[0][0];
  used[first] = 1;
  path.push_back(first);
  extend(extend, d.edges[first].second);
  return out;
}

std::vector<std::size_t> visits_of(const EulerianDigraph& d, const std::vector<std::size_t>& circuit) {
  std::vector<std::size_t> visits;
  visits.reserve(circuit.size());
  for (std::size_t e : circuit) visits.push_back(d.edges.at(e).first);
  return visits;
}

std::string ChordDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += labels.at(word[i]);
  }
  return out;
}

ChordDiagram chord_diagram_from_circuit(const std::vector<std::size_t>& visits) {
  const std::size_t symbols = visits.empty() ? 0 : *std::max_element(visits.begin(), visits.end()) + 1;
  std::vector<std::size_t> count(symbols, 0);
  for (std::size_t v : visits) ++count[v];
  for (std::size_t s = 0; s < symbols; ++s) {
    if (count[s] != 2) {
      throw ContractError("chord diagram: symbol " + std::to_string(s) + " occurs " + std::to_string(count[s]) +
                          " times; expected 2");
    }
  }
  ChordDiagram cd{visits, {}};
  cd.labels.reserve(symbols);
  for (std::size_t s = 0; s < symbols; ++s) cd.labels.push_back(std::to_string(s));
  return cd;
}

ChordDiagram parse_word(const std::string& text) {
  std::istringstream is(text);
  ChordDiagram cd;
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::size_t> count;
  for (std::string tok; is >> tok;) {
    auto [it, inserted] = ids.try_emplace(tok, cd.labels.size());
    if (inserted) {
      cd.labels.push_back(tok);
      count.push_back(0);
    }
    if (++count[it->second] > 2) throw ParseError("word: symbol '" + tok + "' occurs more than twice");
    cd.word.push_back(it->second);
  }
  for (std::size_t s = 0; s < count.size(); ++s) {
    if (count[s] != 2) throw ParseError("word: symbol '" + cd.labels[s] + "' occurs once; expected twice");
  }
  return cd;
}

SimpleGraph circle_graph(const ChordDiagram& cd) {
  const std::size_t k = cd.labels.size();
  if (cd.word.size() != 2 * k) throw ContractError("circle_graph: word length is not twice the chord count");
  std::vector<std::array<std::size_t, 2>> pos(k);
  std::vector<std::size_t> seen(k, 0);
  for (std::size_t i = 0; i < cd.word.size(); ++i) {
    const std::size_t s = cd.word[i];
    if (s >= k || seen[s] == 2) throw ContractError("circle_graph: not a double occurrence word");
    pos[s][seen[s]++] = i;
  }
  SimpleGraph g(k);
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) {
      const bool first_inside = pos[u][0] < pos[v][0] && pos[v][0] < pos[u][1];
      const bool second_inside = pos[u][0] < pos[v][1] && pos[v][1] < pos[u][1];
      if (first_inside != second_inside) g.add_edge(u, v);
    }
  }
  return g;
}

TheoremACheck check_theorem_A(const EulerianDigraph& d, const std::optional<std::vector<std::size_t>>& visits) {
  require_valid_nonempty(d, "verify_theorem_A");
  TheoremACheck check;
  check.circuit_partition = circuit_partition_poly(d);
  check.circle = circle_graph(chord_diagram_from_circuit(visits ? *visits : euler_circuit(d)));
  const UniPoly qn = check.circle.n() <= kMaxClosedFormVertices ? qn_closed(check.circle) : qn_recursive(check.circle);
  check.from_circle_graph = UniPoly::monomial(1, 1) * substitute(qn, 1);
  check.holds = check.circuit_partition == check.from_circle_graph;
  return check;
}

bool verify_theorem_A(const EulerianDigraph& d) { return check_theorem_A(d).holds; }

EulerianDigraph random_eulerian_digraph(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ContractError("random_eulerian_digraph: n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> word;
  word.reserve(2 * n);
  for (std::size_t v = 0; v < n; ++v) word.insert(word.end(), {v, v});
  for (std::size_t i = word.size() - 1; i > 0; --i) std::swap(word[i], word[rng() % (i + 1)]);
  EulerianDigraph d{n, {}};
  for (std::size_t i = 0; i < word.size(); ++i) d.edges.emplace_back(word[i], word[(i + 1) % word.size()]);
  return d;
}

}  // namespace interlace
