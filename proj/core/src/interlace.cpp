#include "interlace/interlace.hpp"

#include <array>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/isotropic.hpp"
#include "interlace/parallel.hpp"

namespace interlace {

namespace {

constexpr VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

void require_loopless(const SimpleGraph& g, const char* op) {
  if (g.has_loops()) {
    throw ContractError(std::string(op) + ": q_N is defined on simple graphs; input has loops");
  }
}

void require_closed_form_size(const SimpleGraph& g, const char* op) {
  if (g.n() > kMaxClosedFormVertices) {
    throw CapacityError(std::string(op) + ": " + std::to_string(g.n()) + " vertices exceeds the cap of " +
                        std::to_string(kMaxClosedFormVertices));
  }
}

std::array<VertexSet, kMaxClosedFormVertices> adjacency_rows(const SimpleGraph& g) {
  std::array<VertexSet, kMaxClosedFormVertices> rows{};
  for (std::size_t v = 0; v < g.n(); ++v) rows[v] = g.neighbors(v);
  return rows;
}

// Histogram of bin(W) over all subsets W of n vertices, bin(W) < bins.
// Workers fill private histograms that are summed afterwards.
template <class Bin>
std::vector<std::uint64_t> subset_histogram(std::size_t n, std::size_t bins, Bin bin) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t workers = worker_count();
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  parallel_blocks(
      total,
      [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
        auto& hist = partial[worker];
        for (std::uint64_t w = begin; w < end; ++w) ++hist[bin(w)];
      },
      workers);
  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < bins; ++k) hist[k] += p[k];
  return hist;
}

// Rank of A[W] from the rows of W masked to W's columns.
std::size_t induced_rank(const std::array<VertexSet, kMaxClosedFormVertices>& adj, VertexSet w) {
  std::array<std::uint64_t, kMaxClosedFormVertices> rows;
  std::size_t k = 0;
  for (VertexSet s = w; s; s &= s - 1) rows[k++] = adj[static_cast<std::size_t>(std::countr_zero(s))] & w;
  return rank_in_place(std::span(rows.data(), k));
}

UniPoly x_power(std::size_t n) { return UniPoly::monomial(1, static_cast<unsigned>(n)); }

class RecursiveQn {
 public:
  UniPoly operator()(const SimpleGraph& g) {
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    UniPoly result = compute(g);
    memo_.emplace(key, result);
    return result;
  }

 private:
  UniPoly compute(const SimpleGraph& g) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (g.neighbors(v) == 0) continue;
      const auto w = static_cast<std::size_t>(std::countr_zero(g.neighbors(v)));
      return (*this)(delete_vertex(g, v)) + (*this)(delete_vertex(pivot(g, v, w), w));
    }
    return x_power(g.n());
  }

  std::unordered_map<std::string, UniPoly> memo_;
};

class BouchetQn {
 public:
  UniPoly operator()(const SimpleGraph& g) {
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    UniPoly result = compute(g);
    memo_.emplace(key, result);
    return result;
  }

 private:
  UniPoly compute(const SimpleGraph& g) {
    if (g.n() == 0) return UniPoly::constant(1);
    const std::size_t v = 0;
    const SimpleGraph minus_v = delete_vertex(g, v);
    if (g.neighbors(v) == 0) return UniPoly::monomial(1, 1) * (*this)(minus_v);
    const auto w = static_cast<std::size_t>(std::countr_zero(g.neighbors(v)));
    const SimpleGraph vwv = local_complement(local_complement(local_complement(g, v), w), v);
    return (*this)(minus_v) + (*this)(delete_vertex(vwv, v));
  }

  std::unordered_map<std::string, UniPoly> memo_;
};

class ReductionQ2 {
 public:
  BiPoly operator()(const SimpleGraph& g) {
    const std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BiPoly result = compute(g);
    memo_.emplace(key, result);
    return result;
  }

 private:
  BiPoly compute(const SimpleGraph& g) {
    VertexSet unlooped = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
      if (!g.has_loop(v)) unlooped |= bit(v);

    for (VertexSet s = unlooped; s; s &= s - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(s));
      const VertexSet higher = g.neighbors(a) & unlooped & ~(bit(a + 1) - 1);
      if (higher == 0) continue;
      const auto b = static_cast<std::size_t>(std::countr_zero(higher));
      const SimpleGraph piv = pivot_unlooped_edge(g, a, b);
      // (x-1)^2 - 1 = x^2 - 2x
      BiPoly weight;
      weight.add_term(1, 2, 0);
      weight.add_term(-2, 1, 0);
      return (*this)(delete_vertex(g, a)) + (*this)(delete_vertex(piv, b)) +
             weight * (*this)(delete_vertex(delete_vertex(piv, b), a));
    }

    const VertexSet looped = g.all() & ~unlooped;
    if (looped != 0) {
      const auto a = static_cast<std::size_t>(std::countr_zero(looped));
      BiPoly x_minus_1;
      x_minus_1.add_term(1, 1, 0);
      x_minus_1.add_term(-1, 0, 0);
      return (*this)(delete_vertex(g, a)) + x_minus_1 * (*this)(delete_vertex(local_complement(g, a), a));
    }
    return BiPoly::monomial(1, 0, static_cast<unsigned>(g.n()));
  }

  std::unordered_map<std::string, BiPoly> memo_;
};

}  // namespace

std::string_view to_string(QnMethod m) {
  switch (m) {
    case QnMethod::recursive: return "recursive";
    case QnMethod::closed: return "closed";
    case QnMethod::bouchet: return "bouchet";
    case QnMethod::avdh: return "avdh";
    case QnMethod::isotropic: return "isotropic";
  }
  return "?";
}

std::optional<QnMethod> parse_qn_method(std::string_view name) {
  for (auto m : {QnMethod::recursive, QnMethod::closed, QnMethod::bouchet, QnMethod::avdh, QnMethod::isotropic})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::string_view to_string(Q2Method m) { return m == Q2Method::closed ? "closed" : "reduction"; }

std::optional<Q2Method> parse_q2_method(std::string_view name) {
  if (name == "closed") return Q2Method::closed;
  if (name == "reduction") return Q2Method::reduction;
  return std::nullopt;
}

UniPoly qn_recursive(const SimpleGraph& g) {
  require_loopless(g, "qn_recursive");
  RecursiveQn rec;
  return rec(g);
}

UniPoly qn_closed(const SimpleGraph& g) {
  require_loopless(g, "qn_closed");
  require_closed_form_size(g, "qn_closed");
  const auto adj = adjacency_rows(g);
  const auto hist = subset_histogram(g.n(), g.n() + 1, [&](VertexSet w) {
    return static_cast<std::size_t>(std::popcount(w)) - induced_rank(adj, w);
  });
  return shifted_power_sum(hist, -1);
}

UniPoly qn_closed_reference(const SimpleGraph& g) {
  require_loopless(g, "qn_closed_reference");
  require_closed_form_size(g, "qn_closed_reference");
  UniPoly sum;
  for (VertexSet w = 0; w < (VertexSet{1} << g.n()); ++w) {
    sum = add_shifted_power(sum, static_cast<unsigned>(nullity(adjacency_matrix(g, w))), -1);
  }
  return sum;
}

UniPoly qn_bouchet(const SimpleGraph& g) {
  require_loopless(g, "qn_bouchet");
  BouchetQn rec;
  return rec(g);
}

UniPoly qn_avdh(const SimpleGraph& g) {
  require_loopless(g, "qn_avdh");
  require_closed_form_size(g, "qn_avdh");
  const std::size_t n = g.n();
  const auto adj = adjacency_rows(g);
  // Bit i of s selects identity column i-bar instead of adjacency column i,
  // so row r of L_S is (A_r & ~s) | (s & e_r).
  const auto hist = subset_histogram(n, n + 1, [&](VertexSet s) {
    std::array<std::uint64_t, kMaxClosedFormVertices> rows;
    for (std::size_t r = 0; r < n; ++r) rows[r] = (adj[r] & ~s) | (s & bit(r));
    return n - rank_in_place(std::span(rows.data(), n));
  });
  return shifted_power_sum(hist, -1);
}

UniPoly qn_avdh_reference(const SimpleGraph& g) {
  require_loopless(g, "qn_avdh_reference");
  require_closed_form_size(g, "qn_avdh_reference");
  const std::size_t n = g.n();
  GF2Matrix extended(n, 2 * n);
  const GF2Matrix a = adjacency_matrix(g);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) extended.set(r, c, a.get(r, c));
    extended.set(r, n + r, true);
  }
  UniPoly sum;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    GF2Matrix ls(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t col = ((s >> i) & 1U) ? n + i : i;
      for (std::size_t r = 0; r < n; ++r) ls.set(r, i, extended.get(r, col));
    }
    sum = add_shifted_power(sum, static_cast<unsigned>(corank(ls)), -1);
  }
  return sum;
}

UniPoly qn_from_q2(const SimpleGraph& g) {
  require_loopless(g, "qn_from_q2");
  return eval_at(q2_closed(g), 2).with_var("x");
}

UniPoly qn(const SimpleGraph& g, QnMethod method) {
  switch (method) {
    case QnMethod::recursive: return qn_recursive(g);
    case QnMethod::closed: return qn_closed(g);
    case QnMethod::bouchet: return qn_bouchet(g);
    case QnMethod::avdh: return qn_avdh(g);
    case QnMethod::isotropic: return tutte_martin_canonical(g);
  }
  throw ContractError("qn: unknown method");
}

BiPoly q2_closed(const SimpleGraph& g) {
  require_closed_form_size(g, "q2_closed");
  const std::size_t n = g.n();
  const auto adj = adjacency_rows(g);
  // Index rank * (n + 1) + nullity.
  const auto flat = subset_histogram(n, (n + 1) * (n + 1), [&](VertexSet w) {
    const std::size_t r = induced_rank(adj, w);
    return r * (n + 1) + (static_cast<std::size_t>(std::popcount(w)) - r);
  });
  std::vector<std::vector<std::uint64_t>> hist(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t k = 0; k <= n; ++k) hist[r][k] = flat[r * (n + 1) + k];
  return shifted_power_sum_2d(hist);
}

BiPoly q2_reduction(const SimpleGraph& g) {
  ReductionQ2 rec;
  return rec(g);
}

BiPoly q2(const SimpleGraph& g, Q2Method method) {
  return method == Q2Method::closed ? q2_closed(g) : q2_reduction(g);
}

}  // namespace interlace
