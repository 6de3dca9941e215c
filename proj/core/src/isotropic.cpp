#include "interlace/isotropic.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "interlace/error.hpp"
#include "interlace/parallel.hpp"

namespace interlace {

namespace {

constexpr VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

void require_same_length(const KVector& a, const KVector& b, const char* op) {
  if (a.n() != b.n()) {
    throw ContractError(std::string(op) + ": length mismatch (" + std::to_string(a.n()) + " vs " +
                        std::to_string(b.n()) + ")");
  }
}

void write_flat(const KVector& k, GF2Matrix& m, std::size_t row) {
  for (std::size_t v = 0; v < k.n(); ++v) {
    const auto code = static_cast<unsigned>(k.at(v));
    m.set(row, 2 * v, code & 1U);
    m.set(row, 2 * v + 1, (code >> 1) & 1U);
  }
}

GF2Matrix as_matrix(const std::vector<KVector>& vs, std::size_t n) {
  GF2Matrix m(vs.size(), 2 * n);
  for (std::size_t i = 0; i < vs.size(); ++i) write_flat(vs[i], m, i);
  return m;
}

}  // namespace

char to_char(Klein k) {
  switch (k) {
    case Klein::zero: return '0';
    case Klein::x: return 'x';
    case Klein::y: return 'y';
    case Klein::z: return 'z';
  }
  return '?';
}

KVector::KVector(std::size_t n) : KVector(n, 0, 0) {}

KVector::KVector(std::size_t n, VertexSet row1, VertexSet row2) : n_(n) {
  if (n > kMaxVertices) throw CapacityError("KVector: at most 63 positions supported");
  row1_ = row1 & mask();
  row2_ = row2 & mask();
}

KVector KVector::constant(std::size_t n, Klein k) {
  KVector out(n);
  const auto code = static_cast<unsigned>(k);
  if (code & 1U) out.row1_ = out.mask();
  if (code & 2U) out.row2_ = out.mask();
  return out;
}

KVector KVector::parse(std::string_view word) {
  KVector out(word.size());
  for (std::size_t v = 0; v < word.size(); ++v) {
    switch (word[v]) {
      case '0': break;
      case 'x': out.set(v, Klein::x); break;
      case 'y': out.set(v, Klein::y); break;
      case 'z': out.set(v, Klein::z); break;
      default:
        throw ParseError(std::string("K-word: unexpected character '") + word[v] + "' (expected 0, x, y or z)");
    }
  }
  return out;
}

Klein KVector::at(std::size_t v) const {
  if (v >= n_) throw ContractError("KVector::at: position out of range");
  return static_cast<Klein>(((row1_ >> v) & 1U) | (((row2_ >> v) & 1U) << 1));
}

void KVector::set(std::size_t v, Klein k) {
  if (v >= n_) throw ContractError("KVector::set: position out of range");
  const auto code = static_cast<unsigned>(k);
  row1_ = (code & 1U) ? (row1_ | bit(v)) : (row1_ & ~bit(v));
  row2_ = (code & 2U) ? (row2_ | bit(v)) : (row2_ & ~bit(v));
}

VertexSet KVector::preimage(Klein k) const noexcept {
  const auto code = static_cast<unsigned>(k);
  const VertexSet r1 = (code & 1U) ? row1_ : ~row1_;
  const VertexSet r2 = (code & 2U) ? row2_ : ~row2_;
  return r1 & r2 & mask();
}

std::uint64_t KVector::flatten() const noexcept {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < n_ && v < 32; ++v) {
    out |= ((row1_ >> v) & 1U) << (2 * v);
    out |= ((row2_ >> v) & 1U) << (2 * v + 1);
  }
  return out;
}

KVector& KVector::operator+=(const KVector& other) {
  require_same_length(*this, other, "KVector::+");
  row1_ ^= other.row1_;
  row2_ ^= other.row2_;
  return *this;
}

std::string KVector::to_string() const {
  std::string out(n_, '0');
  for (std::size_t v = 0; v < n_; ++v) out[v] = to_char(at(v));
  return out;
}

int kv_form(const KVector& a, const KVector& b) {
  require_same_length(a, b, "kv_form");
  return std::popcount((a.row1() & b.row2()) ^ (a.row2() & b.row1())) & 1;
}

IsotropicSystem::IsotropicSystem(std::size_t n, std::vector<KVector> basis) : n_(n), basis_(std::move(basis)) {
  if (basis_.size() != n_) throw std::logic_error("isotropic system: basis size differs from |V|");
  for (const auto& b : basis_)
    if (b.n() != n_) throw std::logic_error("isotropic system: basis vector of wrong length");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (kv_form(basis_[i], basis_[j]) != 0) {
        throw std::logic_error("isotropic system: basis vectors " + std::to_string(i) + " and " +
                               std::to_string(j) + " are not orthogonal");
      }
  if (rank(basis_matrix()) != n_) throw std::logic_error("isotropic system: basis is not independent");
}

GF2Matrix IsotropicSystem::basis_matrix() const { return as_matrix(basis_, n_); }

KVector vector_LP(const SimpleGraph& g, const KVector& a, const KVector& b, VertexSet p) {
  if (a.n() != g.n() || b.n() != g.n()) throw ContractError("vector_LP: presentation length differs from |V|");
  return a.restrict_to(p) + b.restrict_to(neighborhood_set(g, p));
}

IsotropicSystem graphic_system(const SimpleGraph& g, const KVector& a, const KVector& b) {
  if (g.has_loops()) throw ContractError("graphic_system: graph must be simple");
  if (a.n() != g.n() || b.n() != g.n()) throw ContractError("graphic_system: presentation length differs from |V|");
  if (!a.nowhere_zero() || !b.nowhere_zero()) throw ContractError("graphic_system: A and B must avoid 0");
  if ((a + b).nowhere_zero() == false) throw ContractError("graphic_system: A(v) == B(v) at some vertex");
  std::vector<KVector> basis;
  basis.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) basis.push_back(vector_LP(g, a, b, bit(v)));
  return IsotropicSystem(g.n(), std::move(basis));
}

std::vector<KVector> f_hat_basis(const KVector& f) {
  if (!f.nowhere_zero()) throw ContractError("f_hat_basis: F has a zero coordinate");
  std::vector<KVector> out;
  out.reserve(f.n());
  for (std::size_t v = 0; v < f.n(); ++v) out.push_back(f.restrict_to(bit(v)));
  return out;
}

std::size_t dim_intersection(const IsotropicSystem& s, const KVector& f) {
  if (f.n() != s.n()) throw ContractError("dim_intersection: F length differs from |V|");
  const GF2Matrix fhat = as_matrix(f_hat_basis(f), s.n());
  return 2 * s.n() - stack_rank(s.basis_matrix(), fhat);
}

UniPoly tutte_martin_restricted(const IsotropicSystem& s, const KVector& c) {
  const std::size_t n = s.n();
  if (c.n() != n) throw ContractError("tutte_martin_restricted: C length differs from |V|");
  if (!c.nowhere_zero()) throw ContractError("tutte_martin_restricted: C has a zero coordinate");
  if (n > kMaxIsotropicVertices) {
    throw CapacityError("tutte_martin_restricted: " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(kMaxIsotropicVertices));
  }
  std::array<std::uint64_t, kMaxIsotropicVertices> l_rows{};
  for (std::size_t i = 0; i < n; ++i) l_rows[i] = s.basis()[i].flatten();

  // Per vertex, the two codes of K' \ {C(v)}, smaller first, already shifted
  // into the vertex's flattened slot.
  std::array<std::array<std::uint64_t, 2>, kMaxIsotropicVertices> choice{};
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t k = 0;
    for (unsigned code = 1; code <= 3; ++code) {
      if (code == static_cast<unsigned>(c.at(v))) continue;
      choice[v][k++] = std::uint64_t{code} << (2 * v);
    }
  }

  const std::size_t workers = worker_count();
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  parallel_blocks(
      std::uint64_t{1} << n,
      [&](std::uint64_t begin, std::uint64_t end, std::size_t worker) {
        std::array<std::uint64_t, 2 * kMaxIsotropicVertices> rows;
        for (std::uint64_t t = begin; t < end; ++t) {
          for (std::size_t i = 0; i < n; ++i) rows[i] = l_rows[i];
          for (std::size_t v = 0; v < n; ++v) rows[n + v] = choice[v][(t >> v) & 1U];
          const std::size_t r = rank_in_place(std::span(rows.data(), 2 * n));
          ++partial[worker][2 * n - r];
        }
      },
      workers);
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k <= n; ++k) hist[k] += p[k];
  return shifted_power_sum(hist, -1);
}

UniPoly tutte_martin_canonical(const SimpleGraph& g) {
  if (g.has_loops()) throw ContractError("tutte_martin_canonical: q_N is defined on simple graphs; input has loops");
  if (g.n() > kMaxIsotropicVertices) {
    throw CapacityError("tutte_martin_canonical: " + std::to_string(g.n()) + " vertices exceeds the cap of " +
                        std::to_string(kMaxIsotropicVertices));
  }
  const auto s = graphic_system(g, KVector::constant(g.n(), Klein::x), KVector::constant(g.n(), Klein::y));
  return tutte_martin_restricted(s, KVector::constant(g.n(), Klein::z));
}

std::size_t dim_via_rank_formula(const SimpleGraph& g, const KVector& f) {
  if (f.n() != g.n()) throw ContractError("dim_via_rank_formula: F length differs from |V|");
  const VertexSet fx = f.preimage(Klein::x);
  if ((fx | f.preimage(Klein::y)) != g.all()) {
    throw ContractError("dim_via_rank_formula: F must take values in {x, y}");
  }
  return static_cast<std::size_t>(std::popcount(fx)) - rank(adjacency_matrix(g, fx));
}

}  // namespace interlace
