#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/gf2.hpp"
#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

/// Element of the Klein group Z2 x Z2. The code packs (b1, b2) as b1 | b2 << 1,
/// so x = (1,0), y = (0,1), z = (1,1).
enum class Klein : std::uint8_t { zero = 0, x = 1, y = 2, z = 3 };

constexpr Klein operator+(Klein a, Klein b) {
  return static_cast<Klein>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// 1 iff a != b and both are nonzero.
constexpr int klein_form(Klein a, Klein b) {
  const auto ca = static_cast<unsigned>(a);
  const auto cb = static_cast<unsigned>(b);
  return static_cast<int>(((ca & 1U) & (cb >> 1)) ^ ((ca >> 1) & (cb & 1U)));
}

char to_char(Klein k);

/// Map V -> K stored as two bit rows, one per Klein coordinate.
class KVector {
 public:
  KVector() = default;
  explicit KVector(std::size_t n);
  KVector(std::size_t n, VertexSet row1, VertexSet row2);

  /// Every coordinate equal to k.
  static KVector constant(std::size_t n, Klein k);
  /// Parses a word over {0,x,y,z}; one character per vertex.
  static KVector parse(std::string_view word);

  std::size_t n() const noexcept { return n_; }
  VertexSet row1() const noexcept { return row1_; }
  VertexSet row2() const noexcept { return row2_; }
  Klein at(std::size_t v) const;
  void set(std::size_t v, Klein k);

  /// Coordinates v with value k.
  VertexSet preimage(Klein k) const noexcept;
  /// True iff no coordinate is zero.
  bool nowhere_zero() const noexcept { return (row1_ | row2_) == mask(); }

  /// The vector agreeing with this one on p and zero elsewhere.
  KVector restrict_to(VertexSet p) const noexcept { return {n_, row1_ & p, row2_ & p}; }

  /// 2n-bit row, position-major: bit 2v = first coordinate of v, bit 2v+1 = second.
  std::uint64_t flatten() const noexcept;

  KVector& operator+=(const KVector& other);
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend bool operator==(const KVector&, const KVector&) = default;

  std::string to_string() const;

 private:
  VertexSet mask() const noexcept { return n_ == 0 ? 0 : ((VertexSet{1} << n_) - 1); }

  std::size_t n_ = 0;
  VertexSet row1_ = 0;
  VertexSet row2_ = 0;
};

/// Summed Klein form, computed as the parity of
/// popcount((a.row1 & b.row2) ^ (a.row2 & b.row1)).
int kv_form(const KVector& a, const KVector& b);

/// Isotropic system given by a basis of its subspace L. The constructor
/// validates dimension n and pairwise orthogonality and throws
/// std::logic_error if either fails.
class IsotropicSystem {
 public:
  IsotropicSystem(std::size_t n, std::vector<KVector> basis);

  std::size_t n() const noexcept { return n_; }
  const std::vector<KVector>& basis() const noexcept { return basis_; }

  /// The basis as an n x 2n matrix of flattened rows.
  GF2Matrix basis_matrix() const;

 private:
  std::size_t n_;
  std::vector<KVector> basis_;
};

/// L_P = A(P) + B(N(P)).
KVector vector_LP(const SimpleGraph& g, const KVector& a, const KVector& b, VertexSet p);

/// System spanned by L_{v} = A({v}) + B(N(v)), v in V. A and B must be
/// nowhere zero and differ at every vertex.
IsotropicSystem graphic_system(const SimpleGraph& g, const KVector& a, const KVector& b);

/// Basis of F-hat: F(v) at position v, zero elsewhere. F must be nowhere zero.
std::vector<KVector> f_hat_basis(const KVector& f);

/// dim(L meet F-hat) = 2n - rank(L stacked on F-hat).
std::size_t dim_intersection(const IsotropicSystem& s, const KVector& f);

/// Sum of (xi - 1)^dim(L meet F-hat) over the 2^n vectors F with F(v) in
/// K' \ {C(v)} for every v. Polynomial in "x". Requires n <= 20.
UniPoly tutte_martin_restricted(const IsotropicSystem& s, const KVector& c);

/// Restricted Tutte-Martin polynomial of the presentation (g, x-bar, y-bar)
/// with C = z-bar.
UniPoly tutte_martin_canonical(const SimpleGraph& g);

/// |F_x| - rank of the adjacency matrix of G|F_x, for F in {x,y}^V.
std::size_t dim_via_rank_formula(const SimpleGraph& g, const KVector& f);

inline constexpr std::size_t kMaxIsotropicVertices = 20;

}  // namespace interlace
