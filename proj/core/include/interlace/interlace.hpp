#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

/// Independent ways of computing the vertex-nullity interlace polynomial.
enum class QnMethod { recursive, closed, bouchet, avdh, isotropic };

std::string_view to_string(QnMethod m);
std::optional<QnMethod> parse_qn_method(std::string_view name);

enum class Q2Method { closed, reduction };

std::string_view to_string(Q2Method m);
std::optional<Q2Method> parse_q2_method(std::string_view name);

/// Largest graph accepted by the 2^n subset sums.
inline constexpr std::size_t kMaxClosedFormVertices = 24;

// q_N methods. All reject graphs with loops (ContractError) and return a
// polynomial in "x".

/// Pivot recursion: x^n on edgeless graphs, otherwise
/// q_N(G - v) + q_N(G^{vw} - w) on the least edge vw. Memoized per call.
UniPoly qn_recursive(const SimpleGraph& g);

/// Sum over W of (x - 1)^(|W| - rank A[W]) using word-parallel rank on
/// masked adjacency rows, split across workers.
UniPoly qn_closed(const SimpleGraph& g);

/// Same sum, one GF2Matrix and one add_shifted_power per subset.
UniPoly qn_closed_reference(const SimpleGraph& g);

/// Local-complementation recursion: 1 on the empty graph, x q_N(G \ v) for
/// isolated v, otherwise q_N(G \ v) + q_N(G*v*w*v \ v) with v the least
/// vertex and w its least neighbor.
UniPoly qn_bouchet(const SimpleGraph& g);

/// Sum of (x - 1)^corank(L_S) over admissible column sets S of [A | I].
UniPoly qn_avdh(const SimpleGraph& g);

/// qn_avdh with each L_S materialised as a GF2Matrix.
UniPoly qn_avdh_reference(const SimpleGraph& g);

/// q2_closed(g) evaluated at x = 2, renamed into the variable "x".
UniPoly qn_from_q2(const SimpleGraph& g);

UniPoly qn(const SimpleGraph& g, QnMethod method);

// Two-variable polynomial q(G; x, y). Loops allowed.

/// Sum over W of (x - 1)^rank(A[W]) (y - 1)^nullity(A[W]).
BiPoly q2_closed(const SimpleGraph& g);

/// Reduction on the least loopless edge, else the least looped vertex,
/// else y^n. Memoized per call.
BiPoly q2_reduction(const SimpleGraph& g);

BiPoly q2(const SimpleGraph& g, Q2Method method);

}  // namespace interlace
