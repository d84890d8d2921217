#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "stabminor/bitmatrix.hpp"
#include "stabminor/local_group.hpp"
#include "stabminor/stabilizer.hpp"

namespace stabminor {

// A maximal isotropic subspace of F2^{2n} for J = [[0,I],[I,0]], held as
// the column-reduced echelon basis of its column space (2n rows, n
// columns). The canonical basis is unique per subspace, so Lagrangians
// compare bit-for-bit.
struct Lagrangian {
  int n = 0;
  f2::BitMatrix basis;

  // Canonicalizes and validates rank n + isotropy. Throws
  // std::invalid_argument on shape problems, DomainError otherwise.
  static Lagrangian from_basis(int n, const f2::BitMatrix& any_basis);

  bool operator==(const Lagrangian&) const = default;
};

// true iff tM J M = 0, i.e. all column pairs pair to zero under J.
// Throws std::invalid_argument unless the row count is even.
bool is_isotropic(const f2::BitMatrix& m);

// Column span of the generators' (mu||nu) vectors; phases are dropped.
Lagrangian lagrangian_from_group(const StabilizerGroup& s);

// Chart presentation: the least subset T (graded-lex order: by size, then
// lexicographic) such that swapping rows k <-> n+k for k in T makes the
// top block invertible, together with the symmetric matrix S of the
// resulting presentation [I_n; S]. T = {} is the plain symmetric chart.
struct ChartForm {
  std::uint64_t subset = 0;  // bit t-1 set iff qubit t in T
  f2::BitMatrix s;           // symmetric n x n
};
ChartForm chart_form(const Lagrangian& l);

// Rebuilds the subspace from a chart presentation: rows k and n+k of
// [I_n; S] swapped for k in subset.
Lagrangian lagrangian_from_chart(int n, std::uint64_t subset,
                                 const f2::BitMatrix& s);

// Swap rows k <-> n+k of a 2n x n matrix for every k in subset.
f2::BitMatrix swap_block_rows(const f2::BitMatrix& m, std::uint64_t subset);

// All maximal isotropic subspaces, deduplicated by canonical basis and
// sorted by basis content; the count is prod_{i=1}^{n} (2^i + 1). Throws
// BoundExceeded past max_n.
std::vector<Lagrangian> enumerate_lagrangians(int n, int max_n = 6);

void for_each_lagrangian(int n, const std::function<void(const Lagrangian&)>& fn,
                         int max_n = 6);

std::uint64_t lagrangian_count(int n);  // prod (2^i + 1)

// Loopless graph presentation: a witness g such that act_on_lagrangian(g, l)
// has chart presentation [I_n; theta] with theta symmetric and loopless.
// The witness is the subset-Hadamard move into the chart followed by
// diagonal clearing, so minor_point(act(g, l)) equals the principal-minor
// point of theta.
struct GraphForm {
  f2::BitMatrix theta;  // symmetric, zero diagonal
  GroupElement witness;
};
GraphForm graph_form(const Lagrangian& l);

}  // namespace stabminor
