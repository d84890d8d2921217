#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabminor/lagrangian.hpp"

namespace stabminor {

// A point of the binary principal-minor variety in P(F2^{2^n}), stored as
// a 2^n-bit integer. Coordinate z_T sits at bit mask(T), where bit t-1 of
// the mask is set iff qubit t lies in T. Nonzero for genuine points.
// Supported for n <= 6 (64 coordinates fit one word).
struct MinorPoint {
  int n = 0;
  std::uint64_t bits = 0;

  bool get(std::uint64_t mask) const { return (bits >> mask) & 1; }
  bool operator==(const MinorPoint&) const = default;
};

enum class IndexOrder {
  bitmask,     // coordinate index = subset mask
  graded_lex,  // subsets by cardinality, then lexicographic on elements
};

// Subset masks of {1..n} in graded-lex order; index i of the table is the
// graded-lex coordinate index.
const std::vector<std::uint64_t>& graded_lex_masks(int n);

// Converts a coordinate index between the two orders. Throws
// std::invalid_argument when out of range.
std::uint64_t index_convert(std::uint64_t i, IndexOrder from, IndexOrder to,
                            int n);

// z_T of a 2n x n basis matrix: the determinant of the n x n submatrix on
// rows {j : j not in T} of the top block and rows {n+t : t in T} of the
// bottom block. For a chart basis [I_n; S] this is the principal minor
// S_[T]; over F2 the value only depends on the column space.
MinorPoint minor_point(const Lagrangian& l);
MinorPoint minor_point_of_basis(int n, const f2::BitMatrix& basis);

// z_T = S_[T] for symmetric S; equals minor_point(span [I_n; S]). Throws
// std::invalid_argument if S is not symmetric.
MinorPoint from_symmetric(const f2::BitMatrix& s);

// Inverts from_symmetric on the chart z_{} = 1 via s_ii = z_{i},
// s_ij = z_{ij} + s_ii s_jj, then checks every higher minor. Throws
// NotChartPoint / InconsistentPoint.
f2::BitMatrix reconstruct_symmetric(const MinorPoint& p);

// Inverse of minor_point: moves p to the chart by the least subset-Hadamard
// translate, reconstructs S and transports the subspace back. Throws
// NotOnVariety when no consistent reconstruction exists.
Lagrangian lagrangian_from_point(const MinorPoint& p);

bool is_on_variety(const MinorPoint& p);

// Coordinate-permuting translate z'_T = z_{T xor subset} (the subset-
// Hadamard move at the point level).
std::uint64_t point_subset_hadamard(std::uint64_t bits, int n,
                                    std::uint64_t subset);

// Text form "[1:0:...:0]" with 2^n colon-separated bits in the given
// order.
std::string format_point(const MinorPoint& p,
                         IndexOrder order = IndexOrder::graded_lex);
MinorPoint parse_point(const std::string& s, int n,
                       IndexOrder order = IndexOrder::graded_lex);

}  // namespace stabminor
