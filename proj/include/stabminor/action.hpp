#pragma once

#include "stabminor/lagrangian.hpp"
#include "stabminor/local_group.hpp"
#include "stabminor/minor_point.hpp"
#include "stabminor/pauli.hpp"
#include "stabminor/stabilizer.hpp"

namespace stabminor {

// All three actions share the same element semantics: the local parts act
// first, then the permutation moves slot i to slot perm[i]. They commute
// with the maps Pauli -> Lagrangian -> MinorPoint, which the tests check
// exhaustively at small n.

// Conjugation with exact phase tracking; each slot's element is decomposed
// into its {H, S} word and the single-qubit conjugation table is folded.
PauliOp act_on_pauli(const GroupElement& g, const PauliOp& a);

// act_on_pauli on every generator, then generator re-indexing by the
// permutation (a relabeling; the group is unchanged by it).
StabilizerGroup act_on_group(const GroupElement& g, const StabilizerGroup& s);

// Applies the block-local symplectic matrix to the basis rows, permutes
// the row pairs (i, n+i), and re-canonicalizes.
Lagrangian act_on_lagrangian(const GroupElement& g, const Lagrangian& l);

// Tensor action on the 2^n coordinates: slot t mixes coordinate pairs
// differing in mask bit t-1 by its 2x2 matrix; the permutation then moves
// mask bits.
MinorPoint act_on_point(const GroupElement& g, const MinorPoint& p);

// Bit-level point kernels on raw 2^n-bit words (the orbit BFS hot path).
// Generator indexing matches group_generators(n): 0..n-1 = HAD at slot,
// n..2n-1 = SQZ at slot, 2n..3n-2 = transposition (slot, slot+1).
struct PointOps {
  explicit PointOps(int n);

  int n;
  int generator_count;

  std::uint64_t apply_generator(std::uint64_t bits, int gen) const;

  std::uint64_t had(std::uint64_t bits, int slot) const;
  std::uint64_t sqz(std::uint64_t bits, int slot) const;
  std::uint64_t hsh(std::uint64_t bits, int slot) const;
  std::uint64_t swap_adjacent(std::uint64_t bits, int slot) const;
  std::uint64_t local(std::uint64_t bits, int slot, const Local2& m) const;
};

// Permutes mask bits: coordinate at mask m moves to the mask whose bit
// perm[t] copies bit t of m.
std::uint64_t point_permute(std::uint64_t bits, int n,
                            const std::vector<int>& perm);

}  // namespace stabminor
