#pragma once

#include <utility>
#include <vector>

#include "stabminor/bitmatrix.hpp"
#include "stabminor/pauli.hpp"

namespace stabminor {

// A maximal abelian subgroup of the n-qubit Pauli group, held as n
// pairwise-commuting, independent generators (independence = the (mu||nu)
// vectors are linearly independent over F2).
struct StabilizerGroup {
  int n = 0;
  std::vector<PauliOp> generators;
};

// Validates commutation, independence and count. Throws NotCommuting,
// NotIndependent or WrongCount.
StabilizerGroup group_from_generators(const std::vector<PauliOp>& gens);

// Comma/whitespace-separated Pauli strings, e.g. "ZXIII, XZIII, ...".
StabilizerGroup parse_group(const std::string& s);
std::string format_group(const StabilizerGroup& s);

// The 2n x n matrix whose column i is (mu_i || nu_i).
f2::BitMatrix generator_matrix(const StabilizerGroup& s);

// With independent commuting generators the only subgroup elements with
// mu = nu = 0 are products with all exponents zero, so -I lies in the
// group iff some single generator squares to -I, i.e. iff k + mu.nu is
// odd for some generator.
bool contains_minus_identity(const StabilizerGroup& s);

// Test oracle: expands all 2^n subset products and looks for -I directly.
bool contains_minus_identity_bruteforce(const StabilizerGroup& s);

// Replaces each generator by its unsigned Hermitian representative
// (the prefix-free string form, k = canonical_phase) and returns the
// extracted sign bits. Throws NotAStabilizerStateGroup if some generator
// squares to -I.
std::pair<StabilizerGroup, f2::BitVector> sign_normalize(
    const StabilizerGroup& s);

}  // namespace stabminor
