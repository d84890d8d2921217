#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stabminor/pauli.hpp"
#include "stabminor/stabilizer.hpp"

namespace stabminor {

// Dense complex state oracle. Deliberately slow and independent of the
// bit-level machinery; used to pin down signs, eigenvectors and the
// distinct-state census at tiny n.
//
// Basis convention: amplitude index m encodes |b_1..b_n> with b_t at bit
// t-1 of m, matching the mask convention of MinorPoint.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;

  static StateVector zero_state(int n);  // |0...0>

  double norm() const;
  void normalize();
  // Makes the first amplitude of magnitude > eps real positive.
  void canonicalize_phase(double eps = 1e-9);
};

// Matrix-free application: X-part permutes basis states, Z-part adds
// (-1)^{mu.b} signs, the phase contributes a global i^k. Bounded at
// n <= 12.
StateVector apply_pauli(const PauliOp& a, const StateVector& v);

// Inner product <a|b>.
std::complex<double> inner(const StateVector& a, const StateVector& b);

// The unique state with (-1)^{gamma_i} M_i |phi> = |phi>, built by
// projecting a random vector with prod (I + (-1)^{gamma_i} M_i)/2 where
// the M_i are the sign-normalized Hermitian generators. Verifies
// eigenvalue residuals <= 1e-12 and rank one via a second random seed
// agreeing up to phase within 1e-9. Bounded at n <= 10.
StateVector stabilized_state(const StabilizerGroup& s,
                             const f2::BitVector& gamma);

// Counts distinct stabilizer-state rays over all maximal isotropic
// subspaces and all 2^n sign vectors, deduplicating to 1e-9. Bounded at
// n <= 3 (the value is 2^n * prod (2^i + 1)).
std::uint64_t census_stabilizer_states(int n);

// Dirac-labelled printout, one amplitude per line.
std::string format_state(const StateVector& v);

}  // namespace stabminor
