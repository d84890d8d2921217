#pragma once

#include <string>

#include "stabminor/bitvec.hpp"

namespace stabminor {

// An n-qubit Pauli operator i^k * (Z^mu1 X^nu1) x ... x (Z^mun X^nun).
// Qubit t (1-based) owns bit t-1 of mu and nu. The Z-before-X ordering per
// qubit is part of the representation, so Y is stored as k=3, mu=nu=1
// (Y = i XZ = i^3 ZX, Hermitian).
struct PauliOp {
  int n = 0;
  int k = 0;  // phase exponent mod 4
  f2::BitVector mu, nu;

  static PauliOp identity(int n_) {
    return {n_, 0, f2::BitVector(static_cast<std::size_t>(n_)),
            f2::BitVector(static_cast<std::size_t>(n_))};
  }

  bool operator==(const PauliOp&) const = default;
};

// Product A*B. Moving every X of A past every Z of B contributes a -1,
// so k = A.k + B.k + 2*(A.nu . B.mu) mod 4.
PauliOp pauli_mul(const PauliOp& a, const PauliOp& b);

PauliOp pauli_inverse(const PauliOp& a);

// <P_A, P_B>_J = A.mu . B.nu + A.nu . B.mu over F2; zero iff A and B
// commute.
int symplectic_form(const PauliOp& a, const PauliOp& b);

bool commutes(const PauliOp& a, const PauliOp& b);

// The point (mu || nu) in F2^{2n}; the phase is discarded. Throws
// DomainError for phase-only elements (mu = nu = 0), where the projective
// point is undefined.
f2::BitVector to_point(const PauliOp& a);

// mu . nu mod 2; A is Hermitian iff k = this value mod 2, and A^2 = -I iff
// k + mu.nu is odd.
int hermitian_exponent(const PauliOp& a);

bool is_hermitian(const PauliOp& a);

// Phase exponent of the unsigned Hermitian representative of (mu, nu):
// 3 * |mu & nu| mod 4, the operator whose string form carries no prefix.
int canonical_phase(const PauliOp& a);

// Grammar: [+|-|i|-i]? [IXYZ]{n}. Examples: "ZXIII", "-Y", "iXZ".
PauliOp parse_pauli(const std::string& s);
std::string format_pauli(const PauliOp& a);

}  // namespace stabminor
