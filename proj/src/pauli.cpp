#include "stabminor/pauli.hpp"

#include <stdexcept>

#include "stabminor/errors.hpp"

namespace stabminor {

namespace {

int dot2(const f2::BitVector& a, const f2::BitVector& b) {
  return a.dot(b) ? 1 : 0;
}

}  // namespace

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("pauli_mul: qubit count mismatch");
  }
  PauliOp out;
  out.n = a.n;
  out.k = (a.k + b.k + 2 * dot2(a.nu, b.mu)) & 3;
  out.mu = a.mu ^ b.mu;
  out.nu = a.nu ^ b.nu;
  return out;
}

PauliOp pauli_inverse(const PauliOp& a) {
  // a * a has mu = nu = 0 and phase 2*(a.k + a.nu . a.mu); the inverse is a
  // itself with the phase adjusted to cancel.
  PauliOp out = a;
  out.k = (-a.k - 2 * dot2(a.nu, a.mu)) & 3;
  return out;
}

int symplectic_form(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("symplectic_form: qubit count mismatch");
  }
  return (dot2(a.mu, b.nu) + dot2(a.nu, b.mu)) & 1;
}

bool commutes(const PauliOp& a, const PauliOp& b) {
  return symplectic_form(a, b) == 0;
}

f2::BitVector to_point(const PauliOp& a) {
  if (a.mu.none() && a.nu.none()) {
    throw DomainError("to_point: undefined for phase-only elements");
  }
  f2::BitVector p(2 * static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i) {
    p.set(i, a.mu.get(i));
    p.set(a.n + i, a.nu.get(i));
  }
  return p;
}

int hermitian_exponent(const PauliOp& a) {
  return dot2(a.mu, a.nu);
}

bool is_hermitian(const PauliOp& a) {
  return ((a.k - hermitian_exponent(a)) & 1) == 0;
}

int canonical_phase(const PauliOp& a) {
  std::size_t y = 0;
  for (int i = 0; i < a.n; ++i) {
    if (a.mu.get(i) && a.nu.get(i)) ++y;
  }
  return static_cast<int>(3 * y) & 3;
}

PauliOp parse_pauli(const std::string& s) {
  std::size_t pos = 0;
  int k = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == 'i')) {
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == 'i') {
      k = 1;
      ++pos;
    } else {
      ++pos;
      if (pos < s.size() && s[pos] == 'i') {
        k = 3;
        ++pos;
      } else {
        k = 2;
      }
    }
  }
  std::size_t n = s.size() - pos;
  if (n == 0) {
    throw std::invalid_argument("parse_pauli: empty operator body");
  }
  PauliOp out = PauliOp::identity(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i, ++pos) {
    switch (s[pos]) {
      case 'I':
        break;
      case 'X':
        out.nu.set(i, true);
        break;
      case 'Z':
        out.mu.set(i, true);
        break;
      case 'Y':
        out.mu.set(i, true);
        out.nu.set(i, true);
        k += 3;  // Y = i XZ = i^3 ZX
        break;
      default:
        throw std::invalid_argument("parse_pauli: unexpected character '" +
                                    std::string(1, s[pos]) + "'");
    }
  }
  out.k = k & 3;
  return out;
}

std::string format_pauli(const PauliOp& a) {
  int y_count = 0;
  std::string body;
  body.reserve(a.n);
  for (int i = 0; i < a.n; ++i) {
    bool z = a.mu.get(i), x = a.nu.get(i);
    if (z && x) {
      body += 'Y';
      ++y_count;
    } else if (z) {
      body += 'Z';
    } else if (x) {
      body += 'X';
    } else {
      body += 'I';
    }
  }
  static const char* prefix[4] = {"", "i", "-", "-i"};
  return prefix[(a.k + y_count) & 3] + body;
}

}  // namespace stabminor
