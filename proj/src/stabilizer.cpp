#include "stabminor/stabilizer.hpp"

#include <sstream>

#include "stabminor/errors.hpp"

namespace stabminor {

StabilizerGroup group_from_generators(const std::vector<PauliOp>& gens) {
  if (gens.empty()) {
    throw WrongCount(0, 1);
  }
  int n = gens[0].n;
  if (gens.size() != static_cast<std::size_t>(n)) {
    throw WrongCount(gens.size(), n);
  }
  for (const auto& g : gens) {
    if (g.n != n) {
      throw std::invalid_argument("group_from_generators: mixed qubit counts");
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (symplectic_form(gens[i], gens[j]) != 0) {
        throw NotCommuting(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  StabilizerGroup s{n, gens};
  if (f2::rank(generator_matrix(s)) != static_cast<std::size_t>(n)) {
    throw NotIndependent();
  }
  return s;
}

StabilizerGroup parse_group(const std::string& s) {
  std::vector<PauliOp> gens;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      gens.push_back(parse_pauli(token));
      token.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return group_from_generators(gens);
}

std::string format_group(const StabilizerGroup& s) {
  std::string out;
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) out += ",";
    out += format_pauli(s.generators[i]);
  }
  return out;
}

f2::BitMatrix generator_matrix(const StabilizerGroup& s) {
  f2::BitMatrix m(2 * static_cast<std::size_t>(s.n), s.generators.size());
  for (std::size_t c = 0; c < s.generators.size(); ++c) {
    const PauliOp& g = s.generators[c];
    for (int r = 0; r < s.n; ++r) {
      m.set(r, c, g.mu.get(r));
      m.set(s.n + r, c, g.nu.get(r));
    }
  }
  return m;
}

bool contains_minus_identity(const StabilizerGroup& s) {
  for (const auto& g : s.generators) {
    if (((g.k + hermitian_exponent(g)) & 1) != 0) return true;
  }
  return false;
}

bool contains_minus_identity_bruteforce(const StabilizerGroup& s) {
  // Every group element is a product of generators with exponents in
  // {0,1,2,3} (each generator has order dividing 4).
  std::size_t n = s.generators.size();
  std::vector<int> exp(n, 0);
  while (true) {
    PauliOp p = PauliOp::identity(s.n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int e = 0; e < exp[i]; ++e) p = pauli_mul(p, s.generators[i]);
    }
    if (p.mu.none() && p.nu.none() && p.k == 2) return true;
    std::size_t i = 0;
    while (i < n && exp[i] == 3) exp[i++] = 0;
    if (i == n) break;
    ++exp[i];
  }
  return false;
}

std::pair<StabilizerGroup, f2::BitVector> sign_normalize(
    const StabilizerGroup& s) {
  StabilizerGroup out = s;
  f2::BitVector gamma(static_cast<std::size_t>(s.n));
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    PauliOp& g = out.generators[i];
    int ck = canonical_phase(g);
    if (((g.k - ck) & 1) != 0) {
      throw NotAStabilizerStateGroup();
    }
    gamma.set(i, ((g.k - ck) & 3) == 2);
    g.k = ck;
  }
  return {out, gamma};
}

}  // namespace stabminor
