#include "stabminor/action.hpp"

#include <stdexcept>

namespace stabminor {

namespace {

// Alternating masks: bit i set iff bit `slot` of the index i is zero.
constexpr std::uint64_t LOW_MASK[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

void check_sizes(const GroupElement& g, int n, const char* who) {
  if (g.n() != n) {
    throw std::invalid_argument(std::string(who) + ": size mismatch");
  }
}

}  // namespace

PauliOp act_on_pauli(const GroupElement& g, const PauliOp& a) {
  check_sizes(g, a.n, "act_on_pauli");
  int n = a.n;
  PauliOp tmp = a;
  for (int i = 0; i < n; ++i) {
    const std::string& word = local2_word(g.slots[i]);
    bool mu = tmp.mu.get(i), nu = tmp.nu.get(i);
    // Rightmost letter of the word conjugates first.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it == 'H') {
        // H: X <-> Z, Y -> -Y.
        tmp.k = (tmp.k + 2 * (mu & nu)) & 3;
        std::swap(mu, nu);
      } else {
        // sqrt(Z): X -> Y = i^3 ZX, Z -> Z, Y -> -X.
        tmp.k = (tmp.k + 3 * nu) & 3;
        mu ^= nu;
      }
    }
    tmp.mu.set(i, mu);
    tmp.nu.set(i, nu);
  }
  PauliOp out = PauliOp::identity(n);
  out.k = tmp.k;
  for (int i = 0; i < n; ++i) {
    out.mu.set(g.perm[i], tmp.mu.get(i));
    out.nu.set(g.perm[i], tmp.nu.get(i));
  }
  return out;
}

StabilizerGroup act_on_group(const GroupElement& g, const StabilizerGroup& s) {
  check_sizes(g, s.n, "act_on_group");
  std::vector<PauliOp> gens(s.generators.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    gens[g.perm[i]] = act_on_pauli(g, s.generators[i]);
  }
  return group_from_generators(gens);
}

Lagrangian act_on_lagrangian(const GroupElement& g, const Lagrangian& l) {
  check_sizes(g, l.n, "act_on_lagrangian");
  int n = l.n;
  f2::BitMatrix out(2 * static_cast<std::size_t>(n), n);
  for (int i = 0; i < n; ++i) {
    const Local2& m = g.slots[i];
    f2::BitVector top = l.basis.row(i);
    f2::BitVector bottom = l.basis.row(n + i);
    f2::BitVector new_top(n), new_bottom(n);
    if (m.a) new_top ^= top;
    if (m.b) new_top ^= bottom;
    if (m.c) new_bottom ^= top;
    if (m.d) new_bottom ^= bottom;
    out.row(g.perm[i]) = new_top;
    out.row(n + g.perm[i]) = new_bottom;
  }
  return Lagrangian::from_basis(n, out);
}

MinorPoint act_on_point(const GroupElement& g, const MinorPoint& p) {
  check_sizes(g, p.n, "act_on_point");
  PointOps ops(p.n);
  std::uint64_t bits = p.bits;
  for (int i = 0; i < p.n; ++i) {
    bits = ops.local(bits, i, g.slots[i]);
  }
  bits = point_permute(bits, p.n, g.perm);
  return {p.n, bits};
}

PointOps::PointOps(int n_) : n(n_), generator_count(3 * n_ - 1) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("PointOps: 1 <= n <= 6");
  }
}

std::uint64_t PointOps::had(std::uint64_t bits, int slot) const {
  std::uint64_t lo = LOW_MASK[slot];
  int w = 1 << slot;
  return ((bits & lo) << w) | ((bits >> w) & lo);
}

std::uint64_t PointOps::sqz(std::uint64_t bits, int slot) const {
  // z'_{T without t} = z_{T without t} + z_{T with t}.
  std::uint64_t lo = LOW_MASK[slot];
  int w = 1 << slot;
  return bits ^ ((bits >> w) & lo);
}

std::uint64_t PointOps::hsh(std::uint64_t bits, int slot) const {
  // z'_{T with t} = z_{T with t} + z_{T without t}.
  std::uint64_t lo = LOW_MASK[slot];
  int w = 1 << slot;
  return bits ^ ((bits & lo) << w);
}

std::uint64_t PointOps::swap_adjacent(std::uint64_t bits, int slot) const {
  std::uint64_t lo_b = LOW_MASK[slot], lo_b1 = LOW_MASK[slot + 1];
  int w = 1 << slot;
  std::uint64_t mask_a = ~lo_b & lo_b1;   // index bit `slot` set, bit slot+1 clear
  std::uint64_t mask_b = lo_b & ~lo_b1;   // index bit `slot` clear, bit slot+1 set
  return (bits & ~(mask_a | mask_b)) | ((bits & mask_a) << w) |
         ((bits & mask_b) >> w);
}

std::uint64_t PointOps::local(std::uint64_t bits, int slot,
                              const Local2& m) const {
  std::uint64_t lo = LOW_MASK[slot];
  int w = 1 << slot;
  std::uint64_t z0 = bits & lo;
  std::uint64_t z1 = (bits >> w) & lo;
  std::uint64_t n0 = (m.a ? z0 : 0) ^ (m.b ? z1 : 0);
  std::uint64_t n1 = (m.c ? z0 : 0) ^ (m.d ? z1 : 0);
  return n0 | (n1 << w);
}

std::uint64_t PointOps::apply_generator(std::uint64_t bits, int gen) const {
  if (gen < n) return had(bits, gen);
  if (gen < 2 * n) return sqz(bits, gen - n);
  return swap_adjacent(bits, gen - 2 * n);
}

std::uint64_t point_permute(std::uint64_t bits, int n,
                            const std::vector<int>& perm) {
  bool identity = true;
  for (int i = 0; i < n; ++i) {
    if (perm[i] != i) {
      identity = false;
      break;
    }
  }
  if (identity) return bits;
  std::uint64_t out = 0;
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!((bits >> m) & 1)) continue;
    std::uint64_t target = 0;
    for (int t = 0; t < n; ++t) {
      if ((m >> t) & 1) target |= std::uint64_t{1} << perm[t];
    }
    out |= std::uint64_t{1} << target;
  }
  return out;
}

}  // namespace stabminor
