#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace stabminor {

// An element of GL(2,F2) = SL(2,F2), acting on a qubit's exponent pair as
// (mu, nu) -> (a mu + b nu, c mu + d nu).
struct Local2 {
  bool a = true, b = false, c = false, d = true;

  bool operator==(const Local2&) const = default;

  Local2 mul(const Local2& o) const {
    return {static_cast<bool>((a & o.a) ^ (b & o.c)),
            static_cast<bool>((a & o.b) ^ (b & o.d)),
            static_cast<bool>((c & o.a) ^ (d & o.c)),
            static_cast<bool>((c & o.b) ^ (d & o.d))};
  }
  Local2 inv() const { return {d, b, c, a}; }
  bool is_identity() const { return a && !b && !c && d; }

  // 4-bit code abcd, used for table lookups.
  int code() const { return (a << 3) | (b << 2) | (c << 1) | d; }
};

inline constexpr Local2 LOCAL_I{true, false, false, true};
// Image of H: swaps mu and nu (X <-> Z).
inline constexpr Local2 HAD{false, true, true, false};
// Image of sqrt(Z): mu' = mu + nu (X -> Y, Z -> Z).
inline constexpr Local2 SQZ{true, true, false, true};

// Canonical word for each of the 6 elements over the alphabet {H, S},
// where S denotes SQZ. The word is a left-to-right matrix product; when
// folding conjugation tables the rightmost letter acts first.
const std::string& local2_word(const Local2& m);
// Names the element by its word: one of I, H, S, HS, SH, HSH.
const std::string& local2_name(const Local2& m);
Local2 local2_from_name(const std::string& name);
const std::array<Local2, 6>& all_local2();

// An element (U_1,...,U_n; sigma) of SL(2,F2)^n x| S_n. perm is 0-based:
// sigma maps slot i to slot perm[i], and the action moves the content of
// slot i to slot sigma(i) after the local parts have been applied.
struct GroupElement {
  std::vector<Local2> slots;
  std::vector<int> perm;

  static GroupElement identity(int n);

  int n() const { return static_cast<int>(slots.size()); }
  bool is_identity() const;

  bool operator==(const GroupElement&) const = default;
};

// Semidirect product law: out.slots[i] = g1.slots[g2.perm[i]] * g2.slots[i]
// and out.perm = g1.perm o g2.perm, so that acting by compose(g1, g2)
// equals acting by g2 first and then g1.
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

GroupElement group_inverse(const GroupElement& g);

// Single-slot local elements and adjacent transpositions.
GroupElement had_at(int n, int slot);
GroupElement sqz_at(int n, int slot);
GroupElement local_at(int n, int slot, const Local2& m);
GroupElement transposition(int n, int i, int j);

// The 3n-1 BFS generators: HAD at each slot, SQZ at each slot, adjacent
// transpositions (i, i+1). Each is an involution.
std::vector<GroupElement> group_generators(int n);

// Text form, e.g. "H@1 S@3 perm=(1 2)"; identity prints as "id".
std::string format_group_element(const GroupElement& g);
GroupElement parse_group_element(const std::string& s, int n);

}  // namespace stabminor
