#include <doctest.h>

#include <random>

#include "stabminor/errors.hpp"
#include "stabminor/stabilizer.hpp"

using namespace stabminor;

TEST_CASE("group validation") {
  CHECK_NOTHROW(parse_group("ZI,IZ"));
  CHECK_NOTHROW(parse_group("XX,ZZ"));
  CHECK_THROWS_AS(parse_group("XI,ZI"), NotCommuting);
  CHECK_THROWS_AS(parse_group("ZI,ZI"), NotIndependent);
  CHECK_THROWS_AS(parse_group("ZI"), WrongCount);
  CHECK_THROWS_AS(parse_group("ZII,IZI,IIZ,ZZZ"), WrongCount);
}

TEST_CASE("NotCommuting reports the offending pair") {
  try {
    parse_group("ZII,IXI,IZI");
    FAIL("expected NotCommuting");
  } catch (const NotCommuting& e) {
    CHECK(e.i == 1);
    CHECK(e.j == 2);
  }
}

TEST_CASE("contains_minus_identity") {
  // All plain Z generators square to +I.
  CHECK_FALSE(contains_minus_identity(parse_group("ZI,IZ")));
  // ZX = iY squares to -I.
  StabilizerGroup zx = group_from_generators({parse_pauli("iY")});
  CHECK(zx.generators[0].k == 0);  // ZX itself
  CHECK(contains_minus_identity(zx));
  // Y squares to +I.
  CHECK_FALSE(contains_minus_identity(parse_group("Y")));
}

TEST_CASE("hermiticity criterion agrees with full expansion") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 300) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<PauliOp> gens;
    for (int i = 0; i < n; ++i) {
      PauliOp p = PauliOp::identity(n);
      p.k = static_cast<int>(rng() & 3);
      for (int q = 0; q < n; ++q) {
        p.mu.set(q, rng() & 1);
        p.nu.set(q, rng() & 1);
      }
      gens.push_back(p);
    }
    StabilizerGroup s;
    try {
      s = group_from_generators(gens);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(contains_minus_identity(s) == contains_minus_identity_bruteforce(s));
    ++done;
  }
}

TEST_CASE("sign_normalize extracts signs") {
  StabilizerGroup plain = parse_group("ZI,IX");
  auto [s0, gamma] = sign_normalize(plain);
  CHECK(gamma.none());
  CHECK(s0.generators == plain.generators);

  StabilizerGroup flipped = parse_group("-ZI,IX");
  auto [s1, gamma1] = sign_normalize(flipped);
  CHECK(gamma1.get(0));
  CHECK_FALSE(gamma1.get(1));
  CHECK(s1.generators[0] == parse_pauli("ZI"));

  auto [sy, gy] = sign_normalize(parse_group("-Y"));
  CHECK(gy.get(0));
  CHECK(sy.generators[0] == parse_pauli("Y"));

  StabilizerGroup zx = group_from_generators({parse_pauli("-iY")});
  CHECK_THROWS_AS(sign_normalize(zx), NotAStabilizerStateGroup);
}
