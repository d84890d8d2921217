#include <doctest.h>

#include <array>

#include <random>
#include <set>
#include <vector>

#include "stabminor/local_group.hpp"

using namespace stabminor;

namespace {

GroupElement random_element(std::mt19937_64& rng, int n) {
  GroupElement g = GroupElement::identity(n);
  for (int i = 0; i < n; ++i) {
    g.slots[i] = all_local2()[rng() % 6];
  }
  for (int i = n - 1; i > 0; --i) {
    std::swap(g.perm[i], g.perm[rng() % (i + 1)]);
  }
  return g;
}

// Packs an element into a comparable key for closure enumeration.
std::vector<int> key_of(const GroupElement& g) {
  std::vector<int> k;
  for (const auto& m : g.slots) k.push_back(m.code());
  for (int p : g.perm) k.push_back(p);
  return k;
}

std::size_t closure_size(const std::vector<GroupElement>& gens, int n) {
  std::set<std::vector<int>> seen;
  std::vector<GroupElement> frontier{GroupElement::identity(n)};
  seen.insert(key_of(frontier[0]));
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        GroupElement h = compose(s, g);
        if (seen.insert(key_of(h)).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("the six local elements and their words") {
  CHECK(all_local2().size() == 6);
  CHECK(local2_name(LOCAL_I) == "I");
  CHECK(local2_name(HAD) == "H");
  CHECK(local2_name(SQZ) == "S");
  CHECK(local2_from_name("HSH") == Local2{true, false, true, true});
  for (const auto& m : all_local2()) {
    CHECK(local2_from_name(local2_name(m)) == m);
    CHECK(m.mul(m.inv()) == LOCAL_I);
    // ad + bc = 1 (invertibility).
    CHECK(((m.a & m.d) ^ (m.b & m.c)) == 1);
  }
}

TEST_CASE("identity laws") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    GroupElement e = GroupElement::identity(n);
    GroupElement g = random_element(rng, n);
    CHECK(compose(e, g) == g);
    CHECK(compose(g, e) == g);
    CHECK(compose(g, group_inverse(g)) == e);
    CHECK(compose(group_inverse(g), g) == e);
  }
}

TEST_CASE("pure permutations compose as functions") {
  int n = 4;
  GroupElement a = transposition(n, 0, 1);
  GroupElement b = transposition(n, 1, 2);
  GroupElement ab = compose(a, b);
  // (a o b)(i) = a(b(i)).
  for (int i = 0; i < n; ++i) {
    CHECK(ab.perm[i] == a.perm[b.perm[i]]);
  }
}

TEST_CASE("semidirect composition is associative (randomized)") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    GroupElement a = random_element(rng, n);
    GroupElement b = random_element(rng, n);
    GroupElement c = random_element(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("generator closure sizes") {
  // |GL(2,F2)|^n * n!
  CHECK(closure_size(group_generators(1), 1) == 6);
  CHECK(closure_size(group_generators(2), 2) == 72);
  CHECK(closure_size(group_generators(3), 3) == 1296);
}

TEST_CASE("generators are involutions") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : group_generators(n)) {
      CHECK(compose(g, g) == GroupElement::identity(n));
    }
  }
}

TEST_CASE("format and parse round trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    GroupElement g = random_element(rng, n);
    CHECK(parse_group_element(format_group_element(g), n) == g);
  }
  GroupElement id2 = GroupElement::identity(2);
  CHECK(format_group_element(id2) == "id");
  CHECK(parse_group_element("H@1 S@3 perm=(1 2)", 3).slots[0] == HAD);
}
