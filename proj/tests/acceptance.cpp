// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "stabminor/action.hpp"
#include "stabminor/errors.hpp"
#include "stabminor/graph.hpp"
#include "stabminor/orbits.hpp"
#include "stabminor/reference_tables.hpp"
#include "stabminor/statecheck.hpp"

using namespace stabminor;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool pass, const std::string& what,
            const std::string& detail = "") {
  if (!pass) ++g_failures;
  std::printf("CRITERION %2d: %s  %s%s%s\n", id, pass ? "PASS" : "FAIL",
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

PauliOp random_pauli(std::mt19937_64& rng, int n) {
  PauliOp p = PauliOp::identity(n);
  p.k = static_cast<int>(rng() & 3);
  for (int i = 0; i < n; ++i) {
    p.mu.set(i, rng() & 1);
    p.nu.set(i, rng() & 1);
  }
  return p;
}

GroupElement random_element(std::mt19937_64& rng, int n) {
  GroupElement g = GroupElement::identity(n);
  for (int i = 0; i < n; ++i) g.slots[i] = all_local2()[rng() % 6];
  for (int i = n - 1; i > 0; --i) {
    std::swap(g.perm[i], g.perm[rng() % (i + 1)]);
  }
  return g;
}

Lagrangian random_lagrangian(std::mt19937_64& rng, int n) {
  f2::BitMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      bool v = rng() & 1;
      s.set(i, j, v);
      s.set(j, i, v);
    }
  }
  std::uint64_t subset = rng() & ((std::uint64_t{1} << n) - 1);
  return lagrangian_from_chart(n, subset, s);
}

Graph random_graph(std::mt19937_64& rng, int n, bool allow_loops) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i) {
    for (int j = allow_loops ? i : i + 1; j < n; ++j) {
      if (rng() & 1) {
        g.theta.set(i, j, true);
        g.theta.set(j, i, true);
      }
    }
  }
  return g;
}

void criterion_1() {
  auto start = Clock::now();
  Partition p = partition(4);
  double elapsed = seconds_since(start);
  std::multiset<std::uint64_t> sizes;
  for (const auto& o : p.orbits) sizes.insert(o.size);
  bool pass = p.orbits.size() == 6 &&
              sizes == std::multiset<std::uint64_t>{81, 108, 162, 324, 648,
                                                    972} &&
              p.total_points() == 2295 && elapsed < 1.0;
  std::ostringstream d;
  d << p.orbits.size() << " orbits, total " << p.total_points() << ", "
    << elapsed << " s";
  report(1, pass, "n=4 census sizes {81,324,648,162,108,972}, sum 2295, <1s",
         d.str());
}

void criterion_2() {
  Partition p = partition(4);
  std::set<int> ids;
  bool pass = true;
  for (const auto& row : reference_rows(4)) {
    Graph g = parse_graph(row.edges, 4);
    Classification cls = classify(p, graph_to_point(g));
    ids.insert(cls.orbit_id);
    if (p.orbits[cls.orbit_id - 1].size != row.size) pass = false;
  }
  pass = pass && ids.size() == 6;
  report(2, pass, "n=4 table rows land in 6 distinct orbits of matching size");
}

void criterion_3() {
  auto start = Clock::now();
  Partition p = partition(5);
  std::set<int> ids;
  bool pass = p.orbits.size() == 11;
  for (const auto& row : reference_rows(5)) {
    Graph g = parse_graph(row.edges, 5);
    MinorPoint row_point = graph_to_point(g);
    ids.insert(classify(p, row_point).orbit_id);
    // The generator strings (Z on the vertex, X on the neighbours)
    // regenerate theta and the point.
    StabilizerGroup group =
        graph_generators(g, GraphConvention::minor_table);
    StabilizerGroup reparsed = parse_group(format_group(group));
    Lagrangian l = lagrangian_from_group(reparsed);
    ChartForm cf = chart_form(l);
    if (cf.subset != 0 || cf.s != g.theta) pass = false;
    if (minor_point(l) != row_point) pass = false;
  }
  double elapsed = seconds_since(start);
  // Stated criterion: the 11 rows land in 11 pairwise distinct orbits.
  // Recomputation shows they land in 10: rows O5 (4-path + isolated
  // vertex) and O8 (4-cycle + isolated vertex) are one orbit (the 4-path
  // and 4-cycle are local-Clifford equivalent), and the orbit of the
  // 5-vertex tree 1-2,2-3,3-4,3-5 has no row. The census itself has 11
  // orbits. The distinctness clause is reported as stated, so this
  // criterion fails against the published row list.
  pass = pass && ids.size() == 11 && elapsed < 10.0;
  std::ostringstream d;
  d << p.orbits.size() << " orbits, rows cover " << ids.size()
    << " distinct orbits (published rows O5 and O8 coincide; see the "
       "bundled known-issue list), "
    << elapsed << " s";
  report(3, pass, "n=5 census has 11 orbits; table rows distinct; "
                  "generators regenerate theta+point; <10s",
         d.str());
}

void criterion_4() {
  Partition p = partition(5);
  Graph k5 = parse_graph("1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5,4-5", 5);
  Graph star = parse_graph("1-2,1-3,1-4,1-5", 5);
  Classification a = classify(p, k5);
  Classification b = classify(p, star);
  auto labels = table_labels(p);
  bool pass = a.orbit_id == b.orbit_id &&
              labels.count(a.orbit_id) && labels.at(a.orbit_id) == "O9";
  std::ostringstream d;
  d << "K5 -> orbit " << a.orbit_id << ", star -> orbit " << b.orbit_id;
  report(4, pass, "K5 and the 4-star share the O9 orbit", d.str());
}

void criterion_5() {
  std::mt19937_64 rng(20240817);
  bool pass = true;
  // 25 graphs per n in {3,4,5} with a partition-backed classify.
  for (int n = 3; n <= 5; ++n) {
    Partition p = partition(n);
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_graph(rng, n, true);
      if (!g.has_loops()) g.theta.set(trial % n, trial % n, true);
      Classification with_loops = classify(p, g);
      Classification without = classify(p, loopless(g).graph);
      if (with_loops.orbit_id != without.orbit_id) pass = false;
    }
  }
  // 25 graphs at n = 6 via direct orbit membership.
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, 6, true);
    if (!g.has_loops()) g.theta.set(trial % 6, trial % 6, true);
    auto orbit = orbit_of(graph_to_point(g));
    if (!std::binary_search(orbit.begin(), orbit.end(),
                            graph_to_point(loopless(g).graph).bits)) {
      pass = false;
    }
  }
  report(5, pass, "classify(G) = classify(loopless(G)) for 100 loopy graphs, "
                  "n in {3..6}");
}

void criterion_6() {
  auto start = Clock::now();
  const std::uint64_t expected[5] = {0, 3, 15, 135, 2295};
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_lagrangians(n);
    std::set<std::uint64_t> image;
    for (const Lagrangian& l : all) {
      MinorPoint pt = minor_point(l);
      image.insert(pt.bits);
      if (!(lagrangian_from_point(pt) == l)) pass = false;
    }
    if (all.size() != expected[n] || image.size() != expected[n]) pass = false;
  }
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 5.0;
  std::ostringstream d;
  d << elapsed << " s";
  report(6, pass, "pi is bijective on 3/15/135/2295 Lagrangians with exact "
                  "inversion, <5s",
         d.str());
}

void criterion_7() {
  bool pass = true;
  // Exhaustive at n = 3 over all Lagrangians x all generators.
  for (const Lagrangian& l : enumerate_lagrangians(3)) {
    MinorPoint pt = minor_point(l);
    for (const GroupElement& g : group_generators(3)) {
      if (!(minor_point(act_on_lagrangian(g, l)) == act_on_point(g, pt))) {
        pass = false;
      }
    }
  }
  // 1e5 randomized cases at n = 5.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100000; ++trial) {
    Lagrangian l = random_lagrangian(rng, 5);
    GroupElement g = random_element(rng, 5);
    if (!(minor_point(act_on_lagrangian(g, l)) ==
          act_on_point(g, minor_point(l)))) {
      pass = false;
      break;
    }
  }
  report(7, pass, "minor_point o act_on_lagrangian = act_on_point o "
                  "minor_point (exhaustive n=3, 1e5 random n=5)");
}

void criterion_8() {
  std::mt19937_64 rng(8);
  bool pass = true;
  for (int trial = 0; trial < 100000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    PauliOp a = random_pauli(rng, n), b = random_pauli(rng, n),
            c = random_pauli(rng, n);
    if (!(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)))) {
      pass = false;
    }
    PauliOp sq = pauli_mul(a, a);
    if (!(sq.mu.none() && sq.nu.none() && (sq.k == 0 || sq.k == 2))) {
      pass = false;
    }
    PauliOp ab = pauli_mul(a, b), ba = pauli_mul(b, a);
    if (((ab.k - ba.k) & 3) != 2 * symplectic_form(a, b)) pass = false;
    bool a0 = a.mu.none() && a.nu.none(), b0 = b.mu.none() && b.nu.none();
    if (!a0 && !b0 && !(ab.mu.none() && ab.nu.none())) {
      if (!(to_point(ab) == (to_point(a) ^ to_point(b)))) pass = false;
    }
    if (!pass) break;
  }
  report(8, pass, "Pauli algebra: associativity, square phases, commutation "
                  "<-> form, point additivity (1e5 cases)");
}

void criterion_9() {
  auto start = Clock::now();
  bool pass = true;
  int states = 0;
  for (int n : {4, 5}) {
    Partition p = partition(n);
    for (const auto& o : p.orbits) {
      StabilizerGroup s =
          graph_generators(o.representative, GraphConvention::standard);
      try {
        // stabilized_state enforces residuals <= 1e-12 and the two-seed
        // rank-one agreement internally; recheck the residual here.
        StateVector v = stabilized_state(s, f2::BitVector(n));
        auto [s0, gamma0] = sign_normalize(s);
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
          StateVector mv = apply_pauli(s0.generators[i], v);
          double sign = gamma0.get(i) ? -1.0 : 1.0;
          double residual = 0;
          for (std::size_t m = 0; m < v.amp.size(); ++m) {
            residual += std::norm(mv.amp[m] - sign * v.amp[m]);
          }
          if (std::sqrt(residual) > 1e-12) pass = false;
        }
        ++states;
      } catch (const std::exception&) {
        pass = false;
      }
    }
  }
  double elapsed = seconds_since(start);
  pass = pass && states == 17 && elapsed < 5.0;
  std::ostringstream d;
  d << states << " representatives, " << elapsed << " s";
  report(9, pass, "state oracle: residuals <= 1e-12, rank-1 double seed, "
                  "all n=4/n=5 representatives, <5s",
         d.str());
}

void criterion_10() {
  std::uint64_t c1 = census_stabilizer_states(1);
  std::uint64_t c2 = census_stabilizer_states(2);
  std::uint64_t c3 = census_stabilizer_states(3);
  bool pass = c1 == 6 && c2 == 60 && c3 == 1080;
  std::ostringstream d;
  d << "census " << c1 << "/" << c2 << "/" << c3
    << " = 2^n * prod(2^i+1); published 4^n-based n=4 figures for "
       "comparison: 20736/82944/165888/41472/27648/248832 (not asserted as "
       "distinct-state counts)";
  report(10, pass, "distinct-state census matches the 2^n count", d.str());
}

void criterion_11() {
  std::mt19937_64 rng(11);
  bool pass = true;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    GroupElement g = random_element(rng, n), h = random_element(rng, n);
    // Semidirect law: slots (phi_tau(g) * h), permutation g.perm o h.perm.
    GroupElement want = GroupElement::identity(n);
    for (int i = 0; i < n; ++i) {
      want.slots[i] = g.slots[h.perm[i]].mul(h.slots[i]);
      want.perm[i] = g.perm[h.perm[i]];
    }
    if (!(compose(g, h) == want)) pass = false;

    GroupElement e = GroupElement::identity(n);
    PauliOp p = random_pauli(rng, n);
    Lagrangian l = random_lagrangian(rng, n);
    MinorPoint q = minor_point(l);
    GroupElement gh = compose(g, h);
    // Pauli level: exact on (mu, nu), modulo sign on the phase (the
    // symplectic image fixes conjugation only up to a Pauli factor).
    PauliOp via_gh = act_on_pauli(gh, p);
    PauliOp via_two = act_on_pauli(g, act_on_pauli(h, p));
    if (!(act_on_pauli(e, p) == p) || via_gh.mu != via_two.mu ||
        via_gh.nu != via_two.nu || (((via_gh.k - via_two.k) & 3) % 2) != 0) {
      pass = false;
    }
    if (!(act_on_lagrangian(e, l) == l) ||
        !(act_on_lagrangian(gh, l) ==
          act_on_lagrangian(g, act_on_lagrangian(h, l)))) {
      pass = false;
    }
    if (!(act_on_point(e, q) == q) ||
        !(act_on_point(gh, q) == act_on_point(g, act_on_point(h, q)))) {
      pass = false;
    }
    if (!pass) break;
  }
  report(11, pass, "semidirect law and the action axioms for all three "
                   "actions (1e4 cases)");
}

void criterion_12() {
  VerifyOutcome v4 = verify_tables(4);
  VerifyOutcome v5 = verify_tables(5);
  bool pass = v4.pass && v4.notes.empty() && v5.pass;
  // Every n=5 note must be documented and the anticipated O10 point note
  // must be among them. The bundled known-issue list extends the single
  // anticipated note with four more spots found by recomputation (the O6
  // point string, the O4 generator string, the O5/O8 orbit coincidence
  // and the uncovered eleventh orbit); all are reported, none patched.
  bool has_o10 = false;
  for (const auto& note : v5.notes) {
    if (!note.documented) pass = false;
    if (note.row == "O10" && note.field == "point") has_o10 = true;
  }
  pass = pass && has_o10;
  std::ostringstream d;
  d << "n=4: " << v4.notes.size() << " notes; n=5: " << v5.notes.size()
    << " documented notes (O10 anchor plus O6 point, O4 generator string, "
       "O5/O8 orbit coincidence, uncovered orbit)";
  report(12, pass, "verify(4) clean; verify(5) passes with documented notes",
         d.str());
}

void stretch_n6() {
  auto start = Clock::now();
  Partition p = partition(6, 4);
  double elapsed = seconds_since(start);
  bool sum_ok = p.total_points() == 4922775;
  std::printf("STRETCH     : %s  n=6 census total %llu (want 4922775), "
              "%zu orbits (published local-Clifford count: 26), %.1f s\n",
              sum_ok ? "PASS" : "FAIL",
              static_cast<unsigned long long>(p.total_points()),
              p.orbits.size(), elapsed);
  if (!sum_ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--stretch") stretch = true;
    if (std::string(argv[i]) == "--stretch-only") {
      stretch_n6();
      return g_failures == 0 ? 0 : 1;
    }
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (stretch) stretch_n6();
  if (g_failures == 0) {
    std::printf("ALL CRITERIA PASSED\n");
    return 0;
  }
  std::printf("%d CRITERIA FAILED\n", g_failures);
  return 1;
}
