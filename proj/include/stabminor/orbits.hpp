#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabminor/graph.hpp"
#include "stabminor/local_group.hpp"
#include "stabminor/minor_point.hpp"

namespace stabminor {

inline constexpr const char* kToolVersion = "1.0.0";

// One orbit of the minor variety under SL(2,F2)^n x| S_n. The canonical
// point is the minimal bitmask-integer key of the orbit; orbit ids are
// 1-based after sorting all orbits by (size, canonical key).
struct OrbitReport {
  int orbit_id = 0;
  std::uint64_t size = 0;
  MinorPoint canonical_point;
  Graph representative;  // loopless, from graph_form of the canonical point

  std::uint64_t state_count_4n() const;  // 4^n * size
  std::uint64_t state_count_2n() const;  // 2^n * size
};

struct Partition {
  int n = 0;
  std::vector<OrbitReport> orbits;

  std::uint64_t total_points() const;
  // 0 when the key is not a canonical representative.
  int orbit_id_of_canonical(std::uint64_t key) const;
};

// Full orbit of a point as a sorted vector of bitmask keys.
std::vector<std::uint64_t> orbit_of(const MinorPoint& p);

// Orbit partition of the whole variety. Seeds the search from every
// symmetric-chart point (each orbit contains one: any point can be moved
// onto the chart by a subset-Hadamard element). Deterministic for any
// thread count; threads only parallelize seed generation.
Partition partition(int n, int threads = 1);

struct Classification {
  int orbit_id = 0;
  MinorPoint canonical_point;
  GroupElement witness;  // act_on_point(witness, input point) = canonical
};

// Orbit membership with an explicit witness, checked before returning.
// Throws NotOnVariety for inputs off the variety.
Classification classify(const Partition& part, const MinorPoint& p);
Classification classify(const Partition& part, const Graph& g);
Classification classify(const Partition& part, const StabilizerGroup& s);

// Census emitters. The text form is a fixed-width table; the JSON schema
// is documented in the README. Labels attach the published-table names for
// n = 4 and 5.
std::string census_text(const Partition& part);
std::string census_json(const Partition& part);

}  // namespace stabminor
