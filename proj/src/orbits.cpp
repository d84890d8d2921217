#include "stabminor/orbits.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "stabminor/action.hpp"
#include "stabminor/errors.hpp"
#include "stabminor/reference_tables.hpp"

namespace stabminor {

namespace {

// Expands the orbit of `start` under the 3n-1 generators. `parents` is
// optional; when given, it records (parent key, generator index) BFS links
// rooted at `start`.
struct OrbitScan {
  std::vector<std::uint64_t> points;
  std::uint64_t min_key = 0;
};

OrbitScan scan_orbit(
    const PointOps& ops, std::uint64_t start,
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>>* parents,
    std::unordered_set<std::uint64_t>* visited) {
  OrbitScan scan;
  std::unordered_set<std::uint64_t> local_visited;
  std::unordered_set<std::uint64_t>& seen =
      visited ? *visited : local_visited;
  scan.min_key = start;
  scan.points.push_back(start);
  seen.insert(start);
  std::size_t head = 0;
  while (head < scan.points.size()) {
    std::uint64_t cur = scan.points[head++];
    for (int gen = 0; gen < ops.generator_count; ++gen) {
      std::uint64_t next = ops.apply_generator(cur, gen);
      if (seen.insert(next).second) {
        scan.points.push_back(next);
        scan.min_key = std::min(scan.min_key, next);
        if (parents) (*parents)[next] = {cur, gen};
      }
    }
  }
  return scan;
}

void check_point(const MinorPoint& p) {
  // classify and orbit_of require genuine variety points.
  lagrangian_from_point(p);  // throws NotOnVariety otherwise
}

}  // namespace

std::uint64_t OrbitReport::state_count_4n() const {
  return size << (2 * canonical_point.n);
}

std::uint64_t OrbitReport::state_count_2n() const {
  return size << canonical_point.n;
}

std::uint64_t Partition::total_points() const {
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += o.size;
  return total;
}

int Partition::orbit_id_of_canonical(std::uint64_t key) const {
  for (const auto& o : orbits) {
    if (o.canonical_point.bits == key) return o.orbit_id;
  }
  return 0;
}

std::vector<std::uint64_t> orbit_of(const MinorPoint& p) {
  check_point(p);
  PointOps ops(p.n);
  OrbitScan scan = scan_orbit(ops, p.bits, nullptr, nullptr);
  std::sort(scan.points.begin(), scan.points.end());
  return scan.points;
}

Partition partition(int n, int threads) {
  if (n < 1 || n > 6) {
    throw BoundExceeded("partition: supported for 1 <= n <= 6");
  }
  PointOps ops(n);

  // Chart seeds: the principal-minor points of all symmetric matrices, in
  // packed-upper-triangle order. Every orbit contains a chart point.
  int tri = n * (n + 1) / 2;
  std::vector<std::uint64_t> seeds(std::size_t{1} << tri);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t sbits = begin; sbits < end; ++sbits) {
      f2::BitMatrix s(n, n);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j, ++bit) {
          if ((sbits >> bit) & 1) {
            s.set(i, j, true);
            s.set(j, i, true);
          }
        }
      }
      seeds[sbits] = from_symmetric(s).bits;
    }
  };
  int workers = std::max(1, threads);
  if (workers == 1 || seeds.size() < 1024) {
    fill(0, seeds.size());
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (seeds.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t begin = w * chunk;
      std::uint64_t end = std::min<std::uint64_t>(begin + chunk, seeds.size());
      if (begin >= end) break;
      pool.emplace_back(fill, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  std::unordered_set<std::uint64_t> visited;
  visited.reserve(2 * lagrangian_count(n));
  Partition part;
  part.n = n;
  for (std::uint64_t seed : seeds) {
    if (visited.contains(seed)) continue;
    OrbitScan scan = scan_orbit(ops, seed, nullptr, &visited);
    OrbitReport rep;
    rep.size = scan.points.size();
    rep.canonical_point = {n, scan.min_key};
    part.orbits.push_back(std::move(rep));
  }
  std::sort(part.orbits.begin(), part.orbits.end(),
            [](const OrbitReport& a, const OrbitReport& b) {
              if (a.size != b.size) return a.size < b.size;
              return a.canonical_point.bits < b.canonical_point.bits;
            });
  for (std::size_t i = 0; i < part.orbits.size(); ++i) {
    OrbitReport& rep = part.orbits[i];
    rep.orbit_id = static_cast<int>(i + 1);
    GraphForm gf = graph_form(lagrangian_from_point(rep.canonical_point));
    rep.representative = Graph::from_theta(gf.theta);
  }
  if (part.total_points() != lagrangian_count(n)) {
    throw std::logic_error("partition: orbit sizes do not cover the variety");
  }
  return part;
}

Classification classify(const Partition& part, const MinorPoint& p) {
  if (p.n != part.n) {
    throw std::invalid_argument("classify: wrong n for this partition");
  }
  check_point(p);
  PointOps ops(p.n);
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parents;
  OrbitScan scan = scan_orbit(ops, p.bits, &parents, nullptr);

  Classification cls;
  cls.canonical_point = {p.n, scan.min_key};
  cls.orbit_id = part.orbit_id_of_canonical(scan.min_key);
  if (cls.orbit_id == 0) {
    throw std::logic_error("classify: canonical point missing from partition");
  }

  // Walk the BFS links from the canonical point back to p, composing the
  // generators applied along the way (earliest first).
  std::vector<int> word;
  std::uint64_t cur = scan.min_key;
  while (cur != p.bits) {
    auto [parent, gen] = parents.at(cur);
    word.push_back(gen);
    cur = parent;
  }
  auto gens = group_generators(p.n);
  cls.witness = GroupElement::identity(p.n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cls.witness = compose(gens[*it], cls.witness);
  }
  if (act_on_point(cls.witness, p) != cls.canonical_point) {
    throw std::logic_error("classify: witness verification failed");
  }
  return cls;
}

Classification classify(const Partition& part, const Graph& g) {
  return classify(part, graph_to_point(g));
}

Classification classify(const Partition& part, const StabilizerGroup& s) {
  return classify(part, minor_point(lagrangian_from_group(s)));
}

std::string census_text(const Partition& part) {
  std::ostringstream out;
  auto labels = table_labels(part);
  out << "# stabminor " << kToolVersion << " orbit census, n = " << part.n
      << "\n";
  out << "# point convention: z_T at bit mask(T); strings in graded-lex "
         "order\n";
  out << "# total points: " << part.total_points() << "\n";
  out << std::left << std::setw(6) << "orbit" << std::setw(8) << "label"
      << std::setw(10) << "size" << std::setw(14) << "states(4^n)"
      << std::setw(14) << "states(2^n)" << std::setw(24) << "representative"
      << "canonical point (graded-lex)\n";
  for (const auto& o : part.orbits) {
    std::string label = labels.count(o.orbit_id) ? labels.at(o.orbit_id) : "-";
    std::string edges = format_edges(o.representative);
    if (edges.empty()) edges = "(empty)";
    out << std::left << std::setw(6) << o.orbit_id << std::setw(8) << label
        << std::setw(10) << o.size << std::setw(14) << o.state_count_4n()
        << std::setw(14) << o.state_count_2n() << std::setw(24) << edges
        << format_point(o.canonical_point, IndexOrder::graded_lex) << "\n";
  }
  return out.str();
}

std::string census_json(const Partition& part) {
  nlohmann::json j;
  j["tool"] = "stabminor";
  j["version"] = kToolVersion;
  j["n"] = part.n;
  j["conventions"] = {
      {"coordinates", "(mu_1..mu_n, nu_1..nu_n), J = [[0,I],[I,0]]"},
      {"point_bit_order", "z_T at bit mask(T), bit t-1 <-> vertex t"},
      {"point_string_order", "graded-lex (cardinality, then lexicographic)"},
      {"canonical_point", "minimal bitmask integer in the orbit"},
      {"orbit_order", "(size, canonical key) ascending"},
  };
  j["total_points"] = part.total_points();
  auto labels = table_labels(part);
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : part.orbits) {
    nlohmann::json rec;
    rec["orbit_id"] = o.orbit_id;
    if (labels.count(o.orbit_id)) rec["label"] = labels.at(o.orbit_id);
    rec["size"] = o.size;
    rec["canonical_point_graded_lex"] =
        format_point(o.canonical_point, IndexOrder::graded_lex);
    rec["canonical_point_bitmask"] =
        format_point(o.canonical_point, IndexOrder::bitmask);
    rec["representative_edges"] = format_edges(o.representative);
    rec["state_count_4n"] = o.state_count_4n();
    rec["state_count_2n"] = o.state_count_2n();
    orbits.push_back(std::move(rec));
  }
  j["orbits"] = std::move(orbits);
  return j.dump(2) + "\n";
}

}  // namespace stabminor
