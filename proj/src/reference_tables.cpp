#include "stabminor/reference_tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabminor/action.hpp"

namespace stabminor {

namespace {

std::string point_string_from_ones(int n, const std::vector<int>& ones) {
  std::uint64_t count = std::uint64_t{1} << n;
  std::string out = "[";
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i) out += ':';
    out += std::count(ones.begin(), ones.end(), static_cast<int>(i)) ? '1'
                                                                     : '0';
  }
  return out + "]";
}

std::vector<std::string> split_generators(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!token.empty()) out.push_back(std::move(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows(int n) {
  static const std::vector<ReferenceRow> n4 = {
      {"O2", "", {0}, "", 81, 20736},
      {"O3", "1-2", {0, 5}, "", 324, 82944},
      {"O6", "1-2,2-3", {0, 5, 8}, "", 648, 165888},
      {"O14", "1-2,1-3,1-4", {0, 5, 6, 7}, "", 162, 41472},
      {"O17", "1-2,3-4", {0, 5, 10, 15}, "", 108, 27648},
      {"O18", "1-2,2-3,3-4,1-4", {0, 5, 7, 8, 10}, "", 972, 248832},
  };
  static const std::vector<ReferenceRow> n5 = {
      {"O1", "", {0}, "ZIIII,IZIII,IIZII,IIIZI,IIIIZ", 0, 0},
      {"O2", "1-2", {0, 6}, "ZXIII,XZIII,IIZII,IIIZI,IIIIZ", 0, 0},
      {"O3", "1-2,2-3", {0, 6, 10}, "ZXIII,XZXII,IXZII,IIIZI,IIIIZ", 0, 0},
      // The third generator is printed with four characters in the table.
      {"O4", "1-2,3-4", {0, 6, 13, 26}, "ZXIII,XZIII,IIZX,IIXZI,IIIIZ", 0, 0},
      {"O5",
       "1-2,2-3,3-4",
       {0, 6, 10, 13, 26},
       "ZXIII,XZXII,IXZXI,IIXZI,IIIIZ",
       0,
       0},
      // The printed point omits z29 = 1 (the {1,3,4,5} minor).
      {"O6",
       "1-2,1-5,3-4",
       {0, 6, 9, 13, 26},
       "ZXIIX,XZIII,IIZXI,IIXZI,XIIIZ",
       0,
       0},
      {"O7",
       "1-2,2-3,3-4,4-5",
       {0, 6, 10, 13, 15, 26, 28, 30},
       "ZXIII,XZXII,IXZXI,IIXZX,IIIXZ",
       0,
       0},
      {"O8",
       "1-2,2-3,3-4,1-4",
       {0, 6, 8, 10, 13},
       "ZXIXI,XZXII,IXZXI,XIXZI,IIIIZ",
       0,
       0},
      {"O9",
       "1-2,1-3,1-4,1-5",
       {0, 6, 7, 8, 9},
       "ZXXXX,XZIII,XIZII,XIIZI,XIIIZ",
       0,
       0},
      // The printed 4-set block starts at z27; z26 is printed as 0.
      {"O10",
       "1-2,2-3,3-4,4-5,1-5",
       {0, 6, 9, 10, 13, 15, 27, 28, 29, 30},
       "ZXIIX,XZXII,IXZXI,IIXZX,XIIXZ",
       0,
       0},
      {"O11",
       "1-2,1-3,1-4",
       {0, 6, 7, 8},
       "ZXXXI,XZIII,XIZII,XIIZI,IIIIZ",
       0,
       0},
  };
  if (n == 4) return n4;
  if (n == 5) return n5;
  throw std::invalid_argument("reference_rows: tables exist for n = 4, 5");
}

const std::vector<KnownIssue>& known_issues() {
  static const std::vector<KnownIssue> issues = {
      {5, "O6", "point",
       "printed point string omits z29 = 1, the principal minor on "
       "{1,3,4,5}; the row's graph (edges 1-2, 1-5, 3-4) induces two "
       "disjoint edges there"},
      {5, "O10", "point",
       "printed 4-set minor block is anchored at z27 with z26 = 0; every "
       "4-subset of the 5-cycle induces a path on four vertices, so "
       "z26..z30 are all 1"},
      {5, "O4", "generators",
       "third generator is printed as the 4-character string IIZX; column "
       "3 of [I5; theta] reads IIZXI"},
      {5, "O8", "orbit",
       "the row's graph (the 4-cycle plus an isolated vertex) lies in the "
       "same orbit as row O5 (the 4-path plus an isolated vertex): the "
       "4-cycle and the 4-path are local-Clifford equivalent, as the n=4 "
       "census confirms"},
      {5, "(table)", "coverage",
       "with O5 and O8 in one orbit the row list covers 10 of the 11 "
       "orbits; the remaining orbit (size 9720) is the class of the "
       "5-vertex tree 1-2,2-3,3-4,3-5, equivalently K_{2,3}"},
  };
  return issues;
}

namespace {

bool is_documented(int n, const std::string& row, const std::string& field) {
  for (const auto& issue : known_issues()) {
    if (issue.n == n && issue.row == row && issue.field == field) return true;
  }
  return false;
}

}  // namespace

VerifyOutcome verify_tables(int n) {
  if (n != 4 && n != 5) {
    throw std::invalid_argument("verify_tables: tables exist for n = 4, 5");
  }
  VerifyOutcome out;
  out.n = n;
  const auto& rows = reference_rows(n);
  Partition part = partition(n);
  std::ostringstream report;
  report << "table verification, n = " << n << " (" << rows.size()
         << " rows)\n";

  auto add_note = [&](const std::string& row, const std::string& field,
                      const std::string& detail) {
    out.notes.push_back({row, field, detail, is_documented(n, row, field)});
  };

  std::map<int, std::string> first_row_of_orbit;
  for (const auto& row : rows) {
    Graph g = parse_graph(row.edges, n);
    MinorPoint point = graph_to_point(g);
    std::string computed = format_point(point, IndexOrder::graded_lex);
    std::string printed = point_string_from_ones(n, row.printed_point_ones);
    if (computed != printed) {
      add_note(row.label, "point",
               "printed " + printed + ", recomputed " + computed);
    }

    if (!row.generators.empty()) {
      StabilizerGroup computed_group =
          graph_generators(g, GraphConvention::minor_table);
      std::vector<std::string> computed_strs;
      for (const auto& gen : computed_group.generators) {
        computed_strs.push_back(format_pauli(gen));
      }
      std::vector<std::string> printed_strs = split_generators(row.generators);
      if (computed_strs != printed_strs) {
        std::string detail = "printed {";
        for (const auto& s : printed_strs) detail += " " + s;
        detail += " }, recomputed {";
        for (const auto& s : computed_strs) detail += " " + s;
        detail += " }";
        add_note(row.label, "generators", detail);
      }
      // The recomputed generator strings regenerate theta and the point.
      StabilizerGroup reparsed = parse_group(format_group(computed_group));
      Lagrangian l = lagrangian_from_group(reparsed);
      ChartForm cf = chart_form(l);
      if (cf.subset != 0 || cf.s != g.theta) {
        add_note(row.label, "theta",
                 "generator strings do not regenerate the graph matrix");
      }
      if (minor_point(l) != point) {
        add_note(row.label, "group-point",
                 "generator strings do not regenerate the row's point");
      }
    }

    Classification cls = classify(part, g);
    auto [it, inserted] = first_row_of_orbit.emplace(cls.orbit_id, row.label);
    if (!inserted) {
      add_note(row.label, "orbit",
               "lands in the same orbit as row " + it->second);
    }
    if (row.size != 0) {
      const OrbitReport& rep = part.orbits[cls.orbit_id - 1];
      if (rep.size != row.size) {
        add_note(row.label, "size",
                 "printed size " + std::to_string(row.size) + ", computed " +
                     std::to_string(rep.size));
      }
      if (rep.state_count_4n() != row.states_4n) {
        add_note(row.label, "states",
                 "printed 4^n count " + std::to_string(row.states_4n) +
                     ", computed " + std::to_string(rep.state_count_4n()));
      }
    }
    report << "  " << row.label << ": orbit " << cls.orbit_id << ", size "
           << part.orbits[cls.orbit_id - 1].size << "\n";
  }

  if (first_row_of_orbit.size() != part.orbits.size()) {
    std::string detail = "rows cover " +
                         std::to_string(first_row_of_orbit.size()) + " of " +
                         std::to_string(part.orbits.size()) +
                         " orbits; uncovered:";
    for (const auto& o : part.orbits) {
      if (!first_row_of_orbit.count(o.orbit_id)) {
        detail += " orbit " + std::to_string(o.orbit_id) + " (size " +
                  std::to_string(o.size) + ", representative " +
                  format_edges(o.representative) + ")";
      }
    }
    add_note("(table)", "coverage", detail);
  }

  out.pass = true;
  for (const auto& note : out.notes) {
    if (!note.documented) out.pass = false;
  }
  for (const auto& note : out.notes) {
    report << "  " << (note.documented ? "documented" : "UNDOCUMENTED")
           << " discrepancy [" << note.row << "/" << note.field
           << "]: " << note.detail << "\n";
  }
  report << (out.pass ? "verification passed" : "verification FAILED")
         << " (" << out.notes.size() << " note(s), all "
         << (out.pass ? "documented" : "NOT documented") << ")\n";
  out.report = report.str();
  return out;
}

std::map<int, std::string> table_labels(const Partition& part) {
  std::map<int, std::string> labels;
  if (part.n != 4 && part.n != 5) return labels;
  for (const auto& row : reference_rows(part.n)) {
    Graph g = parse_graph(row.edges, part.n);
    Classification cls = classify(part, g);
    labels[cls.orbit_id] = row.label;
  }
  return labels;
}

}  // namespace stabminor
