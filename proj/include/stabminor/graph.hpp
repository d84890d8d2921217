#pragma once

#include <string>

#include "stabminor/local_group.hpp"
#include "stabminor/minor_point.hpp"
#include "stabminor/stabilizer.hpp"

namespace stabminor {

// Undirected graph on vertices 1..n as its symmetric F2 adjacency matrix;
// diagonal entries are loops.
struct Graph {
  int n = 0;
  f2::BitMatrix theta;

  static Graph empty(int n_) { return {n_, f2::BitMatrix(n_, n_)}; }
  static Graph from_theta(const f2::BitMatrix& theta);

  bool has_loops() const;
  bool operator==(const Graph&) const = default;
};

// Edge-list grammar: comma-separated "i-j" with 1-based vertices; "i-i" is
// a loop; the empty string is the empty graph. Throws
// std::invalid_argument on malformed tokens or out-of-range vertices.
Graph parse_graph(const std::string& edges, int n);
std::string format_edges(const Graph& g);
std::string to_dot(const Graph& g);

enum class GraphConvention {
  standard,     // generator i: X at vertex i, Z at its neighbours ([theta; I])
  minor_table,  // generator i: Z at vertex i, X at its neighbours ([I; theta])
};

StabilizerGroup graph_generators(const Graph& g, GraphConvention convention);

// The principal-minor point of theta. Identical to the Lagrangian route
// through the minor_table generators; the standard-convention route gives
// the complementary point (the all-slots Hadamard image).
MinorPoint graph_to_point(const Graph& g);

// Clears the diagonal. The witness carries sqrt(Z) exactly at the loop
// vertices; conjugating the standard-convention generators by it maps the
// group of g to the group of the loopless graph.
struct LooplessResult {
  Graph graph;
  GroupElement witness;
};
LooplessResult loopless(const Graph& g);

// Complements the induced subgraph on the neighbourhood of vertex v
// (0-based). Requires a loopless graph; used as an independent equivalence
// oracle in tests.
Graph local_complementation(const Graph& g, int v);

}  // namespace stabminor
