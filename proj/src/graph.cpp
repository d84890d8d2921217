#include "stabminor/graph.hpp"

#include <sstream>
#include <stdexcept>

#include "stabminor/errors.hpp"

namespace stabminor {

Graph Graph::from_theta(const f2::BitMatrix& theta) {
  if (!theta.is_symmetric()) {
    throw std::invalid_argument("Graph: adjacency matrix must be symmetric");
  }
  return {static_cast<int>(theta.rows()), theta};
}

bool Graph::has_loops() const {
  for (int i = 0; i < n; ++i) {
    if (theta.get(i, i)) return true;
  }
  return false;
}

Graph parse_graph(const std::string& edges, int n) {
  if (n < 1) throw std::invalid_argument("parse_graph: need n >= 1");
  Graph g = Graph::empty(n);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      throw std::invalid_argument("parse_graph: bad edge token '" + token +
                                  "'");
    }
    int i, j;
    try {
      i = std::stoi(token.substr(0, dash));
      j = std::stoi(token.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_graph: bad edge token '" + token +
                                  "'");
    }
    if (i < 1 || i > n || j < 1 || j > n) {
      throw std::invalid_argument("parse_graph: vertex out of range in '" +
                                  token + "'");
    }
    g.theta.set(i - 1, j - 1, true);
    g.theta.set(j - 1, i - 1, true);
    token.clear();
  };
  for (char c : edges) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == ';') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return g;
}

std::string format_edges(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i; j < g.n; ++j) {
      if (g.theta.get(i, j)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
      }
    }
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int i = 0; i < g.n; ++i) {
    out << "  " << (i + 1) << ";\n";
  }
  for (int i = 0; i < g.n; ++i) {
    for (int j = i; j < g.n; ++j) {
      if (g.theta.get(i, j)) {
        out << "  " << (i + 1) << " -- " << (j + 1) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

StabilizerGroup graph_generators(const Graph& g, GraphConvention convention) {
  std::vector<PauliOp> gens;
  gens.reserve(g.n);
  for (int i = 0; i < g.n; ++i) {
    PauliOp p = PauliOp::identity(g.n);
    for (int j = 0; j < g.n; ++j) {
      if (g.theta.get(j, i)) {
        if (convention == GraphConvention::standard) {
          p.mu.set(j, true);
        } else {
          p.nu.set(j, true);
        }
      }
    }
    if (convention == GraphConvention::standard) {
      p.nu.flip(i);
    } else {
      p.mu.flip(i);
    }
    gens.push_back(p);
  }
  return group_from_generators(gens);
}

MinorPoint graph_to_point(const Graph& g) {
  return from_symmetric(g.theta);
}

LooplessResult loopless(const Graph& g) {
  LooplessResult res;
  res.graph = g;
  res.witness = GroupElement::identity(g.n);
  for (int i = 0; i < g.n; ++i) {
    if (g.theta.get(i, i)) {
      res.graph.theta.set(i, i, false);
      res.witness.slots[i] = SQZ;
    }
  }
  return res;
}

Graph local_complementation(const Graph& g, int v) {
  if (v < 0 || v >= g.n) {
    throw std::invalid_argument("local_complementation: vertex out of range");
  }
  if (g.has_loops()) {
    throw DomainError("local_complementation: graph has loops");
  }
  Graph out = g;
  for (int a = 0; a < g.n; ++a) {
    if (a == v || !g.theta.get(v, a)) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (b == v || !g.theta.get(v, b)) continue;
      out.theta.flip(a, b);
      out.theta.flip(b, a);
    }
  }
  return out;
}

}  // namespace stabminor
