#include "stabminor/local_group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stabminor {

namespace {

struct WordEntry {
  Local2 m;
  std::string word;
  std::string name;
};

const std::array<WordEntry, 6>& word_table() {
  static const std::array<WordEntry, 6> table = [] {
    std::array<WordEntry, 6> t{};
    auto put = [&](int idx, std::string word, std::string name) {
      Local2 m = LOCAL_I;
      for (char ch : word) {
        m = m.mul(ch == 'H' ? HAD : SQZ);
      }
      t[idx] = {m, std::move(word), std::move(name)};
    };
    put(0, "", "I");
    put(1, "H", "H");
    put(2, "S", "S");
    put(3, "HS", "HS");
    put(4, "SH", "SH");
    put(5, "HSH", "HSH");
    return t;
  }();
  return table;
}

const WordEntry& lookup(const Local2& m) {
  for (const auto& e : word_table()) {
    if (e.m == m) return e;
  }
  throw std::invalid_argument("local2: not invertible");
}

}  // namespace

const std::string& local2_word(const Local2& m) { return lookup(m).word; }
const std::string& local2_name(const Local2& m) { return lookup(m).name; }

Local2 local2_from_name(const std::string& name) {
  for (const auto& e : word_table()) {
    if (e.name == name) return e.m;
  }
  throw std::invalid_argument("local2_from_name: unknown element '" + name +
                              "'");
}

const std::array<Local2, 6>& all_local2() {
  static const std::array<Local2, 6> elems = [] {
    std::array<Local2, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = word_table()[i].m;
    return out;
  }();
  return elems;
}

GroupElement GroupElement::identity(int n) {
  GroupElement g;
  g.slots.assign(n, LOCAL_I);
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (!slots[i].is_identity() || perm[i] != i) return false;
  }
  return true;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  if (g1.n() != g2.n()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  int n = g1.n();
  GroupElement out;
  out.slots.resize(n);
  out.perm.resize(n);
  for (int i = 0; i < n; ++i) {
    out.slots[i] = g1.slots[g2.perm[i]].mul(g2.slots[i]);
    out.perm[i] = g1.perm[g2.perm[i]];
  }
  return out;
}

GroupElement group_inverse(const GroupElement& g) {
  int n = g.n();
  GroupElement out = GroupElement::identity(n);
  for (int i = 0; i < n; ++i) {
    out.perm[g.perm[i]] = i;
  }
  // (U, sigma)^-1 = (phi_{sigma^-1}(U^-1), sigma^-1).
  for (int i = 0; i < n; ++i) {
    out.slots[i] = g.slots[out.perm[i]].inv();
  }
  return out;
}

GroupElement had_at(int n, int slot) { return local_at(n, slot, HAD); }
GroupElement sqz_at(int n, int slot) { return local_at(n, slot, SQZ); }

GroupElement local_at(int n, int slot, const Local2& m) {
  GroupElement g = GroupElement::identity(n);
  g.slots[slot] = m;
  return g;
}

GroupElement transposition(int n, int i, int j) {
  GroupElement g = GroupElement::identity(n);
  std::swap(g.perm[i], g.perm[j]);
  return g;
}

std::vector<GroupElement> group_generators(int n) {
  std::vector<GroupElement> gens;
  gens.reserve(3 * n - 1);
  for (int i = 0; i < n; ++i) gens.push_back(had_at(n, i));
  for (int i = 0; i < n; ++i) gens.push_back(sqz_at(n, i));
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return gens;
}

std::string format_group_element(const GroupElement& g) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < g.n(); ++i) {
    if (g.slots[i].is_identity()) continue;
    if (!first) out << ' ';
    out << local2_name(g.slots[i]) << '@' << (i + 1);
    first = false;
  }
  // Cycle notation on 1-based slots.
  std::vector<bool> seen(g.n(), false);
  std::string cycles;
  for (int i = 0; i < g.n(); ++i) {
    if (seen[i] || g.perm[i] == i) continue;
    cycles += '(';
    int j = i;
    bool first_el = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first_el) cycles += ' ';
      cycles += std::to_string(j + 1);
      first_el = false;
      j = g.perm[j];
    }
    cycles += ')';
  }
  if (!cycles.empty()) {
    if (!first) out << ' ';
    out << "perm=" << cycles;
    first = false;
  }
  if (first) out << "id";
  return out.str();
}

GroupElement parse_group_element(const std::string& s, int n) {
  GroupElement g = GroupElement::identity(n);
  // Everything after "perm=" is cycle notation (cycles may contain
  // spaces); everything before it is slot tokens.
  std::string slots_part = s;
  std::string perm_part;
  auto perm_pos = s.find("perm=");
  if (perm_pos != std::string::npos) {
    slots_part = s.substr(0, perm_pos);
    perm_part = s.substr(perm_pos + 5);
  }

  std::istringstream in(slots_part);
  std::string tok;
  while (in >> tok) {
    if (tok == "id") continue;
    auto at = tok.find('@');
    if (at == std::string::npos) {
      throw std::invalid_argument("parse_group_element: bad token '" + tok +
                                  "'");
    }
    int slot = std::stoi(tok.substr(at + 1)) - 1;
    if (slot < 0 || slot >= n) {
      throw std::invalid_argument("parse_group_element: slot out of range");
    }
    g.slots[slot] = local2_from_name(tok.substr(0, at)).mul(g.slots[slot]);
  }

  std::vector<int> cycle;
  std::string num;
  auto flush_num = [&] {
    if (!num.empty()) {
      int v = std::stoi(num) - 1;
      if (v < 0 || v >= n) {
        throw std::invalid_argument("parse_group_element: perm out of range");
      }
      cycle.push_back(v);
      num.clear();
    }
  };
  for (char ch : perm_part) {
    if (ch == '(') {
      cycle.clear();
    } else if (ch == ')') {
      flush_num();
      // (a b c) maps a->b, b->c, c->a.
      for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        g.perm[cycle[i]] = cycle[i + 1];
      }
      if (cycle.size() > 1) g.perm[cycle.back()] = cycle.front();
      cycle.clear();
    } else if (ch == ' ' || ch == ',') {
      flush_num();
    } else if (ch >= '0' && ch <= '9') {
      num += ch;
    } else {
      throw std::invalid_argument("parse_group_element: bad perm syntax");
    }
  }
  return g;
}

}  // namespace stabminor
