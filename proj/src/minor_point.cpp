#include "stabminor/minor_point.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "stabminor/errors.hpp"

namespace stabminor {

namespace {

void check_n(int n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("minor variety points support 1 <= n <= 6");
  }
}

// Determinant over F2 of an m x m matrix given as packed row words.
int det_words(std::array<std::uint64_t, 6>& rows, int m) {
  for (int c = 0; c < m; ++c) {
    int pivot = -1;
    for (int r = c; r < m; ++r) {
      if ((rows[r] >> c) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    std::swap(rows[c], rows[pivot]);
    for (int r = pivot + 1; r < m; ++r) {
      if ((rows[r] >> c) & 1) rows[r] ^= rows[c];
    }
  }
  return 1;
}

}  // namespace

const std::vector<std::uint64_t>& graded_lex_masks(int n) {
  check_n(n);
  static std::array<std::vector<std::uint64_t>, 7> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = cache[n];
  if (table.empty()) {
    table.resize(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < table.size(); ++m) table[m] = m;
    std::sort(table.begin(), table.end(),
              [n](std::uint64_t x, std::uint64_t y) {
                int px = std::popcount(x), py = std::popcount(y);
                if (px != py) return px < py;
                // Lexicographic on sorted element lists: compare the
                // smallest differing element.
                std::uint64_t diff = x ^ y;
                if (!diff) return false;
                return ((x >> std::countr_zero(diff)) & 1) != 0;
              });
  }
  return table;
}

std::uint64_t index_convert(std::uint64_t i, IndexOrder from, IndexOrder to,
                            int n) {
  check_n(n);
  std::uint64_t count = std::uint64_t{1} << n;
  if (i >= count) {
    throw std::invalid_argument("index_convert: index out of range");
  }
  if (from == to) return i;
  const auto& table = graded_lex_masks(n);
  if (from == IndexOrder::graded_lex) {
    return table[i];  // to bitmask
  }
  auto it = std::find(table.begin(), table.end(), i);
  return static_cast<std::uint64_t>(it - table.begin());
}

MinorPoint minor_point_of_basis(int n, const f2::BitMatrix& basis) {
  check_n(n);
  if (basis.rows() != 2 * static_cast<std::size_t>(n) ||
      basis.cols() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("minor_point_of_basis: need 2n x n basis");
  }
  std::array<std::uint64_t, 12> rows{};
  for (int r = 0; r < 2 * n; ++r) rows[r] = basis.row(r).as_word();
  MinorPoint p{n, 0};
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t subset = 0; subset < count; ++subset) {
    std::array<std::uint64_t, 6> sel{};
    for (int t = 0; t < n; ++t) {
      sel[t] = ((subset >> t) & 1) ? rows[n + t] : rows[t];
    }
    if (det_words(sel, n)) p.bits |= std::uint64_t{1} << subset;
  }
  return p;
}

MinorPoint minor_point(const Lagrangian& l) {
  return minor_point_of_basis(l.n, l.basis);
}

MinorPoint from_symmetric(const f2::BitMatrix& s) {
  if (!s.is_symmetric()) {
    throw std::invalid_argument("from_symmetric: matrix not symmetric");
  }
  int n = static_cast<int>(s.rows());
  check_n(n);
  std::array<std::uint64_t, 6> srows{};
  for (int r = 0; r < n; ++r) srows[r] = s.row(r).as_word();
  MinorPoint p{n, 1};  // z_{} = empty minor = 1
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t subset = 1; subset < count; ++subset) {
    // Compress rows/cols of the principal submatrix.
    std::array<std::uint64_t, 6> sel{};
    int m = 0;
    for (int t = 0; t < n; ++t) {
      if (!((subset >> t) & 1)) continue;
      std::uint64_t row = srows[t];
      std::uint64_t packed = 0;
      int j = 0;
      for (int u = 0; u < n; ++u) {
        if ((subset >> u) & 1) {
          packed |= ((row >> u) & 1) << j;
          ++j;
        }
      }
      sel[m++] = packed;
    }
    if (det_words(sel, m)) p.bits |= std::uint64_t{1} << subset;
  }
  return p;
}

f2::BitMatrix reconstruct_symmetric(const MinorPoint& p) {
  check_n(p.n);
  if (!p.get(0)) throw NotChartPoint();
  int n = p.n;
  f2::BitMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    s.set(i, i, p.get(std::uint64_t{1} << i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool pair_minor =
          p.get((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
      bool off = pair_minor ^ (s.get(i, i) & s.get(j, j));
      s.set(i, j, off);
      s.set(j, i, off);
    }
  }
  if (from_symmetric(s) != p) throw InconsistentPoint();
  return s;
}

std::uint64_t point_subset_hadamard(std::uint64_t bits, int n,
                                    std::uint64_t subset) {
  check_n(n);
  std::uint64_t out = 0;
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < count; ++m) {
    if ((bits >> m) & 1) out |= std::uint64_t{1} << (m ^ subset);
  }
  return out;
}

Lagrangian lagrangian_from_point(const MinorPoint& p) {
  check_n(p.n);
  std::uint64_t count = std::uint64_t{1} << p.n;
  // Valid points are nonzero and confined to the low 2^n coordinate bits.
  if (p.bits == 0) throw NotOnVariety();
  if (count < 64 && (p.bits >> count) != 0) throw NotOnVariety();
  for (std::uint64_t subset : graded_lex_masks(p.n)) {
    if (!p.get(subset)) continue;
    MinorPoint chart{p.n, point_subset_hadamard(p.bits, p.n, subset)};
    try {
      f2::BitMatrix s = reconstruct_symmetric(chart);
      return lagrangian_from_chart(p.n, subset, s);
    } catch (const DomainError&) {
      throw NotOnVariety();
    }
  }
  throw NotOnVariety();
}

bool is_on_variety(const MinorPoint& p) {
  try {
    lagrangian_from_point(p);
    return true;
  } catch (const DomainError&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string format_point(const MinorPoint& p, IndexOrder order) {
  check_n(p.n);
  std::string out = "[";
  std::uint64_t count = std::uint64_t{1} << p.n;
  const auto& table = graded_lex_masks(p.n);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t mask = order == IndexOrder::graded_lex ? table[i] : i;
    if (i) out += ':';
    out += p.get(mask) ? '1' : '0';
  }
  out += ']';
  return out;
}

MinorPoint parse_point(const std::string& s, int n, IndexOrder order) {
  check_n(n);
  std::vector<int> bits;
  for (char ch : s) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch - '0');
    } else if (ch != '[' && ch != ']' && ch != ':' && ch != ' ') {
      throw std::invalid_argument("parse_point: unexpected character");
    }
  }
  std::uint64_t count = std::uint64_t{1} << n;
  if (bits.size() != count) {
    throw std::invalid_argument("parse_point: expected " +
                                std::to_string(count) + " coordinates, got " +
                                std::to_string(bits.size()));
  }
  const auto& table = graded_lex_masks(n);
  MinorPoint p{n, 0};
  for (std::uint64_t i = 0; i < count; ++i) {
    if (bits[i]) {
      std::uint64_t mask = order == IndexOrder::graded_lex ? table[i] : i;
      p.bits |= std::uint64_t{1} << mask;
    }
  }
  return p;
}

}  // namespace stabminor
