#include "stabminor/lagrangian.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "stabminor/errors.hpp"
#include "stabminor/minor_point.hpp"

namespace stabminor {

namespace {

// Packs a canonical 2n x n basis into two words (2n*n <= 72 bits for
// n <= 6, rows <= 64 bits each half).
struct BasisKey {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const BasisKey&) const = default;
};

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& k) const {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ull;
    h ^= k.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

BasisKey basis_key(const Lagrangian& l) {
  BasisKey k;
  int n = l.n;
  for (int r = 0; r < 2 * n; ++r) {
    std::uint64_t row = l.basis.row(r).as_word();
    int off = r * n;
    if (off < 64) {
      k.lo |= row << off;
      if (off + n > 64) k.hi |= row >> (64 - off);
    } else {
      k.hi |= row << (off - 64);
    }
  }
  return k;
}

}  // namespace

Lagrangian Lagrangian::from_basis(int n, const f2::BitMatrix& any_basis) {
  if (any_basis.rows() != 2 * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Lagrangian: basis must have 2n rows");
  }
  Lagrangian l;
  l.n = n;
  l.basis = f2::column_canonical(any_basis);
  if (l.basis.cols() != static_cast<std::size_t>(n)) {
    throw DomainError("Lagrangian: column space has rank != n");
  }
  if (!is_isotropic(l.basis)) {
    throw DomainError("Lagrangian: subspace is not isotropic");
  }
  return l;
}

bool is_isotropic(const f2::BitMatrix& m) {
  if (m.rows() % 2 != 0) {
    throw std::invalid_argument("is_isotropic: row count must be even");
  }
  std::size_t n = m.rows() / 2;
  std::size_t k = m.cols();
  // Column i pairs with column j as mu_i.nu_j + nu_i.mu_j.
  std::vector<std::uint64_t> mu(k, 0), nu(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (m.get(r, c)) mu[c] |= std::uint64_t{1} << r;
      if (m.get(n + r, c)) nu[c] |= std::uint64_t{1} << r;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      int form = (std::popcount(mu[i] & nu[j]) + std::popcount(nu[i] & mu[j])) & 1;
      if (form) return false;
    }
  }
  return true;
}

Lagrangian lagrangian_from_group(const StabilizerGroup& s) {
  return Lagrangian::from_basis(s.n, generator_matrix(s));
}

f2::BitMatrix swap_block_rows(const f2::BitMatrix& m, std::uint64_t subset) {
  std::size_t n = m.rows() / 2;
  f2::BitMatrix out = m;
  for (std::size_t k = 0; k < n; ++k) {
    if ((subset >> k) & 1) out.swap_rows(k, n + k);
  }
  return out;
}

ChartForm chart_form(const Lagrangian& l) {
  int n = l.n;
  for (std::uint64_t subset : graded_lex_masks(n)) {
    f2::BitMatrix swapped = swap_block_rows(l.basis, subset);
    std::vector<std::size_t> top(n), bottom(n), cols(n);
    for (int i = 0; i < n; ++i) {
      top[i] = i;
      bottom[i] = n + i;
      cols[i] = i;
    }
    f2::BitMatrix top_block = swapped.submatrix(top, cols);
    if (!f2::is_invertible(top_block)) continue;
    f2::BitMatrix g = f2::inverse(top_block);
    f2::BitMatrix full = swapped * g;
    ChartForm cf;
    cf.subset = subset;
    cf.s = full.submatrix(bottom, cols);
    if (!cf.s.is_symmetric()) {
      throw DomainError("chart_form: chart matrix not symmetric");
    }
    return cf;
  }
  // The 2^n subset charts cover the Lagrangian Grassmannian.
  throw DomainError("chart_form: no covering chart found");
}

Lagrangian lagrangian_from_chart(int n, std::uint64_t subset,
                                 const f2::BitMatrix& s) {
  if (!s.is_symmetric()) {
    throw std::invalid_argument("lagrangian_from_chart: S not symmetric");
  }
  f2::BitMatrix m(2 * static_cast<std::size_t>(n), n);
  for (int r = 0; r < n; ++r) {
    m.set(r, r, true);
    for (int c = 0; c < n; ++c) m.set(n + r, c, s.get(r, c));
  }
  return Lagrangian::from_basis(n, swap_block_rows(m, subset));
}

std::uint64_t lagrangian_count(int n) {
  std::uint64_t total = 1;
  for (int i = 1; i <= n; ++i) total *= (std::uint64_t{1} << i) + 1;
  return total;
}

void for_each_lagrangian(int n, const std::function<void(const Lagrangian&)>& fn,
                         int max_n) {
  if (n < 1 || n > max_n) {
    throw BoundExceeded("for_each_lagrangian: n out of range");
  }
  std::unordered_set<BasisKey, BasisKeyHash> seen;
  seen.reserve(2 * lagrangian_count(n));
  int tri = n * (n + 1) / 2;
  for (std::uint64_t sbits = 0; sbits < (std::uint64_t{1} << tri); ++sbits) {
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
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
      Lagrangian l = lagrangian_from_chart(n, subset, s);
      if (seen.insert(basis_key(l)).second) {
        fn(l);
      }
    }
  }
}

std::vector<Lagrangian> enumerate_lagrangians(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw BoundExceeded("enumerate_lagrangians: n out of range");
  }
  std::vector<std::pair<BasisKey, Lagrangian>> all;
  all.reserve(lagrangian_count(n));
  for_each_lagrangian(
      n, [&](const Lagrangian& l) { all.emplace_back(basis_key(l), l); },
      max_n);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.first.hi != y.first.hi ? x.first.hi < y.first.hi
                                    : x.first.lo < y.first.lo;
  });
  std::vector<Lagrangian> out;
  out.reserve(all.size());
  for (auto& [key, l] : all) out.push_back(std::move(l));
  return out;
}

GraphForm graph_form(const Lagrangian& l) {
  int n = l.n;
  ChartForm cf = chart_form(l);
  GraphForm gf;
  gf.theta = cf.s;
  GroupElement to_chart = GroupElement::identity(n);
  for (int k = 0; k < n; ++k) {
    if ((cf.subset >> k) & 1) to_chart.slots[k] = HAD;
  }
  // In the chart [I_n; S] the element [[1,0],[1,1]] at slot k flips s_kk,
  // so placing it at every diagonal 1 clears the loops.
  GroupElement clear_diag = GroupElement::identity(n);
  const Local2 diag_flip = local2_from_name("HSH");
  for (int k = 0; k < n; ++k) {
    if (cf.s.get(k, k)) {
      clear_diag.slots[k] = diag_flip;
      gf.theta.set(k, k, false);
    }
  }
  gf.witness = compose(clear_diag, to_chart);
  return gf;
}

}  // namespace stabminor
