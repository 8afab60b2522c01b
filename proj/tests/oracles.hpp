#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the counting, interpolation or statistics code of the library; they
// only read the raw root data (Cartan matrix, root coefficient lists, group
// matrices) and recompute everything the slow, obvious way.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "weylq/charquasi.hpp"
#include "weylq/rootsys.hpp"

namespace oracle {

using weylq::Coeffs;
using Rational = mpq_class;

// #W as the orbit size of the regular weight (1,..,1); weights are written in
// the fundamental-weight basis where alpha_i is row i of the Cartan matrix.
inline std::uint64_t weyl_order_by_orbit(const weylq::IntMatrix& cartan) {
  const int n = cartan.size();
  std::set<Coeffs> seen{Coeffs(n, 1)};
  std::vector<Coeffs> frontier{Coeffs(n, 1)};
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const auto& lam : frontier)
      for (int i = 0; i < n; ++i) {
        Coeffs mu = lam;
        for (int j = 0; j < n; ++j) mu[j] -= lam[i] * cartan(i, j);
        if (seen.insert(mu).second) next.push_back(mu);
      }
    frontier.swap(next);
  }
  return seen.size();
}

// Determinant by Gaussian elimination over the rationals.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational m = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
    }
  }
  return det;
}

inline Rational cartan_determinant(const weylq::IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.size(), std::vector<Rational>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) a[i][j] = m(i, j);
  return determinant(a);
}

// Points z in Z^l, z >= 0, sum c_i z_i <= q, with z_i avoiding excluded[i]
// (i >= 1) and q - sum c_i z_i avoiding excluded[0]. Plain recursion over
// every coordinate, no dynamic programming.
inline std::int64_t alcove_points(const std::vector<int>& marks, std::int64_t q,
                                  const std::map<int, std::set<std::int64_t>>& excluded = {}) {
  if (q < 0) return 0;
  const int l = static_cast<int>(marks.size());
  auto banned = [&](int facet, std::int64_t value) {
    auto it = excluded.find(facet);
    return it != excluded.end() && it->second.count(value) > 0;
  };
  std::int64_t count = 0;
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t used) {
    if (i == l) {
      if (!banned(0, q - used)) ++count;
      return;
    }
    for (std::int64_t z = 0; used + z * marks[i] <= q; ++z)
      if (!banned(i + 1, z)) rec(i + 1, used + z * marks[i]);
  };
  rec(0, 0);
  return count;
}

inline std::set<std::int64_t> range_set(std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> s;
  for (auto m = lo; m <= hi; ++m) s.insert(m);
  return s;
}

inline std::int64_t open_alcove_points(const std::vector<int>& marks, std::int64_t q) {
  std::map<int, std::set<std::int64_t>> ex;
  for (int i = 0; i <= static_cast<int>(marks.size()); ++i) ex[i] = {0};
  return alcove_points(marks, q, ex);
}

struct Hyperplanes {
  int rank = 0;
  std::vector<std::pair<Coeffs, std::int64_t>> pairs;  // (vector, offset)
};

inline Hyperplanes hyperplanes_of(const weylq::ArrangementSpec& spec) {
  Hyperplanes h{spec.rank(), {}};
  for (const auto& item : spec.items())
    for (auto m : item.offsets) h.pairs.emplace_back(item.coeffs, m);
  return h;
}

// Visits every z in (Z/q)^l and tests every congruence directly.
inline std::int64_t complement_points(const Hyperplanes& h, std::int64_t q) {
  std::int64_t total = 1;
  for (int i = 0; i < h.rank; ++i) total *= q;
  std::int64_t count = 0;
  std::vector<std::int64_t> z(h.rank);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (int i = 0; i < h.rank; ++i) {
      z[i] = c % q;
      c /= q;
    }
    bool on = false;
    for (const auto& [v, m] : h.pairs) {
      std::int64_t s = -m;
      for (int i = 0; i < h.rank; ++i) s += v[i] * z[i];
      if (((s % q) + q) % q == 0) {
        on = true;
        break;
      }
    }
    if (!on) ++count;
  }
  return count;
}

inline std::int64_t complement_points(const weylq::ArrangementSpec& spec, std::int64_t q) {
  return complement_points(hyperplanes_of(spec), q);
}

inline bool componentwise_leq(const Coeffs& a, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Every subset of the positive roots tested for downward closure.
inline std::vector<std::set<Coeffs>> ideals_by_subsets(const weylq::RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  const std::size_t n = roots.size();
  std::vector<std::set<Coeffs>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && ok; ++b)
        if (!(mask >> b & 1) && componentwise_leq(roots[b].coeffs, roots[a].coeffs)) ok = false;
    }
    if (!ok) continue;
    std::set<Coeffs> s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) s.insert(roots[a].coeffs);
    out.push_back(s);
  }
  return out;
}

struct Statistics {
  int dsc = 0, dsc_bar = 0, asc = 0, asc_bar = 0;
};

// Statistics of a matrix acting on alpha_0..alpha_l, Psi given by coefficient
// vectors. Signs are read off the coefficients directly.
inline Statistics statistics(const weylq::RootSystem& rs, const std::set<Coeffs>& psi,
                             const weylq::IntMatrix& w) {
  const int l = rs.rank();
  std::vector<Coeffs> base;
  Coeffs a0 = rs.highest_root().coeffs;
  for (auto& x : a0) x = -x;
  base.push_back(a0);
  for (int i = 0; i < l; ++i) {
    Coeffs e(l, 0);
    e[i] = 1;
    base.push_back(e);
  }
  std::vector<int> marks{1};
  marks.insert(marks.end(), rs.marks().begin(), rs.marks().end());
  Statistics s;
  for (int i = 0; i <= l; ++i) {
    Coeffs img(l, 0);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) img[r] += w(r, c) * base[i][c];
    const bool negative = std::any_of(img.begin(), img.end(), [](int x) { return x < 0; });
    if (negative)
      for (auto& x : img) x = -x;
    const bool in = psi.count(img) > 0;
    if (negative)
      (in ? s.dsc_bar : s.dsc) += marks[i];
    else
      (in ? s.asc_bar : s.asc) += marks[i];
  }
  return s;
}

inline std::set<Coeffs> coeff_set(const weylq::RootSystem& rs, const weylq::RootSubset& psi) {
  std::set<Coeffs> s;
  for (int k : psi.indices()) s.insert(rs.positive_roots()[k].coeffs);
  return s;
}

// (1/f) sum_w t^{exponent(w)} as ascending coefficients, without checking
// divisibility (callers compare against the library result).
inline std::vector<Rational> weighted_count(const std::vector<int>& exponents, int f) {
  std::vector<Rational> c;
  for (int e : exponents) {
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, Rational(0));
    c[e] += Rational(1, f);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Series s(t) multiplied by prod_i (1 - t^{c_i}), truncated at the same order.
inline std::vector<Rational> times_cyclotomic(std::vector<Rational> s, const std::vector<int>& cs) {
  for (int c : cs)
    for (std::size_t k = s.size(); k-- > static_cast<std::size_t>(c);) s[k] -= s[k - c];
  return s;
}

inline std::int64_t gcd_all(const std::vector<std::int64_t>& xs) {
  std::int64_t g = 0;
  for (auto x : xs) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Largest invariant factor of the torsion of Z^l / <vectors>, through
// determinantal divisors d_k = gcd of all k x k minors.
inline std::int64_t largest_torsion_by_minors(const std::vector<Coeffs>& vectors, int l) {
  const int n = static_cast<int>(vectors.size());
  std::vector<std::int64_t> d{1};
  for (int k = 1; k <= std::min(l, n); ++k) {
    std::vector<std::int64_t> minors;
    std::vector<int> rows(k), cols(k);
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = start; r < l; ++r) {
        rows[depth] = r;
        pick_rows(r + 1, depth + 1);
      }
    };
    pick_cols = [&](int start, int depth) {
      if (depth == k) {
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) m[a][b] = vectors[cols[b]][rows[a]];
        minors.push_back(determinant(m).get_num().get_si());
        return;
      }
      for (int c = start; c < n; ++c) {
        cols[depth] = c;
        pick_cols(c + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    const auto g = gcd_all(minors);
    if (g == 0) break;
    d.push_back(g);
  }
  const std::size_t r = d.size() - 1;
  return r == 0 ? 1 : d[r] / d[r - 1];
}

inline std::int64_t lcm_period_by_minors(const std::vector<Coeffs>& vectors, int l) {
  std::int64_t out = 1;
  const std::size_t n = vectors.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<Coeffs> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) sub.push_back(vectors[k]);
    out = std::lcm(out, largest_torsion_by_minors(sub, l));
  }
  return out;
}

}  // namespace oracle
