#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace testing_support {

using namespace weylq;

inline RootSystem sys(char family, int rank) {
  return build_root_system({family_from_letter(family), rank});
}

inline RootSubset subset_of(const RootSystem& rs, std::initializer_list<Coeffs> roots) {
  std::vector<int> idx;
  for (const auto& c : roots) idx.push_back(rs.find_positive(c).value());
  std::sort(idx.begin(), idx.end());
  return RootSubset::from_indices(rs, idx);
}

inline RootSubset minus(const RootSystem& rs, const Coeffs& root) {
  std::vector<int> idx;
  const int drop = rs.find_positive(root).value();
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (k != drop) idx.push_back(k);
  return RootSubset::from_indices(rs, idx);
}

// Polynomial from ascending coefficients given as "p/q" strings or integers.
inline RationalPolynomial poly(std::initializer_list<Rational> c) {
  return RationalPolynomial(std::vector<Rational>(c));
}

inline QuasiPolynomial qp(std::vector<RationalPolynomial> constituents) {
  const int period = static_cast<int>(constituents.size());
  return QuasiPolynomial(period, std::move(constituents));
}

inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// The shapes exercised throughout the tests.
inline std::vector<std::pair<char, int>> small_types() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
          {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}};
}

}  // namespace testing_support
