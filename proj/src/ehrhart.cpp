#include "weylq/ehrhart.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "weylq/errors.hpp"

namespace weylq {

namespace {

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
};

// Counts z in Z_{>=0}^l with z_i outside excluded[i] for each i >= 1, and
// sum c_i z_i in [0, q] with q - sum outside excluded[0]. Each coordinate
// contributes the generating function of its allowed values; the product is
// accumulated truncated at degree q.
std::int64_t count_alcove_points(const std::vector<int>& marks, std::int64_t q,
                                 const std::vector<std::vector<Interval>>& excluded) {
  if (q < 0) return 0;
  const auto n = static_cast<std::size_t>(q) + 1;
  std::vector<std::int64_t> ways(n, 0), next(n);
  ways[0] = 1;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    const std::int64_t c = marks[i];
    // Unbounded coin: next[s] = ways[s] + next[s - c].
    for (std::size_t s = 0; s < n; ++s)
      next[s] = ways[s] + (static_cast<std::int64_t>(s) >= c ? next[s - c] : 0);
    for (const auto& band : excluded[i + 1])
      for (std::int64_t z = std::max<std::int64_t>(band.lo, 0); z <= band.hi; ++z) {
        std::int64_t shift = z * c;
        if (shift >= static_cast<std::int64_t>(n)) break;
        for (std::size_t s = static_cast<std::size_t>(shift); s < n; ++s) next[s] -= ways[s - shift];
      }
    std::swap(ways, next);
  }
  std::int64_t total = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::int64_t m = q - static_cast<std::int64_t>(s);
    bool skip = false;
    for (const auto& band : excluded[0])
      if (m >= band.lo && m <= band.hi) skip = true;
    if (!skip) total += ways[s];
  }
  return total;
}

void check_facet(const RootSystem& rs, int facet) {
  if (facet < 0 || facet > rs.rank())
    throw ValidationError("facet index " + std::to_string(facet) + " outside 0.." +
                          std::to_string(rs.rank()));
}

}  // namespace

std::int64_t count_closed(const RootSystem& rs, std::int64_t q) {
  std::vector<std::vector<Interval>> none(rs.rank() + 1);
  return count_alcove_points(rs.marks(), q, none);
}

std::int64_t count_open(const RootSystem& rs, std::int64_t q) {
  if (q < 1) return 0;
  // Each coordinate at least 1, strict inequality on facet 0.
  const auto& marks = rs.marks();
  const auto n = static_cast<std::size_t>(q);  // sums 0..q-1
  std::vector<std::int64_t> ways(n, 0), next(n);
  ways[0] = 1;
  for (int c : marks) {
    // next[s] = sum_{k >= 1} ways[s - k c] = next[s - c] + ways[s - c]
    for (std::size_t s = 0; s < n; ++s)
      next[s] = static_cast<std::int64_t>(s) >= c ? next[s - c] + ways[s - c] : 0;
    std::swap(ways, next);
  }
  return std::accumulate(ways.begin(), ways.end(), std::int64_t{0});
}

namespace {

int marks_lcm(const RootSystem& rs) {
  int p = 1;
  for (int c : rs.marks()) p = std::lcm(p, c);
  return p;
}

}  // namespace

QuasiPolynomial ehrhart_closed_qp(const RootSystem& rs) {
  return interpolate_qp([&rs](std::int64_t q) { return count_closed(rs, q); }, marks_lcm(rs),
                        rs.rank());
}

QuasiPolynomial ehrhart_open_qp(const RootSystem& rs) {
  return interpolate_qp([&rs](std::int64_t q) { return count_open(rs, q); }, marks_lcm(rs),
                        rs.rank());
}

std::int64_t count_minus_facets(const RootSystem& rs, std::int64_t q,
                                const std::vector<int>& facet_indices) {
  std::map<int, int> bands;
  for (int i : facet_indices) {
    check_facet(rs, i);
    bands[i] = 0;
  }
  return count_minus_bands(rs, q, bands);
}

std::int64_t count_minus_bands(const RootSystem& rs, std::int64_t q,
                               const std::map<int, int>& bands) {
  const auto ext = rs.extended_marks();
  std::int64_t threshold = 0;
  std::vector<std::vector<Interval>> excluded(rs.rank() + 1);
  for (const auto& [i, b] : bands) {
    check_facet(rs, i);
    if (b < 0) throw ValidationError("band width must be nonnegative");
    threshold += static_cast<std::int64_t>(b + 1) * ext[i];
    excluded[i].push_back({0, b});
  }
  if (q <= threshold)
    throw DomainError("facet/band removal needs q > " + std::to_string(threshold) + ", got q = " +
                      std::to_string(q));
  return count_alcove_points(rs.marks(), q, excluded);
}

std::int64_t count_minus_band_general(const RootSystem& rs, std::int64_t q, int facet,
                                      std::int64_t a, std::int64_t b) {
  check_facet(rs, facet);
  if (a < 1 || a > b) throw ValidationError("band interval must satisfy 1 <= a <= b");
  const std::int64_t threshold = (b + 1) * rs.extended_marks()[facet];
  if (q <= threshold)
    throw DomainError("band removal needs q > " + std::to_string(threshold) + ", got q = " +
                      std::to_string(q));
  std::vector<std::vector<Interval>> excluded(rs.rank() + 1);
  excluded[facet].push_back({a, b});
  return count_alcove_points(rs.marks(), q, excluded);
}

}  // namespace weylq
