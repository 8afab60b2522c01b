#include "weylq/charquasi.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "weylq/errors.hpp"
#include "weylq/parallel.hpp"

namespace weylq {

void ArrangementSpec::add(const Coeffs& coeffs, const std::set<std::int64_t>& offsets) {
  if (static_cast<int>(coeffs.size()) != rank_)
    throw ValidationError("arrangement vector has length " + std::to_string(coeffs.size()) +
                          ", expected " + std::to_string(rank_));
  if (std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x == 0; }))
    throw ValidationError("arrangement vectors must be nonzero");
  if (offsets.empty()) throw ValidationError("offset set must be nonempty");
  auto it = std::lower_bound(items_.begin(), items_.end(), coeffs,
                             [](const Item& item, const Coeffs& c) { return item.coeffs < c; });
  if (it != items_.end() && it->coeffs == coeffs) {
    it->offsets.insert(offsets.begin(), offsets.end());
  } else {
    items_.insert(it, Item{coeffs, offsets});
  }
}

std::vector<Coeffs> ArrangementSpec::vectors() const {
  std::vector<Coeffs> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.coeffs);
  return out;
}

std::size_t ArrangementSpec::num_pairs() const {
  std::size_t n = 0;
  for (const auto& item : items_) n += item.offsets.size();
  return n;
}

ArrangementSpec subset_spec(const RootSystem& rs, const RootSubset& subset) {
  ArrangementSpec spec(rs.rank());
  for (int k : subset.indices()) spec.add(rs.positive_roots()[k].coeffs, 0);
  return spec;
}

std::int64_t InvariantFactors::largest_torsion() const {
  return factors.empty() ? 1 : factors.back();
}

InvariantFactors smith_invariants(const std::vector<std::vector<std::int64_t>>& matrix) {
  auto a = matrix;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::int64_t> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t f = a[i][t] / a[t][t];
        if (f != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t f = a[t][j] / a[t][t];
        if (f != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
done:
  return InvariantFactors{diag};
}

std::int64_t count_complement(const ArrangementSpec& spec, std::int64_t q) {
  if (q < 1) throw ValidationError("count_complement requires q >= 1");
  const int l = spec.rank();
  std::int64_t total_points = 1;
  for (int i = 0; i < l; ++i) total_points *= q;
  if (spec.empty()) return total_points;

  // Per-item residues of the coefficients and forbidden-value tables mod q.
  struct Row {
    std::vector<std::int64_t> a;
    std::vector<char> forbidden;
  };
  std::vector<Row> rows;
  rows.reserve(spec.items().size());
  auto mod = [q](std::int64_t x) { return ((x % q) + q) % q; };
  for (const auto& item : spec.items()) {
    Row r;
    for (int c : item.coeffs) r.a.push_back(mod(c));
    r.forbidden.assign(static_cast<std::size_t>(q), 0);
    for (auto m : item.offsets) r.forbidden[static_cast<std::size_t>(mod(m))] = 1;
    rows.push_back(std::move(r));
  }
  const std::size_t nrows = rows.size();

  // Count points with first coordinate fixed; lexicographic scan over the rest.
  auto count_slice = [&](std::int64_t z0) -> std::int64_t {
    std::vector<std::int64_t> partial(nrows * (l + 1));
    for (std::size_t r = 0; r < nrows; ++r) partial[r * (l + 1) + 1] = rows[r].a[0] * z0 % q;
    std::vector<std::int64_t> z(l, 0);
    std::int64_t count = 0;
    if (l == 1) {
      for (std::size_t r = 0; r < nrows; ++r)
        if (rows[r].forbidden[partial[r * 2 + 1]]) return 0;
      return 1;
    }
    // depth d holds partial sums over coordinates < d.
    int d = 1;
    for (;;) {
      if (d == l) {
        bool ok = true;
        for (std::size_t r = 0; r < nrows; ++r)
          if (rows[r].forbidden[partial[r * (l + 1) + l]]) {
            ok = false;
            break;
          }
        count += ok;
        // advance odometer
        int k = l - 1;
        while (k >= 1 && z[k] == q - 1) {
          z[k] = 0;
          --k;
        }
        if (k < 1) break;
        ++z[k];
        d = k;
      }
      for (std::size_t r = 0; r < nrows; ++r) {
        std::int64_t* p = &partial[r * (l + 1)];
        p[d + 1] = (p[d] + rows[r].a[d] * z[d]) % q;
      }
      ++d;
    }
    return count;
  };

  std::vector<std::int64_t> slices(static_cast<std::size_t>(q));
  auto job = [&](std::size_t z0) { slices[z0] = count_slice(static_cast<std::int64_t>(z0)); };
  if (total_points >= (1 << 16))
    detail::parallel_for(slices.size(), job);
  else
    for (std::size_t z0 = 0; z0 < slices.size(); ++z0) job(z0);
  return std::accumulate(slices.begin(), slices.end(), std::int64_t{0});
}

std::int64_t lcm_period(const ArrangementSpec& spec) {
  const auto vecs = spec.vectors();
  const std::size_t n = vecs.size();
  if (n > kLcmPeriodGuard) {
    std::ostringstream msg;
    msg << "LCM-period needs all sublists of " << n << " distinct vectors (guard "
        << kLcmPeriodGuard << "); supply an explicit period override";
    throw ResourceError(msg.str());
  }
  const int l = spec.rank();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  // Chunk the subset range; each chunk reduces to one lcm.
  const std::size_t chunks = std::min<std::uint64_t>(subsets, 256);
  std::vector<std::int64_t> partial(chunks, 1);
  detail::parallel_for(chunks, [&](std::size_t c) {
    std::uint64_t lo = subsets * c / chunks, hi = subsets * (c + 1) / chunks;
    std::int64_t acc = 1;
    for (std::uint64_t mask = std::max<std::uint64_t>(lo, 1); mask < hi; ++mask) {
      std::vector<std::vector<std::int64_t>> m(l);
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1)
          for (int i = 0; i < l; ++i) m[i].push_back(vecs[k][i]);
      acc = std::lcm(acc, smith_invariants(m).largest_torsion());
    }
    partial[c] = acc;
  });
  std::int64_t out = 1;
  for (auto p : partial) out = std::lcm(out, p);
  return out;
}

QuasiPolynomial char_quasi(const ArrangementSpec& spec, const CharQuasiOptions& options) {
  int period = 0;
  if (options.period_override) {
    period = *options.period_override;
    if (period < 1) throw ValidationError("period override must be positive");
  } else {
    period = static_cast<int>(lcm_period(spec));
  }
  const int l = spec.rank();
  InterpolationOptions io;
  io.min_q = options.min_q;
  QuasiPolynomial qp =
      interpolate_qp([&spec](std::int64_t q) { return count_complement(spec, q); }, period, l, io);
  for (int k = 1; k <= qp.period(); ++k) {
    const auto& c = qp.constituent(k);
    if (c.degree() != l || c.leading() != 1 || !c.is_integral())
      throw InconsistencyError("characteristic quasi-polynomial constituent " + std::to_string(k) +
                               " is not monic of degree " + std::to_string(l) +
                               " with integer coefficients: " + c.to_string());
  }
  return qp;
}

}  // namespace weylq
