#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

// A list of integer vectors with finite offset sets: every (vector, offset)
// pair is the congruence sum_i a_i z_i == offset (mod q). Items are merged by
// vector and kept sorted, so duplicate pairs collapse.
class ArrangementSpec {
 public:
  explicit ArrangementSpec(int rank) : rank_(rank) {}

  struct Item {
    Coeffs coeffs;
    std::set<std::int64_t> offsets;
  };

  // Throws ValidationError on wrong length, zero vector or empty offset set.
  void add(const Coeffs& coeffs, const std::set<std::int64_t>& offsets);
  void add(const Coeffs& coeffs, std::int64_t offset) { add(coeffs, std::set<std::int64_t>{offset}); }

  int rank() const { return rank_; }
  const std::vector<Item>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::vector<Coeffs> vectors() const;
  std::size_t num_pairs() const;

 private:
  int rank_;
  std::vector<Item> items_;
};

// Zero-offset arrangement of the roots in subset.
ArrangementSpec subset_spec(const RootSystem& rs, const RootSubset& subset);

struct InvariantFactors {
  std::vector<std::int64_t> factors;  // positive, each dividing the next

  // Largest invariant factor of the torsion part; 1 when torsion-free.
  std::int64_t largest_torsion() const;
};

// Invariant factors of the column span quotient: for a rows x cols matrix M,
// Z^rows / M Z^cols has torsion part given by the factors greater than 1.
InvariantFactors smith_invariants(const std::vector<std::vector<std::int64_t>>& matrix);

// #{z in (Z/q)^l : no congruence of spec holds}.
std::int64_t count_complement(const ArrangementSpec& spec, std::int64_t q);

inline constexpr std::size_t kLcmPeriodGuard = 24;

// lcm over all sublists S of distinct vectors of the largest invariant factor
// of Z^l / <S>. Throws ResourceError past kLcmPeriodGuard distinct vectors.
std::int64_t lcm_period(const ArrangementSpec& spec);

struct CharQuasiOptions {
  std::optional<int> period_override;
  // Smallest q used for interpolation. One is valid for zero offsets; shifted
  // offsets need q beyond the deformation threshold.
  std::int64_t min_q = 1;
};

// Monic degree-l quasi-polynomial interpolated from count_complement.
QuasiPolynomial char_quasi(const ArrangementSpec& spec, const CharQuasiOptions& options = {});

}  // namespace weylq
