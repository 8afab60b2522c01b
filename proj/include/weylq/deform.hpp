#pragma once

#include <cstdint>
#include <variant>

#include "weylq/charquasi.hpp"
#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

struct OffsetInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Type I: every alpha in Psi carries the offsets [a, b].
ArrangementSpec type1_spec(const RootSystem& rs, const RootSubset& psi, OffsetInterval ab);
// Type II: Psi carries [a, b] and its complement carries [c, d].
ArrangementSpec type2_spec(const RootSystem& rs, const RootSubset& psi, OffsetInterval ab,
                           OffsetInterval cd);

// Interval [-a, b] with a, b >= 0.
struct SymmetricInterval {
  std::int64_t a = 0;
  std::int64_t b = 0;
};
// Interval [1, b] with b >= 1.
struct PositiveInterval {
  std::int64_t b = 1;
};
using Type1Variant = std::variant<SymmetricInterval, PositiveInterval>;

// [-a, b] on Psi and [-c, d] on the complement.
struct Type2CaseI {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};
// [-a, b] on Psi and [1, d] on the complement.
struct Type2CaseII {
  std::int64_t a = 0, b = 0, d = 1;
};
// [1, b] on Psi and [1, d] on the complement.
struct Type2CaseIII {
  std::int64_t b = 1, d = 1;
};
using Type2Case = std::variant<Type2CaseI, Type2CaseII, Type2CaseIII>;

OffsetInterval interval_of(const Type1Variant& v);
std::pair<OffsetInterval, OffsetInterval> intervals_of(const Type2Case& c);

// (1/f) sum_w L_closed(q - shift(w)) with the Type I shift
//   symmetric: (b+1) asc_bar + asc + (a+1) dsc_bar
//   positive : (b+1) asc_bar + asc
// Throws DomainError when psi is not compatible.
QuasiPolynomial cqp_type1_formula(const WeylGroup& group, const RootSubset& psi,
                                  const Type1Variant& variant);

// Type II shift (b+1) asc_bar + (d+1) asc + (a+1) dsc_bar + (c+1) dsc, with the
// dsc term dropped in case II and both descent terms dropped in case III.
// Throws DomainError when psi is not compatible.
QuasiPolynomial cqp_type2_formula(const WeylGroup& group, const RootSubset& psi,
                                  const Type2Case& which);

// Smallest q from which the brute-force count of spec is sampled:
// (M + 3) h + 1 where M bounds |lo| + |hi| over the offset sets.
std::int64_t deformation_threshold(const RootSystem& rs, const ArrangementSpec& spec);

struct DeformCheck {
  bool equal = false;
  QuasiPolynomial brute_force;
};

// Interpolates the characteristic quasi-polynomial of spec above the
// deformation threshold (period = lcm_period of its vectors) and compares it
// with formula.
DeformCheck verify_deform(const RootSystem& rs, const ArrangementSpec& spec,
                          const QuasiPolynomial& formula);

}  // namespace weylq
