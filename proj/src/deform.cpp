#include "weylq/deform.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "weylq/compat.hpp"
#include "weylq/ehrhart.hpp"
#include "weylq/errors.hpp"
#include "weylq/eulerian.hpp"

namespace weylq {

namespace {

void check_interval(OffsetInterval iv, const char* name) {
  if (iv.lo > iv.hi)
    throw ValidationError(std::string("interval ") + name + " has lower bound " +
                          std::to_string(iv.lo) + " above upper bound " + std::to_string(iv.hi));
}

std::set<std::int64_t> offsets_of(OffsetInterval iv) {
  std::set<std::int64_t> s;
  for (auto m = iv.lo; m <= iv.hi; ++m) s.insert(m);
  return s;
}

void require_compatible(const WeylGroup& group, const RootSubset& psi) {
  if (!is_compatible(group, psi).compatible)
    throw DomainError("deformation formulas are only asserted for compatible subsets");
}

QuasiPolynomial shift_sum(const WeylGroup& group, const RootSubset& psi,
                          const std::function<std::int64_t(const DescentProfile&)>& shift) {
  const RootSystem& rs = group.root_system();
  const Rational inv_f(1, rs.index_of_connection());
  ShiftPolynomial p;
  for (const auto& prof : descent_profiles(group, psi))
    p.add_term(static_cast<int>(shift(prof)), inv_f);
  return apply_shift(p, ehrhart_closed_qp(rs));
}

}  // namespace

ArrangementSpec type1_spec(const RootSystem& rs, const RootSubset& psi, OffsetInterval ab) {
  check_interval(ab, "[a,b]");
  ArrangementSpec spec(rs.rank());
  const auto offsets = offsets_of(ab);
  for (int k : psi.indices()) spec.add(rs.positive_roots()[k].coeffs, offsets);
  return spec;
}

ArrangementSpec type2_spec(const RootSystem& rs, const RootSubset& psi, OffsetInterval ab,
                           OffsetInterval cd) {
  check_interval(ab, "[a,b]");
  check_interval(cd, "[c,d]");
  ArrangementSpec spec = type1_spec(rs, psi, ab);
  const auto offsets = offsets_of(cd);
  const RootSubset complement = psi.complement(rs);
  for (int k : complement.indices()) spec.add(rs.positive_roots()[k].coeffs, offsets);
  return spec;
}

OffsetInterval interval_of(const Type1Variant& v) {
  return std::visit(
      [](const auto& x) -> OffsetInterval {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SymmetricInterval>)
          return {-x.a, x.b};
        else
          return {1, x.b};
      },
      v);
}

std::pair<OffsetInterval, OffsetInterval> intervals_of(const Type2Case& c) {
  return std::visit(
      [](const auto& x) -> std::pair<OffsetInterval, OffsetInterval> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Type2CaseI>)
          return {{-x.a, x.b}, {-x.c, x.d}};
        else if constexpr (std::is_same_v<T, Type2CaseII>)
          return {{-x.a, x.b}, {1, x.d}};
        else
          return {{1, x.b}, {1, x.d}};
      },
      c);
}

QuasiPolynomial cqp_type1_formula(const WeylGroup& group, const RootSubset& psi,
                                  const Type1Variant& variant) {
  if (const auto* s = std::get_if<SymmetricInterval>(&variant)) {
    if (s->a < 0 || s->b < 0) throw ValidationError("symmetric variant needs a, b >= 0");
    require_compatible(group, psi);
    const auto a = s->a, b = s->b;
    return shift_sum(group, psi, [a, b](const DescentProfile& p) {
      return (b + 1) * p.asc_bar + p.asc + (a + 1) * p.dsc_bar;
    });
  }
  const auto b = std::get<PositiveInterval>(variant).b;
  if (b < 1) throw ValidationError("positive variant needs b >= 1");
  require_compatible(group, psi);
  return shift_sum(group, psi,
                   [b](const DescentProfile& p) { return (b + 1) * p.asc_bar + p.asc; });
}

QuasiPolynomial cqp_type2_formula(const WeylGroup& group, const RootSubset& psi,
                                  const Type2Case& which) {
  if (const auto* x = std::get_if<Type2CaseI>(&which)) {
    if (x->a < 0 || x->b < 0 || x->c < 0 || x->d < 0)
      throw ValidationError("case (i) needs a, b, c, d >= 0");
    require_compatible(group, psi);
    const Type2CaseI k = *x;
    return shift_sum(group, psi, [k](const DescentProfile& p) {
      return (k.b + 1) * p.asc_bar + (k.d + 1) * p.asc + (k.a + 1) * p.dsc_bar +
             (k.c + 1) * p.dsc;
    });
  }
  if (const auto* x = std::get_if<Type2CaseII>(&which)) {
    if (x->a < 0 || x->b < 0 || x->d < 1)
      throw ValidationError("case (ii) needs a, b >= 0 and d >= 1");
    require_compatible(group, psi);
    const Type2CaseII k = *x;
    return shift_sum(group, psi, [k](const DescentProfile& p) {
      return (k.b + 1) * p.asc_bar + (k.d + 1) * p.asc + (k.a + 1) * p.dsc_bar;
    });
  }
  const auto& k = std::get<Type2CaseIII>(which);
  if (k.b < 1 || k.d < 1) throw ValidationError("case (iii) needs b, d >= 1");
  require_compatible(group, psi);
  return shift_sum(group, psi, [k](const DescentProfile& p) {
    return (k.b + 1) * p.asc_bar + (k.d + 1) * p.asc;
  });
}

std::int64_t deformation_threshold(const RootSystem& rs, const ArrangementSpec& spec) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& item : spec.items()) {
    lo = std::max<std::int64_t>(lo, std::llabs(*item.offsets.begin()));
    hi = std::max<std::int64_t>(hi, std::llabs(*item.offsets.rbegin()));
  }
  return (lo + hi + 3) * rs.coxeter_number() + 1;
}

DeformCheck verify_deform(const RootSystem& rs, const ArrangementSpec& spec,
                          const QuasiPolynomial& formula) {
  CharQuasiOptions opts;
  opts.min_q = deformation_threshold(rs, spec);
  DeformCheck out;
  out.brute_force = char_quasi(spec, opts);
  out.equal = qp_equal(out.brute_force, formula);
  return out;
}

}  // namespace weylq
