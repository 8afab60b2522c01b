#include "weylq/compat.hpp"

#include <future>
#include <numeric>
#include <string>

#include "weylq/charquasi.hpp"
#include "weylq/ehrhart.hpp"
#include "weylq/errors.hpp"
#include "weylq/eulerian.hpp"

namespace weylq {

QuasiPolynomial shift_formula_qp(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  return apply_shift(ShiftPolynomial::from_polynomial(eulerian_poly(group, psi)),
                     ehrhart_closed_qp(rs));
}

QuasiPolynomial subset_char_quasi(const RootSystem& rs, const RootSubset& psi) {
  return char_quasi(subset_spec(rs, psi));
}

CompatResult is_compatible(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  auto chi = std::async(std::launch::async, [&] { return subset_char_quasi(rs, psi); });
  QuasiPolynomial formula = shift_formula_qp(group, psi);

  CompatResult out;
  out.characteristic = chi.get();
  out.formula = std::move(formula);
  out.compatible = qp_equal(out.characteristic, out.formula);
  if (!out.compatible) {
    const int rho = std::lcm(out.characteristic.period(), out.formula.period());
    const std::int64_t limit = static_cast<std::int64_t>(rho) * (rs.rank() + 3);
    for (std::int64_t q = 1; q <= limit; ++q)
      if (out.characteristic(q) != out.formula(q)) {
        std::int64_t r = q % rho;
        out.witness = CompatWitness{static_cast<int>(r == 0 ? rho : r), q};
        break;
      }
    if (!out.witness)
      throw InconsistencyError("quasi-polynomials differ but agree on q = 1.." +
                               std::to_string(limit));
  }
  return out;
}

QuasiPolynomial defect_qp(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  return qp_sub(shift_formula_qp(group, psi), subset_char_quasi(rs, psi));
}

GenfuncCheck verify_genfunc(const WeylGroup& group, const RootSubset& psi, int order) {
  const RootSystem& rs = group.root_system();
  if (order < 3 * rs.coxeter_number())
    throw ValidationError("generating-function check needs at least 3h = " +
                          std::to_string(3 * rs.coxeter_number()) + " terms");
  GenfuncCheck out;
  out.characteristic = series_of_qp(subset_char_quasi(rs, psi), order);
  out.rational = expand_rational_series(eulerian_poly(group, psi), rs.extended_marks(), order);
  out.equal = out.characteristic == out.rational;
  return out;
}

}  // namespace weylq
