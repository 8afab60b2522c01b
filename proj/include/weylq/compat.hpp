#pragma once

#include <cstdint>
#include <optional>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

// (E_Psi(S) L_closed)(q) = (1/f) sum_w L_closed(q - h + dsc_Psi(w)).
QuasiPolynomial shift_formula_qp(const WeylGroup& group, const RootSubset& psi);

struct CompatWitness {
  int residue = 0;      // residue class of q modulo the common period, in 1..rho
  std::int64_t q = 0;   // smallest positive q where the two sides differ
};

struct CompatResult {
  bool compatible = false;
  std::optional<CompatWitness> witness;
  QuasiPolynomial characteristic;  // chi_Psi
  QuasiPolynomial formula;         // shift formula
};

// Decides compatibility by exact equality of chi_Psi and the shift formula.
CompatResult is_compatible(const WeylGroup& group, const RootSubset& psi);

// shift formula minus chi_Psi.
QuasiPolynomial defect_qp(const WeylGroup& group, const RootSubset& psi);

// chi_Psi computed from the zero-offset arrangement of Psi.
QuasiPolynomial subset_char_quasi(const RootSystem& rs, const RootSubset& psi);

struct GenfuncCheck {
  bool equal = false;
  SeriesTruncation characteristic;  // sum chi_Psi(q) t^q
  SeriesTruncation rational;        // E_Psi(t) / prod_{i=0..l} (1 - t^{c_i})
};

// Requires order >= 3h.
GenfuncCheck verify_genfunc(const WeylGroup& group, const RootSubset& psi, int order);

}  // namespace weylq
