#pragma once

#include <map>
#include <vector>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

// Mark-weighted counts of where w sends alpha_0..alpha_l relative to Psi:
//   dsc     : w(alpha_i) in -Psi^c
//   dsc_bar : w(alpha_i) in -Psi
//   asc     : w(alpha_i) in  Psi^c
//   asc_bar : w(alpha_i) in  Psi
// The four always sum to the Coxeter number.
struct DescentProfile {
  int dsc = 0;
  int dsc_bar = 0;
  int asc = 0;
  int asc_bar = 0;

  int total() const { return dsc + dsc_bar + asc + asc_bar; }
  friend bool operator==(const DescentProfile&, const DescentProfile&) = default;
};

DescentProfile descent_profile(const RootSystem& rs, const RootSubset& psi, const WeylElement& w);

// Profiles of every element of the group, in enumeration order.
std::vector<DescentProfile> descent_profiles(const WeylGroup& group, const RootSubset& psi);

// E_Psi(t) = (1/f) sum_w t^{h - dsc_Psi(w)}. Throws InconsistencyError if some
// fiber size is not divisible by f.
RationalPolynomial eulerian_poly(const WeylGroup& group, const RootSubset& psi);

// E_emptyset, the generalized Eulerian polynomial.
RationalPolynomial generalized_eulerian(const WeylGroup& group);

// Closed form of E_{Phi+ \ {delta}} from the root-length data of delta. Needs
// only the root system, not the group.
RationalPolynomial eulerian_delta_complement(const RootSystem& rs, const Coeffs& delta);

// M_Psi(t) = (1/f) sum_w t^{h + asc_bar_Psi(w)}.
RationalPolynomial m_poly(const WeylGroup& group, const RootSubset& psi);

// Fibers Omega_i = {w : delta = -w(alpha_i)} over the extended simple roots
// alpha_i of the same length as delta; values are element indices into
// group.elements().
std::map<int, std::vector<std::size_t>> omega_partition(const WeylGroup& group,
                                                        const Coeffs& delta);

// Number of roots (both signs) in the length class of r.
int length_class_size(const RootSystem& rs, RootLength length);

}  // namespace weylq
