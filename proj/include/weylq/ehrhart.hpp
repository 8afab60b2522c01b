#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weylq/quasipoly.hpp"
#include "weylq/rootsys.hpp"

namespace weylq {

// Lattice points of the dilated fundamental alcove, counted in coordinates
// z_i = (alpha_i, x) w.r.t. the coweight lattice. Facet i >= 1 is z_i = 0 and
// facet 0 is sum_i c_i z_i = q.

// #{z >= 0 : sum c_i z_i <= q}; zero for q < 0.
std::int64_t count_closed(const RootSystem& rs, std::int64_t q);
// #{z >= 1 : sum c_i z_i <= q - 1}; zero for q < 1.
std::int64_t count_open(const RootSystem& rs, std::int64_t q);

// Period lcm(c_1..c_l), degree l.
QuasiPolynomial ehrhart_closed_qp(const RootSystem& rs);
QuasiPolynomial ehrhart_open_qp(const RootSystem& rs);

// Points of q * closure(A) off the selected facets. Requires
// q > sum of the selected marks (DomainError otherwise).
std::int64_t count_minus_facets(const RootSystem& rs, std::int64_t q,
                                const std::vector<int>& facet_indices);

// Points of q * closure(A) off the bands F_i^{[0, b_i]}, i.e. off the
// hyperplanes (alpha_i, x) = m for m in [0, b_i] (i >= 1) and
// (alpha_0, x) = -q + m for m in [0, b_0]. Requires
// q > sum (b_i + 1) c_i.
std::int64_t count_minus_bands(const RootSystem& rs, std::int64_t q,
                               const std::map<int, int>& bands);

// Points of q * closure(A) off the band F_i^{[a, b]} with 1 <= a <= b.
// Requires q > (b + 1) c_i.
std::int64_t count_minus_band_general(const RootSystem& rs, std::int64_t q, int facet,
                                      std::int64_t a, std::int64_t b);

}  // namespace weylq
