#include "weylq/eulerian.hpp"

#include <string>

#include "weylq/errors.hpp"
#include "weylq/parallel.hpp"

namespace weylq {

namespace {

DescentProfile classify(const std::vector<SignedRoot>& images, const std::vector<bool>& in_psi,
                        const std::vector<int>& ext_marks) {
  DescentProfile p;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const SignedRoot r = images[i];
    const int c = ext_marks[i];
    const bool in = in_psi[r.index];
    if (r.sign < 0)
      (in ? p.dsc_bar : p.dsc) += c;
    else
      (in ? p.asc_bar : p.asc) += c;
  }
  return p;
}

// (1/f) sum over fibers, checking each fiber is a multiple of f.
RationalPolynomial fiber_polynomial(const std::vector<std::int64_t>& counts, int f,
                                    const char* what) {
  std::vector<Rational> coeffs(counts.size(), Rational(0));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] % f != 0)
      throw InconsistencyError(std::string(what) + ": fiber at exponent " + std::to_string(k) +
                               " has size " + std::to_string(counts[k]) +
                               ", not divisible by f = " + std::to_string(f));
    coeffs[k] = Rational(counts[k] / f);
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace

DescentProfile descent_profile(const RootSystem& rs, const RootSubset& psi, const WeylElement& w) {
  std::vector<SignedRoot> images;
  for (int i = 0; i <= rs.rank(); ++i) {
    auto r = rs.find_root(w.matrix.apply(rs.extended_simple_root(i)));
    if (!r) throw ValidationError("descent_profile: matrix is not a Weyl group element");
    images.push_back(*r);
  }
  return classify(images, psi.mask(rs), rs.extended_marks());
}

std::vector<DescentProfile> descent_profiles(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  const auto in_psi = psi.mask(rs);
  const auto ext = rs.extended_marks();
  std::vector<DescentProfile> out(group.size());
  // Chunked so small groups stay on one thread.
  const std::size_t chunk = 4096;
  const std::size_t chunks = (group.size() + chunk - 1) / chunk;
  detail::parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(group.size(), (c + 1) * chunk);
    for (std::size_t e = c * chunk; e < end; ++e) out[e] = classify(group.images(e), in_psi, ext);
  });
  return out;
}

RationalPolynomial eulerian_poly(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  const int h = rs.coxeter_number();
  std::vector<std::int64_t> counts(h + 1, 0);
  for (const auto& p : descent_profiles(group, psi)) ++counts[h - p.dsc];
  return fiber_polynomial(counts, rs.index_of_connection(), "A-Eulerian polynomial");
}

RationalPolynomial generalized_eulerian(const WeylGroup& group) {
  return eulerian_poly(group, RootSubset::empty());
}

int length_class_size(const RootSystem& rs, RootLength length) {
  int n = 0;
  for (const auto& r : rs.positive_roots())
    if (classify_length(rs, r.coeffs) == length) ++n;
  return 2 * n;
}

RationalPolynomial eulerian_delta_complement(const RootSystem& rs, const Coeffs& delta) {
  if (static_cast<int>(delta.size()) != rs.rank() || !rs.find_positive(delta))
    throw ValidationError("eulerian_delta_complement: delta must be a positive root");
  const RootLength cls = classify_length(rs, delta);
  const auto ext = rs.extended_marks();
  const int h = rs.coxeter_number();
  const Rational order(static_cast<unsigned long>(rs.weyl_order()));
  const int f = rs.index_of_connection();
  const int phi_ls = length_class_size(rs, cls);

  RationalPolynomial out;
  int matching = 0;
  for (int i = 0; i <= rs.rank(); ++i) {
    if (classify_length(rs, rs.extended_simple_root(i)) != cls) continue;
    ++matching;
    out += RationalPolynomial::monomial(order / (f * phi_ls), h - ext[i]);
  }
  out += RationalPolynomial::monomial(order * (phi_ls - matching) / (f * phi_ls), h);
  return out;
}

RationalPolynomial m_poly(const WeylGroup& group, const RootSubset& psi) {
  const RootSystem& rs = group.root_system();
  const int h = rs.coxeter_number();
  std::vector<std::int64_t> counts(2 * h, 0);
  for (const auto& p : descent_profiles(group, psi)) ++counts[h + p.asc_bar];
  return fiber_polynomial(counts, rs.index_of_connection(), "M polynomial");
}

std::map<int, std::vector<std::size_t>> omega_partition(const WeylGroup& group,
                                                        const Coeffs& delta) {
  const RootSystem& rs = group.root_system();
  if (static_cast<int>(delta.size()) != rs.rank() || !rs.find_positive(delta))
    throw ValidationError("omega_partition: delta must be a positive root");
  const int target = *rs.find_positive(delta);
  const RootLength cls = classify_length(rs, delta);

  std::map<int, std::vector<std::size_t>> fibers;
  for (int i = 0; i <= rs.rank(); ++i)
    if (classify_length(rs, rs.extended_simple_root(i)) == cls) fibers[i];
  for (std::size_t e = 0; e < group.size(); ++e) {
    const auto& img = group.images(e);
    for (auto& [i, members] : fibers)
      if (img[i].sign < 0 && img[i].index == target) members.push_back(e);
  }
  return fibers;
}

}  // namespace weylq
