#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weylq {

using Rational = mpq_class;

// Univariate polynomial with exact rational coefficients, stored ascending with
// no trailing zeros (the zero polynomial has no coefficients).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs_ascending);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int degree);
  // (x - root)
  static RationalPolynomial linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  bool is_integral() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const { return (*this)(Rational(x)); }

  // x -> p(x - k)
  RationalPolynomial shifted(std::int64_t k) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quasi-polynomial with period rho; constituent k (1 <= k <= rho) applies to
// every integer q == k (mod rho), residue 0 being stored as k = rho.
class QuasiPolynomial {
 public:
  QuasiPolynomial() : QuasiPolynomial(RationalPolynomial()) {}
  explicit QuasiPolynomial(RationalPolynomial p);
  QuasiPolynomial(int period, std::vector<RationalPolynomial> constituents);

  int period() const { return period_; }
  // Residue representative of q in {1..rho}; valid for negative q too.
  int residue_of(std::int64_t q) const;
  const RationalPolynomial& constituent(int residue) const;
  const std::vector<RationalPolynomial>& constituents() const { return constituents_; }
  int degree() const;
  bool is_integral() const;

  Rational operator()(std::int64_t q) const;

 private:
  int period_ = 1;
  std::vector<RationalPolynomial> constituents_;
};

// P(S) = sum_k a_k S^k, acting by (P(S) f)(t) = sum_k a_k f(t - k).
struct ShiftPolynomial {
  std::map<int, Rational> coeffs;

  static ShiftPolynomial from_polynomial(const RationalPolynomial& p);
  void add_term(int exponent, const Rational& c);
  friend ShiftPolynomial operator*(const ShiftPolynomial& a, const ShiftPolynomial& b);
};

struct SeriesTruncation {
  int order = 0;
  std::vector<Rational> coeffs;  // t^0..t^order
  friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;
};

Rational evaluate_qp(const QuasiPolynomial& qp, std::int64_t q);

// Throws ValidationError unless new_period is a positive multiple of the period.
QuasiPolynomial normalize_period(const QuasiPolynomial& qp, int new_period);
bool qp_equal(const QuasiPolynomial& a, const QuasiPolynomial& b);

QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial qp_sub(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial qp_scale(const QuasiPolynomial& a, const Rational& c);

QuasiPolynomial apply_shift(const ShiftPolynomial& p, const QuasiPolynomial& qp);

// Smallest divisor d of the period such that the constituents repeat with
// period d.
int minimum_period(const QuasiPolynomial& qp);

using Sampler = std::function<std::int64_t(std::int64_t)>;

struct InterpolationOptions {
  // First admissible sample; residue k is sampled at the smallest q >= min_q
  // with q == k (mod rho) and then every rho steps.
  std::int64_t min_q = 1;
  bool parallel = true;
};

// Per residue, Lagrange interpolation through degree_bound + 1 samples, then
// two further samples that must match. The sampler is called concurrently when
// options.parallel is set. Throws InconsistencyError on a mismatch.
QuasiPolynomial interpolate_qp(const Sampler& sampler, int period, int degree_bound,
                               const InterpolationOptions& options = {});

// sum_{q=1..T} qp(q) t^q
SeriesTruncation series_of_qp(const QuasiPolynomial& qp, int order);
// Expansion of numerator(t) / prod_i (1 - t^{c_i}) through t^order.
SeriesTruncation expand_rational_series(const RationalPolynomial& numerator,
                                        const std::vector<int>& cyclotomic_exponents, int order);

RationalPolynomial first_constituent(const QuasiPolynomial& qp);

std::string to_string(const QuasiPolynomial& qp, const std::string& var = "q");

}  // namespace weylq
