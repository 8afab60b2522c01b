#include "weylq/quasipoly.hpp"

#include <numeric>
#include <sstream>

#include "weylq/errors.hpp"
#include "weylq/parallel.hpp"

namespace weylq {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs_ascending)
    : coeffs_(std::move(coeffs_ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) {
  return RationalPolynomial({-root, Rational(1)});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

bool RationalPolynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(std::int64_t k) const {
  // Horner in the composed variable (x - k).
  RationalPolynomial acc;
  const RationalPolynomial step = linear_factor(Rational(k));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step;
    acc += constant(*it);
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) {
        if (a.get_den() == 1)
          os << a.get_str();
        else
          os << "(" << a.get_str() << ")";
      }
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

QuasiPolynomial::QuasiPolynomial(RationalPolynomial p) : period_(1), constituents_{std::move(p)} {}

QuasiPolynomial::QuasiPolynomial(int period, std::vector<RationalPolynomial> constituents)
    : period_(period), constituents_(std::move(constituents)) {
  if (period_ < 1) throw ValidationError("quasi-polynomial period must be positive");
  if (static_cast<int>(constituents_.size()) != period_)
    throw ValidationError("quasi-polynomial needs exactly one constituent per residue");
}

int QuasiPolynomial::residue_of(std::int64_t q) const {
  std::int64_t r = (q - 1) % period_;
  if (r < 0) r += period_;
  return static_cast<int>(r) + 1;
}

const RationalPolynomial& QuasiPolynomial::constituent(int residue) const {
  if (residue < 1 || residue > period_)
    throw ValidationError("residue " + std::to_string(residue) + " outside 1.." +
                          std::to_string(period_));
  return constituents_[residue - 1];
}

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& c : constituents_) d = std::max(d, c.degree());
  return d;
}

bool QuasiPolynomial::is_integral() const {
  for (const auto& c : constituents_)
    if (!c.is_integral()) return false;
  return true;
}

Rational QuasiPolynomial::operator()(std::int64_t q) const {
  return constituents_[residue_of(q) - 1](q);
}

ShiftPolynomial ShiftPolynomial::from_polynomial(const RationalPolynomial& p) {
  ShiftPolynomial s;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) s.coeffs.emplace(k, p.coeff(k));
  return s;
}

void ShiftPolynomial::add_term(int exponent, const Rational& c) {
  if (exponent < 0) throw ValidationError("shift exponents must be nonnegative");
  Rational& slot = coeffs[exponent];
  slot += c;
  if (slot == 0) coeffs.erase(exponent);
}

ShiftPolynomial operator*(const ShiftPolynomial& a, const ShiftPolynomial& b) {
  ShiftPolynomial out;
  for (const auto& [i, x] : a.coeffs)
    for (const auto& [j, y] : b.coeffs) out.add_term(i + j, x * y);
  return out;
}

Rational evaluate_qp(const QuasiPolynomial& qp, std::int64_t q) { return qp(q); }

QuasiPolynomial normalize_period(const QuasiPolynomial& qp, int new_period) {
  if (new_period < 1 || new_period % qp.period() != 0)
    throw ValidationError("new period " + std::to_string(new_period) +
                          " is not a positive multiple of " + std::to_string(qp.period()));
  std::vector<RationalPolynomial> cs;
  cs.reserve(new_period);
  for (int k = 1; k <= new_period; ++k) cs.push_back(qp.constituent(qp.residue_of(k)));
  return QuasiPolynomial(new_period, std::move(cs));
}

bool qp_equal(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const int p = std::lcm(a.period(), b.period());
  for (int k = 1; k <= p; ++k)
    if (a.constituent(a.residue_of(k)) != b.constituent(b.residue_of(k))) return false;
  return true;
}

namespace {

template <class Op>
QuasiPolynomial combine(const QuasiPolynomial& a, const QuasiPolynomial& b, Op op) {
  const int p = std::lcm(a.period(), b.period());
  std::vector<RationalPolynomial> cs;
  cs.reserve(p);
  for (int k = 1; k <= p; ++k)
    cs.push_back(op(a.constituent(a.residue_of(k)), b.constituent(b.residue_of(k))));
  return QuasiPolynomial(p, std::move(cs));
}

}  // namespace

QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

QuasiPolynomial qp_sub(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

QuasiPolynomial qp_scale(const QuasiPolynomial& a, const Rational& c) {
  std::vector<RationalPolynomial> cs;
  for (const auto& x : a.constituents()) cs.push_back(x * c);
  return QuasiPolynomial(a.period(), std::move(cs));
}

QuasiPolynomial apply_shift(const ShiftPolynomial& p, const QuasiPolynomial& qp) {
  const int rho = qp.period();
  std::vector<RationalPolynomial> cs(rho);
  for (int k = 1; k <= rho; ++k) {
    // For q == k (mod rho), q - j lies in residue class k - j.
    for (const auto& [j, a] : p.coeffs)
      cs[k - 1] += qp.constituent(qp.residue_of(k - j)).shifted(j) * a;
  }
  return QuasiPolynomial(rho, std::move(cs));
}

int minimum_period(const QuasiPolynomial& qp) {
  const int rho = qp.period();
  for (int d = 1; d < rho; ++d) {
    if (rho % d != 0) continue;
    bool repeats = true;
    for (int k = d + 1; k <= rho && repeats; ++k)
      repeats = qp.constituent(k) == qp.constituent(k - d);
    if (repeats) return d;
  }
  return rho;
}

namespace {

RationalPolynomial lagrange(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
  RationalPolynomial out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (ys[j] == 0) continue;
    RationalPolynomial basis = RationalPolynomial::constant(Rational(1));
    Rational denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m) {
      if (m == j) continue;
      basis = basis * RationalPolynomial::linear_factor(Rational(xs[m]));
      denom *= Rational(xs[j] - xs[m]);
    }
    out += basis * (Rational(ys[j]) / denom);
  }
  return out;
}

}  // namespace

QuasiPolynomial interpolate_qp(const Sampler& sampler, int period, int degree_bound,
                               const InterpolationOptions& options) {
  if (period < 1) throw ValidationError("interpolation period must be positive");
  if (degree_bound < 0) throw ValidationError("degree bound must be nonnegative");
  const int per_residue = degree_bound + 3;  // d + 1 fitting samples, 2 checks

  std::vector<std::int64_t> xs(static_cast<std::size_t>(period) * per_residue);
  for (int k = 1; k <= period; ++k) {
    std::int64_t start = options.min_q;
    std::int64_t shift = ((k - start) % period + period) % period;
    start += shift;
    for (int j = 0; j < per_residue; ++j)
      xs[static_cast<std::size_t>(k - 1) * per_residue + j] = start + static_cast<std::int64_t>(j) * period;
  }
  std::vector<std::int64_t> ys(xs.size());
  auto eval = [&](std::size_t i) { ys[i] = sampler(xs[i]); };
  if (options.parallel)
    detail::parallel_for(xs.size(), eval);
  else
    for (std::size_t i = 0; i < xs.size(); ++i) eval(i);

  std::vector<RationalPolynomial> cs;
  cs.reserve(period);
  for (int k = 1; k <= period; ++k) {
    auto base = static_cast<std::size_t>(k - 1) * per_residue;
    std::vector<std::int64_t> fx(xs.begin() + base, xs.begin() + base + degree_bound + 1);
    std::vector<std::int64_t> fy(ys.begin() + base, ys.begin() + base + degree_bound + 1);
    RationalPolynomial p = lagrange(fx, fy);
    for (int j = degree_bound + 1; j < per_residue; ++j) {
      std::int64_t x = xs[base + j];
      if (p(x) != Rational(ys[base + j])) {
        std::ostringstream msg;
        msg << "interpolation check failed at q=" << x << " (residue " << k << " mod " << period
            << "): fitted " << p(x).get_str() << ", sampled " << ys[base + j]
            << "; period or degree bound " << degree_bound << " is wrong";
        throw InconsistencyError(msg.str());
      }
    }
    cs.push_back(std::move(p));
  }
  return QuasiPolynomial(period, std::move(cs));
}

SeriesTruncation series_of_qp(const QuasiPolynomial& qp, int order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  SeriesTruncation s;
  s.order = order;
  s.coeffs.assign(order + 1, Rational(0));
  for (int q = 1; q <= order; ++q) s.coeffs[q] = qp(q);
  return s;
}

SeriesTruncation expand_rational_series(const RationalPolynomial& numerator,
                                        const std::vector<int>& cyclotomic_exponents, int order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  SeriesTruncation s;
  s.order = order;
  s.coeffs.assign(order + 1, Rational(0));
  for (int k = 0; k <= std::min(order, numerator.degree()); ++k) s.coeffs[k] = numerator.coeff(k);
  for (int c : cyclotomic_exponents) {
    if (c < 1) throw ValidationError("cyclotomic exponents must be positive");
    // b = a / (1 - t^c)  <=>  b_n = a_n + b_{n-c}
    for (int n = c; n <= order; ++n) s.coeffs[n] += s.coeffs[n - c];
  }
  return s;
}

RationalPolynomial first_constituent(const QuasiPolynomial& qp) { return qp.constituent(1); }

std::string to_string(const QuasiPolynomial& qp, const std::string& var) {
  if (qp.period() == 1) return qp.constituent(1).to_string(var);
  std::ostringstream os;
  for (int k = 1; k <= qp.period(); ++k) {
    if (k > 1) os << "\n";
    os << var << " = " << (k % qp.period()) << " mod " << qp.period() << ": "
       << qp.constituent(k).to_string(var);
  }
  return os.str();
}

}  // namespace weylq
