#include "weylq/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "weylq/errors.hpp"

namespace weylq {

char family_letter(Family f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

Family family_from_letter(char c) {
  if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G')
    throw ValidationError(std::string("unknown root system family '") + c +
                          "' (expected one of A,B,C,D,E,F,G)");
  return static_cast<Family>(c - 'A');
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const RootSystemSpec& spec) {
  const int l = spec.rank;
  auto fail = [&](const std::string& rule) {
    throw ValidationError("inadmissible root system " + spec.name() + ": " + rule);
  };
  switch (spec.family) {
    case Family::A:
      if (l < 1) fail("type A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (l < 2) fail(std::string("type ") + family_letter(spec.family) + " requires rank >= 2");
      break;
    case Family::D:
      if (l < 3) fail("type D requires rank >= 3");
      break;
    case Family::E:
      if (l < 6 || l > 8) fail("type E requires rank 6, 7 or 8");
      break;
    case Family::F:
      if (l != 4) fail("type F requires rank 4");
      break;
    case Family::G:
      if (l != 2) fail("type G requires rank 2");
      break;
  }
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Coeffs IntMatrix::apply(const Coeffs& v) const {
  Coeffs out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Coeffs IntMatrix::column(int j) const {
  Coeffs out(n_);
  for (int i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  const int n = x.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

struct DynkinData {
  std::vector<Rational> sq_lengths;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

DynkinData dynkin_data(const RootSystemSpec& spec) {
  const int l = spec.rank;
  DynkinData d;
  d.sq_lengths.assign(l, Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (spec.family) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l);
      d.sq_lengths[l - 1] = 1;
      break;
    case Family::C:
      chain(l);
      for (int i = 0; i + 1 < l; ++i) d.sq_lengths[i] = 1;
      break;
    case Family::D:
      chain(l - 1);
      d.edges.emplace_back(l - 3, l - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7(-8)), with 2 attached to 4.
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < l; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      d.sq_lengths[2] = 1;
      d.sq_lengths[3] = 1;
      break;
    case Family::G:
      // alpha_1 short so that the highest root is 3 alpha_1 + 2 alpha_2.
      d.edges = {{0, 1}};
      d.sq_lengths[0] = Rational(2, 3);
      break;
  }
  return d;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

RootSystem build_root_system(const RootSystemSpec& spec) {
  validate(spec);
  const int l = spec.rank;
  RootSystem rs;
  rs.spec_ = spec;

  DynkinData dyn = dynkin_data(spec);
  rs.gram_.assign(l, std::vector<Rational>(l, Rational(0)));
  for (int i = 0; i < l; ++i) rs.gram_[i][i] = dyn.sq_lengths[i];
  for (auto [i, j] : dyn.edges) {
    Rational v = -std::max(dyn.sq_lengths[i], dyn.sq_lengths[j]) / 2;
    rs.gram_[i][j] = v;
    rs.gram_[j][i] = v;
  }

  rs.cartan_ = IntMatrix(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational a = 2 * rs.gram_[i][j] / rs.gram_[j][j];
      a.canonicalize();
      if (a.get_den() != 1) throw InconsistencyError("non-integral Cartan entry");
      rs.cartan_(i, j) = static_cast<int>(a.get_num().get_si());
    }

  // s_j(v) = v - <v, alpha_j^vee> alpha_j, with <v, alpha_j^vee> = sum_i v_i cartan(i, j).
  rs.reflections_.reserve(l);
  for (int j = 0; j < l; ++j) {
    IntMatrix s = IntMatrix::identity(l);
    for (int i = 0; i < l; ++i) s(j, i) -= rs.cartan_(i, j);
    rs.reflections_.push_back(std::move(s));
  }

  // All roots: closure of the simple roots under simple reflections.
  std::set<Coeffs> roots;
  std::deque<Coeffs> frontier;
  for (int i = 0; i < l; ++i) {
    Coeffs e(l, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Coeffs v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : rs.reflections_) {
      Coeffs w = s.apply(v);
      if (roots.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  for (const auto& v : roots)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }))
      rs.positive_.push_back(Root{v});
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a.coeffs < b.coeffs;
  });
  if (2 * rs.positive_.size() != roots.size())
    throw InconsistencyError("root closure is not symmetric under negation");
  for (int k = 0; k < rs.num_positive_roots(); ++k) rs.index_of_.emplace(rs.positive_[k].coeffs, k);

  rs.highest_ = rs.num_positive_roots() - 1;
  const Root& top = rs.positive_[rs.highest_];
  for (int k = 0; k < rs.highest_; ++k)
    if (!poset_leq(rs, rs.positive_[k].coeffs, top.coeffs))
      throw InconsistencyError("highest root is not the poset maximum");
  rs.marks_ = top.coeffs;
  rs.coxeter_ = 1 + top.height();

  std::int64_t f = determinant(rs.cartan_);
  if (f <= 0) throw InconsistencyError("Cartan determinant must be positive");
  rs.connection_ = static_cast<int>(f);

  // #Phi+ = l h / 2 ties h to the root count.
  if (2 * rs.num_positive_roots() != l * rs.coxeter_)
    throw InconsistencyError("Coxeter number inconsistent with number of positive roots");

  // #W = l! f c_1 ... c_l.
  std::uint64_t order = factorial(l) * static_cast<std::uint64_t>(f);
  for (int c : rs.marks_) order *= static_cast<std::uint64_t>(c);
  rs.weyl_order_ = order;
  return rs;
}

std::vector<int> RootSystem::extended_marks() const {
  std::vector<int> out;
  out.reserve(marks_.size() + 1);
  out.push_back(1);
  out.insert(out.end(), marks_.begin(), marks_.end());
  return out;
}

Coeffs RootSystem::extended_simple_root(int i) const {
  if (i == 0) {
    Coeffs v = highest_root().coeffs;
    for (int& x : v) x = -x;
    return v;
  }
  Coeffs v(rank(), 0);
  v[i - 1] = 1;
  return v;
}

std::optional<int> RootSystem::find_positive(const Coeffs& v) const {
  auto it = index_of_.find(v);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<SignedRoot> RootSystem::find_root(const Coeffs& v) const {
  if (auto p = find_positive(v)) return SignedRoot{*p, 1};
  Coeffs neg = v;
  for (int& x : neg) x = -x;
  if (auto p = find_positive(neg)) return SignedRoot{*p, -1};
  return std::nullopt;
}

Coeffs RootSystem::signed_coeffs(SignedRoot r) const {
  Coeffs v = positive_.at(r.index).coeffs;
  if (r.sign < 0)
    for (int& x : v) x = -x;
  return v;
}

Rational RootSystem::inner(const Coeffs& x, const Coeffs& y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (y[j] != 0) s += gram_[i][j] * x[i] * y[j];
  }
  return s;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "1";
  std::string s;
  for (int g : word) s += "s" + std::to_string(g);
  return s;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t cap) {
  if (rs.weyl_order() > cap) {
    std::ostringstream msg;
    msg << "Weyl group of " << rs.spec().name() << " has " << rs.weyl_order()
        << " elements, exceeding the enumeration cap " << cap;
    throw ResourceError(msg.str());
  }
  const int l = rs.rank();
  std::vector<WeylElement> out;
  out.reserve(rs.weyl_order());
  std::unordered_map<std::vector<int>, std::size_t, CoeffsHash> seen;
  seen.reserve(rs.weyl_order() * 2);
  out.push_back(WeylElement{IntMatrix::identity(l), {}});
  seen.emplace(out.back().matrix.data(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int g = 0; g < l; ++g) {
      IntMatrix next = out[head].matrix * rs.simple_reflection(g);
      if (seen.contains(next.data())) continue;
      if (out.size() >= cap)
        throw ResourceError("Weyl closure exceeded the enumeration cap " + std::to_string(cap));
      std::vector<int> word = out[head].word;
      word.push_back(g + 1);
      seen.emplace(next.data(), out.size());
      out.push_back(WeylElement{std::move(next), std::move(word)});
    }
  }
  if (out.size() != rs.weyl_order())
    throw InconsistencyError("Weyl closure size " + std::to_string(out.size()) +
                             " disagrees with the order formula " +
                             std::to_string(rs.weyl_order()));
  return out;
}

Coeffs weyl_act(const RootSystem& rs, const WeylElement& w, const Coeffs& v) {
  if (static_cast<int>(v.size()) != rs.rank() || !rs.find_root(v))
    throw ValidationError("weyl_act: input is not a root of " + rs.spec().name());
  return w.matrix.apply(v);
}

RootLength classify_length(const RootSystem& rs, const Coeffs& root) {
  return rs.inner(root, root) == 2 ? RootLength::Long : RootLength::Short;
}

bool poset_leq(const RootSystem& rs, const Coeffs& lower, const Coeffs& upper) {
  for (int i = 0; i < rs.rank(); ++i)
    if (upper[i] < lower[i]) return false;
  return true;
}

RootSubset RootSubset::from_indices(const RootSystem& rs, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= rs.num_positive_roots())
      throw ValidationError("root index " + std::to_string(indices[k]) + " out of range");
    if (k > 0 && indices[k] == indices[k - 1])
      throw ValidationError("duplicate root index " + std::to_string(indices[k]));
  }
  RootSubset s;
  s.indices_ = std::move(indices);
  return s;
}

RootSubset RootSubset::full(const RootSystem& rs) {
  RootSubset s;
  s.indices_.resize(rs.num_positive_roots());
  std::iota(s.indices_.begin(), s.indices_.end(), 0);
  return s;
}

bool RootSubset::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

RootSubset RootSubset::complement(const RootSystem& rs) const {
  RootSubset s;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (!contains(k)) s.indices_.push_back(k);
  return s;
}

std::vector<bool> RootSubset::mask(const RootSystem& rs) const {
  std::vector<bool> m(rs.num_positive_roots(), false);
  for (int k : indices_) m[k] = true;
  return m;
}

RootSubset lower_closure(const RootSystem& rs, const RootSubset& generators) {
  std::vector<int> out;
  const auto& roots = rs.positive_roots();
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    for (int g : generators.indices())
      if (poset_leq(rs, roots[k].coeffs, roots[g].coeffs)) {
        out.push_back(k);
        break;
      }
  return RootSubset::from_indices(rs, std::move(out));
}

bool is_ideal(const RootSystem& rs, const RootSubset& subset) {
  const auto& roots = rs.positive_roots();
  for (int k : subset.indices())
    for (int j = 0; j < rs.num_positive_roots(); ++j)
      if (!subset.contains(j) && poset_leq(rs, roots[j].coeffs, roots[k].coeffs)) return false;
  return true;
}

std::vector<RootSubset> enumerate_ideals(const RootSystem& rs) {
  const int n = rs.num_positive_roots();
  const auto& roots = rs.positive_roots();
  // below[k]: indices j != k with root j <= root k; all precede k in the
  // height-sorted order.
  std::vector<std::vector<int>> below(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      if (poset_leq(rs, roots[j].coeffs, roots[k].coeffs)) below[k].push_back(j);

  std::vector<std::vector<int>> found;
  std::vector<char> in(n, 0);
  std::vector<int> current;
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == n) {
      found.push_back(current);
      return;
    }
    self(self, k + 1);
    bool allowed = std::all_of(below[k].begin(), below[k].end(), [&](int j) { return in[j]; });
    if (allowed) {
      in[k] = 1;
      current.push_back(k);
      self(self, k + 1);
      current.pop_back();
      in[k] = 0;
    }
  };
  recurse(recurse, 0);

  std::vector<RootSubset> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(RootSubset::from_indices(rs, std::move(f)));
  std::sort(out.begin(), out.end());
  return out;
}

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t cap)
    : rs_(rs), elements_(enumerate_weyl(rs, cap)) {
  const int l = rs.rank();
  std::vector<Coeffs> base;
  for (int i = 0; i <= l; ++i) base.push_back(rs.extended_simple_root(i));
  images_.resize(elements_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    auto& row = images_[e];
    row.reserve(l + 1);
    for (int i = 0; i <= l; ++i) {
      auto r = rs.find_root(elements_[e].matrix.apply(base[i]));
      if (!r) throw InconsistencyError("Weyl element does not permute the roots");
      row.push_back(*r);
    }
  }
}

}  // namespace weylq
