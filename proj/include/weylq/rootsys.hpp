#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace weylq {

using Rational = mpq_class;

// Coordinates of a vector of the root lattice in the simple-root basis.
using Coeffs = std::vector<int>;

struct CoeffsHash {
  std::size_t operator()(const Coeffs& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);  // throws ValidationError

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // e.g. "G2"
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

// Throws ValidationError naming the violated rank constraint.
void validate(const RootSystemSpec& spec);

struct Root {
  Coeffs coeffs;
  int height() const;
};

// Dense square integer matrix acting on column vectors of Coeffs.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const { return n_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<int>& data() const { return a_; }

  Coeffs apply(const Coeffs& v) const;
  Coeffs column(int j) const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

// Bareiss fraction-free determinant.
std::int64_t determinant(const IntMatrix& m);

enum class RootLength { Long, Short };

// A root of the full system, referenced as ±(positive root index).
struct SignedRoot {
  int index = -1;
  int sign = 1;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }

  // cartan(i, j) = <alpha_i, alpha_j^vee> (Bourbaki convention).
  const IntMatrix& cartan() const { return cartan_; }
  // Simple-root inner products; long roots have squared length 2.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  int highest_root_index() const { return highest_; }
  const Root& highest_root() const { return positive_[highest_]; }

  // c_1..c_l
  const std::vector<int>& marks() const { return marks_; }
  // c_0..c_l with c_0 = 1.
  std::vector<int> extended_marks() const;
  int coxeter_number() const { return coxeter_; }
  int index_of_connection() const { return connection_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  // N = #W / f, the number of alcoves in the fundamental parallelepiped.
  std::uint64_t alcove_count() const { return weyl_order_ / connection_; }

  // alpha_0 = -(highest root) for i = 0, alpha_i otherwise.
  Coeffs extended_simple_root(int i) const;
  const IntMatrix& simple_reflection(int i) const { return reflections_[i]; }

  std::optional<SignedRoot> find_root(const Coeffs& v) const;
  std::optional<int> find_positive(const Coeffs& v) const;
  Coeffs signed_coeffs(SignedRoot r) const;

  Rational inner(const Coeffs& x, const Coeffs& y) const;

 private:
  friend RootSystem build_root_system(const RootSystemSpec& spec);

  RootSystemSpec spec_;
  IntMatrix cartan_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Root> positive_;
  std::unordered_map<Coeffs, int, CoeffsHash> index_of_;
  int highest_ = -1;
  std::vector<int> marks_;
  int coxeter_ = 0;
  int connection_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::vector<IntMatrix> reflections_;
};

RootSystem build_root_system(const RootSystemSpec& spec);

struct WeylElement {
  IntMatrix matrix;
  // Generator word (1-based simple reflections) found by the enumeration;
  // the matrix is the product in that order.
  std::vector<int> word;

  std::string word_string() const;  // "1" for the identity, "s2s1s2" otherwise
};

inline constexpr std::uint64_t kDefaultWeylCap = 2'000'000;

// Breadth-first closure over simple reflections: identity first, then by word
// length, ties broken by discovery order (lexicographic on generator words).
// Throws ResourceError when #W exceeds cap.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                        std::uint64_t cap = kDefaultWeylCap);

// Action on a root given by coefficients; throws ValidationError if v is not
// a root.
Coeffs weyl_act(const RootSystem& rs, const WeylElement& w, const Coeffs& v);

RootLength classify_length(const RootSystem& rs, const Coeffs& root);

// True iff upper - lower is a nonnegative combination of simple roots.
bool poset_leq(const RootSystem& rs, const Coeffs& lower, const Coeffs& upper);

class RootSubset {
 public:
  RootSubset() = default;
  // Throws ValidationError on out-of-range or duplicate indices.
  static RootSubset from_indices(const RootSystem& rs, std::vector<int> indices);
  static RootSubset full(const RootSystem& rs);
  static RootSubset empty() { return {}; }

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int index) const;
  RootSubset complement(const RootSystem& rs) const;
  std::vector<bool> mask(const RootSystem& rs) const;

  friend bool operator==(const RootSubset&, const RootSubset&) = default;
  friend auto operator<=>(const RootSubset& a, const RootSubset& b) {
    if (a.indices_.size() != b.indices_.size())
      return a.indices_.size() <=> b.indices_.size();
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<int> indices_;
};

RootSubset lower_closure(const RootSystem& rs, const RootSubset& generators);
bool is_ideal(const RootSystem& rs, const RootSubset& subset);
// All lower sets of the root poset, ordered by size then by index list.
std::vector<RootSubset> enumerate_ideals(const RootSystem& rs);

// Weyl group together with the images of the extended base alpha_0..alpha_l
// under each element; the image table is what every descent statistic reads.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // images(e)[i] = w_e(alpha_i), i = 0..l.
  const std::vector<SignedRoot>& images(std::size_t e) const { return images_[e]; }

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<SignedRoot>> images_;
};

}  // namespace weylq
