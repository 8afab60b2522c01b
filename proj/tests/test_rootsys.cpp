#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "weylq/errors.hpp"

using namespace testing_support;

TEST_CASE("G2 positive roots, marks and invariants") {
  const auto rs = sys('G', 2);
  std::set<Coeffs> roots;
  for (const auto& r : rs.positive_roots()) roots.insert(r.coeffs);
  CHECK(roots == std::set<Coeffs>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK(rs.highest_root().coeffs == Coeffs{3, 2});
  CHECK(rs.marks() == std::vector<int>{3, 2});
  CHECK(rs.coxeter_number() == 6);
  CHECK(rs.index_of_connection() == 1);
  CHECK(rs.weyl_order() == 12);
}

TEST_CASE("A1 and A4 invariants") {
  const auto a1 = sys('A', 1);
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.coxeter_number() == 2);
  CHECK(a1.index_of_connection() == 2);
  CHECK(a1.marks() == std::vector<int>{1});

  const auto a4 = sys('A', 4);
  CHECK(a4.num_positive_roots() == 10);
  CHECK(a4.coxeter_number() == 5);
  CHECK(a4.index_of_connection() == 5);
  CHECK(a4.weyl_order() == 120);
}

TEST_CASE("invariants agree with orbit and elimination oracles") {
  for (auto [fam, rank] : small_types()) {
    CAPTURE(fam);
    CAPTURE(rank);
    const auto rs = sys(fam, rank);
    CHECK(rs.weyl_order() == oracle::weyl_order_by_orbit(rs.cartan()));
    CHECK(Rational(rs.index_of_connection()) == oracle::cartan_determinant(rs.cartan()));
    CHECK(rs.weyl_order() % rs.index_of_connection() == 0);
    CHECK(2 * rs.num_positive_roots() == rs.rank() * rs.coxeter_number());
    CHECK(rs.highest_root().coeffs == Coeffs(rs.marks().begin(), rs.marks().end()));
    // c_0 alpha_0 + sum c_i alpha_i = 0
    Coeffs sum = rs.extended_simple_root(0);
    for (int i = 1; i <= rs.rank(); ++i) sum[i - 1] += rs.marks()[i - 1];
    CHECK(sum == Coeffs(rs.rank(), 0));
    // Highest root is the unique maximum.
    for (const auto& r : rs.positive_roots())
      CHECK(poset_leq(rs, r.coeffs, rs.highest_root().coeffs));
  }
}

TEST_CASE("larger types build with expected data") {
  const auto e6 = sys('E', 6);
  CHECK(e6.weyl_order() == 51840);
  CHECK(e6.coxeter_number() == 12);
  CHECK(e6.index_of_connection() == 3);
  const auto f4 = sys('F', 4);
  CHECK(f4.weyl_order() == 1152);
  CHECK(f4.index_of_connection() == 1);
  const auto e8 = sys('E', 8);
  CHECK(e8.weyl_order() == 696729600ull);
  CHECK(e8.coxeter_number() == 30);
}

TEST_CASE("inadmissible ranks are rejected") {
  CHECK_THROWS_AS(sys('G', 3), ValidationError);
  CHECK_THROWS_AS(sys('B', 1), ValidationError);
  CHECK_THROWS_AS(sys('D', 2), ValidationError);
  CHECK_THROWS_AS(sys('E', 9), ValidationError);
  CHECK_THROWS_AS(sys('A', 0), ValidationError);
  CHECK_THROWS_AS(family_from_letter('H'), ValidationError);
}

TEST_CASE("Weyl enumeration sizes, order and closure") {
  const auto g2 = sys('G', 2);
  const auto w = enumerate_weyl(g2);
  REQUIRE(w.size() == 12);
  CHECK(w.front().matrix == IntMatrix::identity(2));
  CHECK(w.front().word_string() == "1");
  for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k - 1].word.size() <= w[k].word.size());

  CHECK(enumerate_weyl(sys('A', 1)).size() == 2);
  CHECK(enumerate_weyl(sys('D', 4)).size() == 192);

  for (auto [fam, rank] : small_types()) {
    const auto rs = sys(fam, rank);
    std::set<std::vector<int>> distinct;
    for (const auto& e : enumerate_weyl(rs)) {
      distinct.insert(e.matrix.data());
      // Matrix is the product of its word.
      IntMatrix m = IntMatrix::identity(rs.rank());
      for (int g : e.word) m = m * rs.simple_reflection(g - 1);
      CHECK(m == e.matrix);
      for (const auto& r : rs.positive_roots()) CHECK(rs.find_root(e.matrix.apply(r.coeffs)));
    }
    CHECK(distinct.size() == rs.weyl_order());
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_weyl(sys('G', 2), 11), ResourceError);
  CHECK_NOTHROW(enumerate_weyl(sys('G', 2), 12));
  CHECK_THROWS_AS(enumerate_weyl(sys('E', 7)), ResourceError);
  CHECK_THROWS_AS(WeylGroup(sys('E', 8)), ResourceError);
}

TEST_CASE("weyl_act") {
  const auto a1 = sys('A', 1);
  const auto w = enumerate_weyl(a1);
  CHECK(weyl_act(a1, w[0], {1}) == Coeffs{1});
  CHECK(weyl_act(a1, w[1], {1}) == Coeffs{-1});
  CHECK_THROWS_AS(weyl_act(a1, w[0], {2}), ValidationError);

  const auto g2 = sys('G', 2);
  const auto all = enumerate_weyl(g2);
  const auto it = std::find_if(all.begin(), all.end(),
                               [](const WeylElement& e) { return e.word_string() == "s2s1s2"; });
  REQUIRE(it != all.end());
  // Images of alpha_0, alpha_1, alpha_2 landing in -(Psi complement) for
  // Psi = Phi+ minus the highest root. The action is injective, so at most one
  // image can be the negated highest root; its mark carries the value 2.
  int hits = 0, marks = 0;
  const std::vector<int> ext{1, 3, 2};
  for (int i = 0; i <= 2; ++i) {
    const Coeffs img = weyl_act(g2, *it, g2.extended_simple_root(i));
    if (img == Coeffs{-3, -2}) {
      ++hits;
      marks += ext[i];
    }
  }
  CHECK(hits == 1);
  CHECK(marks == 2);
}

TEST_CASE("root lengths") {
  const auto g2 = sys('G', 2);
  CHECK(classify_length(g2, {1, 0}) == RootLength::Short);
  CHECK(classify_length(g2, {3, 2}) == RootLength::Long);
  CHECK(classify_length(g2, {0, 1}) == RootLength::Long);
  const auto a2 = sys('A', 2);
  for (const auto& r : a2.positive_roots()) CHECK(classify_length(a2, r.coeffs) == RootLength::Long);
  const auto b3 = sys('B', 3);
  CHECK(classify_length(b3, {0, 0, 1}) == RootLength::Short);
  CHECK(classify_length(b3, b3.highest_root().coeffs) == RootLength::Long);
}

TEST_CASE("root poset order") {
  const auto a2 = sys('A', 2);
  CHECK(poset_leq(a2, {1, 0}, {1, 1}));
  CHECK_FALSE(poset_leq(a2, {1, 0}, {0, 1}));
  CHECK(poset_leq(a2, {1, 0}, {1, 0}));
}

TEST_CASE("ideals match subset enumeration") {
  const auto g2 = sys('G', 2);
  CHECK(enumerate_ideals(g2).size() == 8);
  CHECK(enumerate_ideals(sys('A', 2)).size() == 5);
  CHECK_FALSE(is_ideal(g2, subset_of(g2, {{0, 1}, {3, 1}})));
  CHECK(lower_closure(g2, subset_of(g2, {{2, 1}})) ==
        subset_of(g2, {{1, 0}, {0, 1}, {1, 1}, {2, 1}}));

  for (auto [fam, rank] : small_types()) {
    CAPTURE(fam);
    CAPTURE(rank);
    const auto rs = sys(fam, rank);
    const auto ideals = enumerate_ideals(rs);
    std::set<std::set<Coeffs>> mine;
    for (const auto& i : ideals) {
      CHECK(is_ideal(rs, i));
      CHECK(lower_closure(rs, i) == i);
      mine.insert(oracle::coeff_set(rs, i));
    }
    const auto expected = oracle::ideals_by_subsets(rs);
    CHECK(mine == std::set<std::set<Coeffs>>(expected.begin(), expected.end()));
    CHECK(mine.size() == ideals.size());
    CHECK(ideals.front() == RootSubset::empty());
    CHECK(ideals.back() == RootSubset::full(rs));
  }
}

TEST_CASE("subset validation") {
  const auto g2 = sys('G', 2);
  CHECK_THROWS_AS(RootSubset::from_indices(g2, {0, 0}), ValidationError);
  CHECK_THROWS_AS(RootSubset::from_indices(g2, {6}), ValidationError);
  CHECK(RootSubset::full(g2).complement(g2) == RootSubset::empty());
}
