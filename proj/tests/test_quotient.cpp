#include <doctest.h>

#include "semiq/quotient.hpp"
#include "support.hpp"

using namespace semiq;
using test::numerical;
using test::wedge_cone;
using test::wedge_order;
using test::wedge_semigroup;

TEST_CASE("quotient on the gap representation") {
  CSemigroup s = wedge_semigroup();
  CHECK(equal(quotient_gaps(s, 1), s));
  CHECK(quotient_gaps(s, 3).gaps.empty());
  CHECK(quotient_gaps(s, 2).gaps.empty());
  CHECK_THROWS_AS(quotient_gaps(s, 0), precondition_error);

  CHECK(quotient_gaps(numerical({1, 2, 4, 7}), 2).gaps == std::vector<Point>{Point{1}, Point{2}});
}

TEST_CASE("quotient via the generator algorithm") {
  GeneratedSemigroup n23 = make_generated({Point{2}, Point{3}}, make_order(OrderKind::GradedLex, 1));
  CHECK(quotient_generated(n23, 2) == std::vector<Point>{Point{1}});
  CHECK(quotient_generated(n23, 1) == std::vector<Point>{Point{2}, Point{3}});

  GeneratedSemigroup w = make_generated(test::wedge_generators(), wedge_order());
  std::vector<Point> q3 = quotient_generated(w, 3);
  std::vector<Point> cone_gens = cone_hilbert_basis(wedge_cone());
  sort_points(wedge_order(), cone_gens);
  CHECK(q3 == cone_gens);
}

TEST_CASE("quotient routes agree on random instances") {
  test::Rng rng(3);
  for (int it = 0; it < 8; ++it) {
    CSemigroup s = test::random_csemigroup(rng, 6);
    GeneratedSemigroup g = make_generated(minimal_generators(s), s.order);
    for (Int d : {2, 3}) {
      CSemigroup via_gaps = quotient_gaps(s, d);
      std::vector<Point> expected = minimal_generators(via_gaps);
      CHECK(quotient_generated(g, d) == expected);
    }
  }
}

TEST_CASE("quotients form a chain") {
  test::Rng rng(13);
  for (int it = 0; it < 8; ++it) {
    CSemigroup s = test::random_csemigroup(rng, 8);
    CSemigroup s2 = quotient_gaps(s, 2);
    CSemigroup s4 = quotient_gaps(s, 4);
    for (const Point& x : cone_points_in_box(s.cone, Point{10, 10}, s.order)) {
      if (member(s, x)) CHECK(member(s2, x));
      if (member(s2, x)) {
        // S/2 inside (S/2)/2 = S/4
        CHECK(member(s4, x) == member(quotient_gaps(s2, 2), x));
        CHECK(member(quotient_gaps(s2, 2), x));
      }
    }
  }
}

TEST_CASE("halving the Frobenius element") {
  test::Rng rng(19);
  int tested = 0;
  for (int it = 0; it < 60 && tested < 10; ++it) {
    CSemigroup s = test::random_csemigroup(rng, 8);
    auto fb = frobenius(s);
    if (!fb || !all_even(*fb)) continue;
    ++tested;
    CSemigroup half = quotient_gaps(s, 2);
    REQUIRE(frobenius(half).has_value());
    CHECK(*frobenius(half) == div_exact(*fb, 2));
  }
  CHECK(tested > 0);
}

TEST_CASE("fundamental gap transfer") {
  CSemigroup s = wedge_semigroup();
  CHECK(fundamental_gap_transfer(fundamental_gaps(s), 2).empty());
  CHECK(fundamental_gap_transfer(fundamental_gaps(s), 1) == fundamental_gaps(s));

  test::Rng rng(43);
  for (int it = 0; it < 12; ++it) {
    CSemigroup inst = test::random_csemigroup(rng, 8);
    for (Int d : {2, 3, 4}) {
      CHECK(fundamental_gap_transfer(fundamental_gaps(inst), d) ==
            fundamental_gaps(quotient_gaps(inst, d)));
    }
  }
}

TEST_CASE("Apery transfer") {
  CSemigroup s = wedge_semigroup();
  Point m{6, 3};
  REQUIRE(member(s, m));
  CHECK(apery_transfer(apery(s, m), m, 1) == apery(s, m));
  CHECK(apery_transfer(apery(s, m), m, 3) == apery(quotient_gaps(s, 3), Point{2, 1}));
  CHECK_THROWS_AS(apery_transfer(apery(s, m), m, 2), precondition_error);  // 2 does not divide m

  test::Rng rng(47);
  int pairs = 0;
  for (int it = 0; it < 20; ++it) {
    CSemigroup inst = test::random_csemigroup(rng, 8);
    for (Int d : {2, 3}) {
      for (const Point& y : cone_points_in_box(inst.cone, Point{8, 8}, inst.order)) {
        Point m2 = scale(y, d);
        if (is_zero(m2) || !member(inst, m2)) continue;
        CSemigroup q = quotient_gaps(inst, d);
        CHECK(apery_transfer(apery(inst, m2), m2, d) == apery(q, y));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 20);
}
