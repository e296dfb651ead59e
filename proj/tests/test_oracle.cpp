#include <doctest.h>

#include "semiq/oracle.hpp"
#include "semiq/quotient.hpp"
#include "support.hpp"

using namespace semiq;
using test::numerical;

TEST_CASE("brute membership") {
  CHECK(!oracle::brute_member({Point{2}, Point{3}}, Point{1}));
  CHECK(oracle::brute_member(test::wedge_generators(), Point{9, 3}));
  CHECK_THROWS_AS(oracle::brute_member({Point{0}}, Point{2}), precondition_error);

  test::Rng rng(101);
  for (int it = 0; it < 10; ++it) {
    CSemigroup s = test::random_csemigroup(rng, 6);
    GeneratedSemigroup g = make_generated(minimal_generators(s), s.order);
    for (int k = 0; k < 100; ++k) {
      Point x{test::pick(rng, 0, 15), test::pick(rng, 0, 15)};
      CHECK(oracle::brute_member(g.generators, x) == member(g, x));
    }
  }
}

TEST_CASE("brute Hilbert solutions in a box") {
  CHECK(oracle::brute_hilbert(make_system({{1, -2}}), Point{4, 4}) ==
        std::vector<Point>{Point{2, 1}});
  CHECK(oracle::brute_hilbert(make_system({{1, 1, -1}}), Point{3, 3, 3}) ==
        std::vector<Point>{Point{0, 1, 1}, Point{1, 0, 1}});
}

TEST_CASE("brute cover search") {
  CSemigroup line = numerical({});
  std::vector<CSemigroup> covers = oracle::brute_covers(line, 2, Point{3});
  // T/2 = N forces gaps among odd numbers <= 3 only.
  REQUIRE(covers.size() == 4);
  for (const CSemigroup& t : covers) {
    CHECK(equal(quotient_gaps(t, 2), line));
    for (const Point& g : t.gaps) CHECK(g[0] % 2 == 1);
  }

  std::vector<CSemigroup> identity = oracle::brute_covers(numerical({1, 2}), 1, Point{4});
  REQUIRE(identity.size() == 1);
  CHECK(equal(identity[0], numerical({1, 2})));

  CHECK_THROWS_AS(oracle::brute_covers(line, 2, Point{40}), guard_error);
}
