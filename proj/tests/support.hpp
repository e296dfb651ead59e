#pragma once

#include <random>
#include <vector>

#include "semiq/quotient.hpp"
#include "semiq/semigroup.hpp"

namespace semiq::test {

// The 2D wedge between the rays (4,1) and (9,5), used across the suite.
inline Cone wedge_cone() { return make_cone(2, {Point{4, 1}, Point{9, 5}}); }

inline OrderSpec wedge_order() { return make_order(OrderKind::GradedRevCoordLex, 2); }

// The wedge minus the two smallest nonzero points; its minimal generating
// set has nine elements.
inline CSemigroup wedge_semigroup() {
  return make_semigroup(wedge_cone(), wedge_order(), {Point{2, 1}, Point{3, 1}});
}

inline std::vector<Point> wedge_generators() {
  return {Point{4, 1}, Point{5, 2}, Point{7, 2}, Point{9, 5}, Point{4, 2},
          Point{6, 2}, Point{6, 3}, Point{7, 3}, Point{11, 6}};
}

// A numerical semigroup (p = 1) from its gap list.
inline CSemigroup numerical(std::vector<Int> gaps) {
  std::vector<Point> pts;
  for (Int g : gaps) pts.push_back(Point{g});
  return make_semigroup(make_cone(1, {Point{1}}), make_order(OrderKind::GradedLex, 1),
                        std::move(pts));
}

using Rng = std::mt19937_64;

inline Int pick(Rng& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Cone random_cone2(Rng& rng) {
  static const std::vector<std::pair<Point, Point>> pool = {
      {Point{1, 0}, Point{0, 1}}, {Point{2, 1}, Point{1, 2}}, {Point{3, 1}, Point{1, 1}},
      {Point{4, 1}, Point{9, 5}}, {Point{1, 0}, Point{1, 2}}, {Point{5, 2}, Point{2, 3}},
  };
  const auto& rays = pool[rng() % pool.size()];
  return make_cone(2, {rays.first, rays.second});
}

// Random valid C-semigroup: pick gap candidates among the smallest nonzero
// cone points, then repeatedly un-gap sums of two semigroup elements until
// the complement is closed.
inline CSemigroup random_csemigroup(Rng& rng, int max_gaps = 10) {
  Cone cone = random_cone2(rng);
  OrderSpec order = make_order(OrderKind::GradedRevCoordLex, 2);
  std::vector<Point> small;
  for (Int bound = 6; static_cast<int>(small.size()) < 14; bound += 4) {
    small.clear();
    for (const Point& x : cone_points_in_box(cone, Point{bound, bound}, order)) {
      if (!is_zero(x)) small.push_back(x);
      if (small.size() >= 14) break;
    }
  }
  std::vector<Point> gaps;
  for (const Point& x : small) {
    if (static_cast<int>(gaps.size()) < max_gaps && rng() % 2 == 0) gaps.push_back(x);
  }
  for (;;) {
    auto v = find_violation(cone, gaps);
    if (!v) break;
    std::erase(gaps, v->gap);
  }
  return make_semigroup(std::move(cone), std::move(order), std::move(gaps));
}

}  // namespace semiq::test
