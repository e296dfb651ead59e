#pragma once

#include <vector>

#include "semiq/order.hpp"
#include "semiq/point.hpp"

namespace semiq {

/// A finitely generated rational cone inside N^p, described by its primitive
/// extremal-ray generators. Construction normalizes the ray list: rays are
/// made primitive, deduplicated, reduced to the extremal ones and sorted.
struct Cone {
  int dim = 0;
  std::vector<Point> rays;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim == b.dim && a.rays == b.rays;
  }
};

Cone make_cone(int dim, std::vector<Point> rays);

/// Exact rational membership: x is a nonnegative rational combination of the
/// rays. Dimensions 1 and 2 use sign tests, the general case an exact LP.
bool cone_contains(const Cone& c, const Point& x);

/// Minimal generating set of the monoid C .. N^p. Every minimal generator
/// lies inside box(0, sum of rays), so a box enumeration plus reduction is
/// complete.
std::vector<Point> cone_hilbert_basis(const Cone& c);

/// All cone points x with x <= hi componentwise, sorted under `ord`.
std::vector<Point> cone_points_in_box(const Cone& c, const Point& hi, const OrderSpec& ord);

/// All cone points x with x preceding `bound` in the order (inclusive),
/// sorted ascending. Throws guard_error when this set is infinite (lex order
/// with a ray that is zero in the leading coordinate) or absurdly large.
std::vector<Point> cone_points_leq(const Cone& c, const OrderSpec& ord, const Point& bound);

Point primitive(const Point& p);

}  // namespace semiq
