#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "semiq/semigroup.hpp"

namespace semiq {

/// Elements of S below f in the order with some coordinate not divisible by
/// d; the seed pool for cover construction. Sorted ascending.
std::vector<Point> cover_candidates(const CSemigroup& s, Int d, const Point& f);

/// A subset lambda of the candidate pool is admissible when every coefficient
/// combination with coefficients in [0, d-1] either has a coordinate not
/// divisible by d or divides down into S. Admissibility is downward closed.
bool is_admissible(const CSemigroup& s, Int d, const std::vector<Point>& lambda);

/// The d-fold cover determined by (f, lambda): everything above f together
/// with d*S shifted by all coefficient combinations of lambda. Validates the
/// result and checks the quotient postcondition; both failures throw.
CSemigroup build_cover(const CSemigroup& s, Int d, const Point& f, const std::vector<Point>& lambda);

struct CoverEnumeration {
  std::vector<CSemigroup> covers;        // distinct, sorted by gap sequence
  std::size_t admissible_subsets = 0;    // admissible lambdas inspected (incl. empty)
  std::size_t subset_bound = 0;          // 2^(candidate pool size)
};

/// All distinct covers T with T/d = S and Fb(T) preceding-or-equal f.
/// Requires f at or above d*Fb(S) in the order.
CoverEnumeration enumerate_covers(const CSemigroup& s, Int d, const Point& f);

struct CoverTree {
  Cone cone;
  OrderSpec order;
  Int d = 2;
  Point f;
  std::vector<CSemigroup> vertices;  // breadth-first, root first
  std::size_t root = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // parent -> child
};

using VarietyPredicate = std::function<bool(const CSemigroup&)>;

/// Breadth-first tree over {S : Fb(S) <= f} within a variety: the children of
/// S are its covers inside the window, every vertex reaches the root (the
/// full cone) by repeated quotients.
CoverTree build_cover_tree(const Cone& cone, const OrderSpec& order, Int d, const Point& f,
                           const VarietyPredicate& variety = {});

std::string tree_to_dot(const CoverTree& t);

}  // namespace semiq
