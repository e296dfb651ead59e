#pragma once

#include <vector>

#include "semiq/hilbert.hpp"
#include "semiq/semigroup.hpp"

namespace semiq {
namespace oracle {

/// Exhaustive decomposition search with multiplicities bounded componentwise
/// by x. Independent of monoid_member.
bool brute_member(const std::vector<Point>& gens, const Point& x);

/// All nonzero solutions of the system inside box(0, box), reduced to the
/// componentwise-minimal ones. Because boxes are downward closed this equals
/// the globally minimal solution set intersected with the box.
std::vector<Point> brute_hilbert(const DiophantineSystem& sys, const Point& box);

/// Every C-semigroup T with gaps inside {x in C : x <= f} and T/d = S, found
/// by direct subset search. Guarded to small candidate windows.
std::vector<CSemigroup> brute_covers(const CSemigroup& s, Int d, const Point& f);

}  // namespace oracle
}  // namespace semiq
