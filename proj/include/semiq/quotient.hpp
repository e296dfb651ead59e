#pragma once

#include <vector>

#include "semiq/semigroup.hpp"

namespace semiq {

/// S/d on the gap representation: the cone is unchanged and the gaps are
/// exactly {h/d : h gap of S, h divisible by d componentwise}.
CSemigroup quotient_gaps(const CSemigroup& s, Int d);

/// Minimal generating set of S/d via the homogeneous system (M | -d I):
/// Hilbert basis, projection onto the last p coordinates, reduction.
std::vector<Point> quotient_generated(const GeneratedSemigroup& g, Int d);

/// {h/d : h in FG(S), h divisible by d}; coincides with the fundamental gaps
/// of S/d.
std::vector<Point> fundamental_gap_transfer(const std::vector<Point>& fg, Int d);

/// {w/d : w in Ap(S, m), w divisible by d}; coincides with Ap(S/d, m/d) when
/// d divides m.
std::vector<Point> apery_transfer(const std::vector<Point>& ap, const Point& m, Int d);

}  // namespace semiq
