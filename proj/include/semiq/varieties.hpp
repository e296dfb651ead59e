#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "semiq/cone.hpp"
#include "semiq/rational.hpp"
#include "semiq/semigroup.hpp"

namespace semiq {

/// System of modular Diophantine inequalities A x mod b <= G x. Row i of A is
/// kept reduced modulo b_i.
struct ModularSystem {
  std::vector<std::vector<Int>> A;  // k x p, entries in [0, b_i - 1]
  std::vector<std::vector<Int>> G;  // k x p, any integers
  std::vector<Int> b;               // k positive moduli
};

ModularSystem make_modular_system(std::vector<std::vector<Int>> A,
                                  std::vector<std::vector<Int>> G, std::vector<Int> b);

bool pm_member(const ModularSystem& sys, const Point& x);

/// Member-equivalent to x -> pm_member(sys, d*x).
ModularSystem pm_quotient(const ModularSystem& sys, Int d);

/// Member-equivalent to the conjunction; stacks the rows.
ModularSystem pm_intersect(const ModularSystem& a, const ModularSystem& b);

using MembershipFn = std::function<bool(const Point&)>;

MembershipFn membership_of(const CSemigroup& s);
MembershipFn membership_of(const ModularSystem& sys);

struct ArfCounterexample {
  Point x, y, z;  // x >= y >= z in S with x + y - z outside
};

/// Scans S .. box(0, window) for x >= y >= z with x + y - z outside S.
/// ok (nullopt) refutes nothing beyond the window.
std::optional<ArfCounterexample> arf_check(const MembershipFn& s, const Point& window);

struct SaturatedCounterexample {
  Point base;                 // s
  std::vector<Point> terms;   // s_1 .. s_r, each <= s
  std::vector<Int> coeffs;    // z_1 .. z_r
  Point value;                // s + sum z_i s_i, outside S
};

/// Bounded refuter for saturation: combinations of at most two smaller
/// elements with integer coefficients in [-coeff_bound, coeff_bound] whose sum
/// stays in N^p must land back in S.
std::optional<SaturatedCounterexample> saturated_check(const MembershipFn& s, const Point& window,
                                                       Int coeff_bound);

struct CmCounterexample {
  Point a, b;
  int i = 0, j = 0;  // ray indices with a + n_i = b + n_j but a - n_j outside S
};

/// Window check of the Cohen-Macaulay criterion for simplicial semigroups:
/// a + n_i = b + n_j (i != j) forces a - n_j = b - n_i in S.
std::optional<CmCounterexample> cm_check(const MembershipFn& s, const Cone& cone,
                                         const std::vector<Point>& ray_elements,
                                         const Point& window);

/// Least positive multiple of each extremal ray inside the semigroup; the
/// default ray elements for cm_check.
std::vector<Point> smallest_ray_multiples(const MembershipFn& s, const Cone& cone,
                                          Int ceiling = 4096);

/// Rational polytope by vertex list (convex hull implied). All coordinates
/// must be nonnegative.
struct RationalPolytope {
  std::vector<std::vector<Rat>> vertices;
};

RationalPolytope make_polytope(std::vector<std::vector<Rat>> vertices);

RationalPolytope scale_polytope(const RationalPolytope& f, const Rat& factor);

/// x belongs to the union of integer points of the dilates iF, i = 0, 1, ...
/// The feasible scales t with x in tF form an exact rational interval
/// computed by linear programming; membership asks for an integer in it.
bool convex_member(const RationalPolytope& f, const Point& x);

struct ConvexMismatch {
  Point x;
  bool in_quotient = false;  // membership of d*x in B(F)
  bool in_scaled = false;    // membership of x in B(F/d)
};

/// Verifies pointwise on box(0, window) that B(F)/d and B(F/d) have the same
/// integer points.
std::optional<ConvexMismatch> convex_quotient_equal(const RationalPolytope& f, Int d,
                                                    const Point& window);

}  // namespace semiq
