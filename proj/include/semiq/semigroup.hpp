#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "semiq/cone.hpp"
#include "semiq/order.hpp"
#include "semiq/point.hpp"

namespace semiq {

/// Canonical representation of a C-semigroup: the ambient cone, the finite
/// gap set and the active total order. Gaps are kept sorted ascending under
/// the order; values are immutable after construction.
struct CSemigroup {
  Cone cone;
  OrderSpec order;
  std::vector<Point> gaps;
  std::unordered_set<Point, PointHash> gap_index;

  friend bool operator==(const CSemigroup& a, const CSemigroup& b) {
    return a.cone == b.cone && a.order == b.order && a.gaps == b.gaps;
  }
};

/// Affine semigroup given by a finite list of nonzero generators.
struct GeneratedSemigroup {
  std::vector<Point> generators;
  OrderSpec order;
};

struct SemigroupViolation {
  enum class Kind { ZeroGap, GapOutsideCone, NotClosed };
  Kind kind = Kind::NotClosed;
  Point gap;
  // For NotClosed: two nonzero semigroup elements whose sum is `gap`.
  Point left, right;
};

/// ok (nullopt) iff cone \ gaps is a C-semigroup; otherwise a witness.
std::optional<SemigroupViolation> find_violation(const Cone& cone, const std::vector<Point>& gaps);

/// Builds the canonical form (sorted, deduplicated gaps). With check=true the
/// gap set is validated and a violation throws precondition_error.
CSemigroup make_semigroup(Cone cone, OrderSpec order, std::vector<Point> gaps, bool check = true);

GeneratedSemigroup make_generated(std::vector<Point> generators, OrderSpec order);

bool member(const CSemigroup& s, const Point& x);
bool member(const GeneratedSemigroup& g, const Point& x);

struct ConversionLimits {
  int max_rounds = 64;            // window extensions
  Int max_ray_multiple = 4096;    // search limit for the least k with k*n_i inside
  Int max_grade = 1u << 20;       // hard stop on window growth
};

/// Converts a generated semigroup to gap form. The window grows until the
/// whole order interval (max gap, max gap + sum_i k_i n_i] lies inside the
/// generated monoid, which certifies that no further gaps exist; the guard
/// ceiling fires when the complement is not finite.
CSemigroup gaps_from_generators(const GeneratedSemigroup& g, const ConversionLimits& limits = {});

/// The unique minimal generating set.
std::vector<Point> minimal_generators(const CSemigroup& s);

Int genus(const CSemigroup& s);
std::optional<Point> frobenius(const CSemigroup& s);
std::vector<Point> pseudo_frobenius(const CSemigroup& s);

/// Apery set {x in S : x - m is a gap} = (m + gaps) .. S.
std::vector<Point> apery(const CSemigroup& s, const Point& m);

/// Classical variant {x in S : x - m not in S}, which is infinite for p >= 2;
/// enumerated over the order ideal below `bound`.
std::vector<Point> apery_classical(const CSemigroup& s, const Point& m, const Point& bound);

/// Gaps x with 2x and 3x both in S.
std::vector<Point> fundamental_gaps(const CSemigroup& s);

/// Requires identical cones and orders; gap set is the union.
CSemigroup intersect(const CSemigroup& a, const CSemigroup& b);

/// Equality of canonical forms.
bool equal(const CSemigroup& a, const CSemigroup& b);

}  // namespace semiq
