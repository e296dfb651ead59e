#include "semiq/semigroup.hpp"

#include <algorithm>
#include <string>

#include "semiq/hilbert.hpp"

namespace semiq {

std::optional<SemigroupViolation> find_violation(const Cone& cone,
                                                 const std::vector<Point>& gaps) {
  std::unordered_set<Point, PointHash> gap_index(gaps.begin(), gaps.end());
  auto in_s = [&](const Point& x) { return cone_contains(cone, x) && !gap_index.count(x); };

  for (const Point& h : gaps) {
    if (h.dim() != cone.dim) throw precondition_error("gap dimension mismatch");
    SemigroupViolation v;
    v.gap = h;
    if (is_zero(h)) {
      v.kind = SemigroupViolation::Kind::ZeroGap;
      return v;
    }
    if (!cone_contains(cone, h)) {
      v.kind = SemigroupViolation::Kind::GapOutsideCone;
      return v;
    }
  }
  // Closure: no gap may be the sum of two nonzero semigroup elements. Both
  // summands are componentwise below the gap, so a box scan is complete.
  OrderSpec canon = make_order(OrderKind::GradedLex, cone.dim);
  for (const Point& h : gaps) {
    for (const Point& u : cone_points_in_box(cone, h, canon)) {
      if (is_zero(u) || gap_index.count(u)) continue;
      auto rest = sub_checked(h, u);
      if (!rest || is_zero(*rest)) continue;
      if (in_s(*rest)) {
        SemigroupViolation v;
        v.kind = SemigroupViolation::Kind::NotClosed;
        v.gap = h;
        v.left = u;
        v.right = *rest;
        return v;
      }
    }
  }
  return std::nullopt;
}

CSemigroup make_semigroup(Cone cone, OrderSpec order, std::vector<Point> gaps, bool check) {
  validate_order(order, cone.dim);
  if (check) {
    if (auto v = find_violation(cone, gaps)) {
      std::string what;
      switch (v->kind) {
        case SemigroupViolation::Kind::ZeroGap: what = "zero listed as a gap"; break;
        case SemigroupViolation::Kind::GapOutsideCone: what = "gap outside the cone"; break;
        case SemigroupViolation::Kind::NotClosed: what = "complement not closed under addition"; break;
      }
      throw precondition_error("invalid C-semigroup: " + what);
    }
  }
  sort_points(order, gaps);
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  CSemigroup s;
  s.cone = std::move(cone);
  s.order = std::move(order);
  s.gap_index.insert(gaps.begin(), gaps.end());
  s.gaps = std::move(gaps);
  return s;
}

GeneratedSemigroup make_generated(std::vector<Point> generators, OrderSpec order) {
  if (generators.empty()) throw schema_error("generator list must be nonempty");
  const int dim = generators[0].dim();
  validate_order(order, dim);
  for (const Point& g : generators) {
    if (g.dim() != dim) throw schema_error("generator dimension mismatch");
    require_nonnegative(g, "generator");
    if (is_zero(g)) throw schema_error("generators must be nonzero");
  }
  sort_points(order, generators);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return GeneratedSemigroup{std::move(generators), std::move(order)};
}

bool member(const CSemigroup& s, const Point& x) {
  if (x.dim() != s.cone.dim) throw precondition_error("member: dimension mismatch");
  return cone_contains(s.cone, x) && !s.gap_index.count(x);
}

bool member(const GeneratedSemigroup& g, const Point& x) {
  return monoid_member(g.generators, x);
}

CSemigroup gaps_from_generators(const GeneratedSemigroup& g, const ConversionLimits& limits) {
  const int dim = g.generators[0].dim();
  Cone cone = make_cone(dim, g.generators);
  std::vector<Point> basis = cone_hilbert_basis(cone);

  // Least positive multiple of each cone generator inside the monoid.
  Point window_step = zero_point(dim);
  for (const Point& n : basis) {
    Int k = 1;
    while (!monoid_member(g.generators, scale(n, k))) {
      if (++k > limits.max_ray_multiple) {
        throw guard_error("gaps_from_generators: no multiple of a cone generator lies in the monoid");
      }
    }
    window_step = add(window_step, scale(n, k));
  }

  // Membership of a cone point only depends on smaller cone points, so one
  // shared table serves the whole scan: x is in the monoid iff x = 0 or
  // x - a is for some generator a.
  std::unordered_set<Point, PointHash> members;
  auto in_monoid = [&](const Point& x) {
    if (is_zero(x)) return true;
    for (const Point& a : g.generators) {
      auto rest = sub_checked(x, a);
      if (rest && (is_zero(*rest) || members.count(*rest))) return true;
    }
    return false;
  };

  // Grow the scan window until (max gap, max gap + window_step] is gap-free;
  // an inductive decomposition argument then certifies completeness.
  Point bound = window_step;
  std::vector<Point> gaps;
  std::size_t processed = 0;
  for (int round = 0;; ++round) {
    if (round >= limits.max_rounds || grade(bound) > limits.max_grade) {
      throw guard_error("gaps_from_generators: window ceiling reached; complement may be infinite");
    }
    // Enlarging the bound only appends to the ascending point list, so the
    // processed prefix stays valid.
    std::vector<Point> pts = cone_points_leq(cone, g.order, bound);
    for (; processed < pts.size(); ++processed) {
      const Point& x = pts[processed];
      if (in_monoid(x)) {
        members.insert(x);
      } else {
        gaps.push_back(x);
      }
    }
    if (gaps.empty()) break;
    Point next = add(gaps.back(), window_step);  // gaps sorted ascending
    if (order_leq(g.order, next, bound)) break;
    bound = next;
  }
  return make_semigroup(std::move(cone), g.order, std::move(gaps), /*check=*/false);
}

std::vector<Point> minimal_generators(const CSemigroup& s) {
  std::vector<Point> basis = cone_hilbert_basis(s.cone);
  if (s.gaps.empty()) {
    sort_points(s.order, basis);
    return basis;
  }
  const Point fb = s.gaps.back();

  // Candidate window: beyond Fb + sum_i k_i n_i every element splits off some
  // k_i n_i with a remainder still in S, so no minimal generator lives there.
  Point bound = fb;
  for (const Point& n : basis) {
    Int k = 1;
    while (!member(s, scale(n, k))) ++k;
    bound = add(bound, scale(n, k));
  }

  std::vector<Point> gens;
  std::vector<Point> candidates = cone_points_leq(s.cone, s.order, bound);
  for (const Point& x : candidates) {
    if (is_zero(x) || !member(s, x)) continue;
    bool decomposable = false;
    for (const Point& u : candidates) {
      if (is_zero(u) || !member(s, u)) continue;
      if (order_leq(s.order, x, u)) break;  // candidates ascending; u < x needed
      auto rest = sub_checked(x, u);
      if (!rest || is_zero(*rest)) continue;
      if (member(s, *rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

Int genus(const CSemigroup& s) { return static_cast<Int>(s.gaps.size()); }

std::optional<Point> frobenius(const CSemigroup& s) {
  if (s.gaps.empty()) return std::nullopt;
  return s.gaps.back();
}

std::vector<Point> pseudo_frobenius(const CSemigroup& s) {
  if (s.gaps.empty()) return {};
  std::vector<Point> gens = minimal_generators(s);
  std::vector<Point> pf;
  for (const Point& h : s.gaps) {
    bool ok = true;
    for (const Point& a : gens) {
      if (!member(s, add(h, a))) {
        ok = false;
        break;
      }
    }
    if (ok) pf.push_back(h);
  }
  return pf;
}

std::vector<Point> apery(const CSemigroup& s, const Point& m) {
  if (is_zero(m) || !member(s, m)) {
    throw precondition_error("apery: m must be a nonzero element of the semigroup");
  }
  std::vector<Point> out;
  for (const Point& h : s.gaps) {
    Point x = add(m, h);
    if (member(s, x)) out.push_back(x);
  }
  sort_points(s.order, out);
  return out;
}

std::vector<Point> apery_classical(const CSemigroup& s, const Point& m, const Point& bound) {
  if (is_zero(m) || !member(s, m)) {
    throw precondition_error("apery: m must be a nonzero element of the semigroup");
  }
  std::vector<Point> out;
  for (const Point& x : cone_points_leq(s.cone, s.order, bound)) {
    if (!member(s, x)) continue;
    auto diff = sub_checked(x, m);
    bool diff_in_s = diff && cone_contains(s.cone, *diff) && !s.gap_index.count(*diff);
    if (!diff_in_s) out.push_back(x);
  }
  return out;
}

std::vector<Point> fundamental_gaps(const CSemigroup& s) {
  std::vector<Point> out;
  for (const Point& h : s.gaps) {
    if (member(s, scale(h, 2)) && member(s, scale(h, 3))) out.push_back(h);
  }
  return out;
}

CSemigroup intersect(const CSemigroup& a, const CSemigroup& b) {
  if (!(a.cone == b.cone) || !(a.order == b.order)) {
    throw precondition_error("intersect: cones and orders must coincide");
  }
  std::vector<Point> gaps = a.gaps;
  gaps.insert(gaps.end(), b.gaps.begin(), b.gaps.end());
  return make_semigroup(a.cone, a.order, std::move(gaps), /*check=*/false);
}

bool equal(const CSemigroup& a, const CSemigroup& b) { return a == b; }

}  // namespace semiq
