#include "semiq/cone.hpp"

#include <algorithm>
#include <numeric>

#include "semiq/lp.hpp"

namespace semiq {

namespace {

Int coord_gcd(const Point& p) {
  Int g = 0;
  for (Int v : p.c) g = std::gcd(g, v);
  return g;
}

// 2D cross product; positive when b lies counterclockwise of a.
Int cross(const Point& a, const Point& b) {
  return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

bool in_span_lp(const std::vector<Point>& rays, const Point& x) {
  const int p = x.dim();
  std::vector<std::vector<Rat>> A(static_cast<std::size_t>(p),
                                  std::vector<Rat>(rays.size()));
  std::vector<Rat> b(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < rays.size(); ++j) A[static_cast<std::size_t>(i)][j] = Rat(rays[j][i]);
    b[static_cast<std::size_t>(i)] = Rat(x[i]);
  }
  return lp_feasible(A, b);
}

// Iterates all points of box(0, hi), invoking fn on each.
template <typename Fn>
void for_each_box_point(const Point& hi, Fn&& fn) {
  const int p = hi.dim();
  Point x = zero_point(p);
  for (;;) {
    fn(x);
    int i = 0;
    while (i < p && x[i] == hi[i]) {
      x[i] = 0;
      ++i;
    }
    if (i == p) return;
    ++x[i];
  }
}

constexpr double kBoxCellCeiling = 8e7;

double box_volume(const Point& hi) {
  double v = 1.0;
  for (Int c : hi.c) v *= static_cast<double>(c) + 1.0;
  return v;
}

}  // namespace

Point primitive(const Point& p) {
  Int g = coord_gcd(p);
  if (g <= 1) return p;
  Point r = p;
  for (int i = 0; i < p.dim(); ++i) r[i] = p.c[static_cast<std::size_t>(i)] / g;
  return r;
}

Cone make_cone(int dim, std::vector<Point> rays) {
  if (dim < 1) throw schema_error("cone dimension must be at least 1");
  if (rays.empty()) throw schema_error("cone needs at least one ray");
  for (auto& r : rays) {
    if (r.dim() != dim) throw schema_error("cone ray dimension mismatch");
    require_nonnegative(r, "cone ray");
    if (is_zero(r)) throw schema_error("cone ray must be nonzero");
    r = primitive(r);
  }
  OrderSpec canon = make_order(OrderKind::GradedLex, dim);
  sort_points(canon, rays);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  // Keep only extremal rays: r stays iff it is not in the span of the others.
  if (rays.size() > 1) {
    if (dim == 2) {
      auto lo = std::min_element(rays.begin(), rays.end(), [](const Point& a, const Point& b) {
        return cross(a, b) > 0;
      });
      auto hi = std::min_element(rays.begin(), rays.end(), [](const Point& a, const Point& b) {
        return cross(a, b) < 0;
      });
      std::vector<Point> kept{*lo};
      if (*hi != *lo) kept.push_back(*hi);
      rays = std::move(kept);
    } else {
      std::vector<Point> kept;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < rays.size(); ++j) {
          if (j != i) others.push_back(rays[j]);
        }
        if (!in_span_lp(others, rays[i])) kept.push_back(rays[i]);
      }
      rays = std::move(kept);
    }
    sort_points(canon, rays);
  }

  Cone c;
  c.dim = dim;
  c.rays = std::move(rays);
  return c;
}

bool cone_contains(const Cone& c, const Point& x) {
  if (x.dim() != c.dim) throw precondition_error("cone_contains: dimension mismatch");
  require_nonnegative(x, "cone_contains");
  if (is_zero(x)) return true;
  if (c.dim == 1) return true;  // single nonzero ray spans all of N
  if (c.dim == 2) {
    if (c.rays.size() == 1) {
      // x must be a nonnegative multiple of the single ray.
      return cross(c.rays[0], x) == 0;
    }
    // Rays are sorted; orientation against both boundary rays decides.
    const Point& lo = cross(c.rays[0], c.rays[1]) > 0 ? c.rays[0] : c.rays[1];
    const Point& hi = (&lo == &c.rays[0]) ? c.rays[1] : c.rays[0];
    return cross(lo, x) >= 0 && cross(x, hi) >= 0;
  }
  return in_span_lp(c.rays, x);
}

std::vector<Point> cone_hilbert_basis(const Cone& c) {
  Point box = zero_point(c.dim);
  for (const Point& r : c.rays) box = add(box, r);
  OrderSpec canon = make_order(OrderKind::GradedLex, c.dim);
  std::vector<Point> pts = cone_points_in_box(c, box, canon);

  std::vector<Point> basis;
  for (const Point& x : pts) {
    if (is_zero(x)) continue;
    bool decomposable = false;
    for (const Point& y : pts) {
      if (is_zero(y) || y == x) continue;
      auto rest = sub_checked(x, y);
      if (!rest) continue;
      if (!is_zero(*rest) && cone_contains(c, *rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(x);
  }
  return basis;
}

std::vector<Point> cone_points_in_box(const Cone& c, const Point& hi, const OrderSpec& ord) {
  if (hi.dim() != c.dim) throw precondition_error("cone_points_in_box: dimension mismatch");
  require_nonnegative(hi, "cone_points_in_box");
  if (box_volume(hi) > kBoxCellCeiling) {
    throw guard_error("cone_points_in_box: enumeration box exceeds the cell ceiling");
  }
  std::vector<Point> out;
  for_each_box_point(hi, [&](const Point& x) {
    if (cone_contains(c, x)) out.push_back(x);
  });
  sort_points(ord, out);
  return out;
}

std::vector<Point> cone_points_leq(const Cone& c, const OrderSpec& ord, const Point& bound) {
  if (bound.dim() != c.dim) throw precondition_error("cone_points_leq: dimension mismatch");
  validate_order(ord, c.dim);
  require_nonnegative(bound, "cone_points_leq");

  Point box = zero_point(c.dim);
  if (ord.kind == OrderKind::Lex) {
    // The lex order ideal below `bound` is finite only when every ray has a
    // positive leading coordinate; then the combination weights are bounded
    // by the leading coordinate of the bound.
    int lead = ord.perm[0];
    Int budget = bound[lead];
    for (const Point& r : c.rays) {
      if (r[lead] == 0) {
        throw guard_error("cone_points_leq: infinite lex order ideal for this cone");
      }
    }
    for (int j = 0; j < c.dim; ++j) {
      Int m = 0;
      for (const Point& r : c.rays) m = std::max(m, r[j]);
      box[j] = checked_mul(budget, m);
    }
  } else {
    Int g = grade(bound);
    for (int j = 0; j < c.dim; ++j) box[j] = g;
  }
  if (box_volume(box) > kBoxCellCeiling) {
    throw guard_error("cone_points_leq: enumeration box exceeds the cell ceiling");
  }
  std::vector<Point> out;
  for_each_box_point(box, [&](const Point& x) {
    if (order_leq(ord, x, bound) && cone_contains(c, x)) out.push_back(x);
  });
  sort_points(ord, out);
  return out;
}

}  // namespace semiq
