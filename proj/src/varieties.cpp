#include "semiq/varieties.hpp"

#include <algorithm>

#include "semiq/lp.hpp"

namespace semiq {

namespace {

// All points of box(0, hi) in plain lexicographic order.
std::vector<Point> box_points(const Point& hi) {
  double cells = 1.0;
  for (Int c : hi.c) cells *= static_cast<double>(c) + 1.0;
  if (cells > 4e7) throw guard_error("window too large");
  std::vector<Point> out;
  Point x = zero_point(hi.dim());
  for (;;) {
    out.push_back(x);
    int i = hi.dim() - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

void require_window(const Point& window) {
  for (Int v : window.c) {
    if (v <= 0) throw precondition_error("window must be componentwise positive");
  }
}

}  // namespace

ModularSystem make_modular_system(std::vector<std::vector<Int>> A,
                                  std::vector<std::vector<Int>> G, std::vector<Int> b) {
  if (A.empty() || A.size() != G.size() || A.size() != b.size()) {
    throw schema_error("modular system: A, G and b must have the same positive row count");
  }
  const std::size_t p = A[0].size();
  if (p == 0) throw schema_error("modular system: empty rows");
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != p || G[i].size() != p) {
      throw schema_error("modular system: ragged matrix");
    }
    if (b[i] <= 0) throw schema_error("modular system: moduli must be positive");
    for (Int& a : A[i]) {
      if (a < 0) throw schema_error("modular system: A must be nonnegative");
      a %= b[i];
    }
  }
  return ModularSystem{std::move(A), std::move(G), std::move(b)};
}

bool pm_member(const ModularSystem& sys, const Point& x) {
  if (static_cast<std::size_t>(x.dim()) != sys.A[0].size()) {
    throw precondition_error("pm_member: dimension mismatch");
  }
  require_nonnegative(x, "pm_member");
  for (std::size_t i = 0; i < sys.A.size(); ++i) {
    Int ax = 0, gx = 0;
    for (int j = 0; j < x.dim(); ++j) {
      ax = checked_add(ax, checked_mul(sys.A[i][static_cast<std::size_t>(j)], x[j]));
      gx = checked_add(gx, checked_mul(sys.G[i][static_cast<std::size_t>(j)], x[j]));
    }
    if (ax % sys.b[i] > gx) return false;
  }
  return true;
}

ModularSystem pm_quotient(const ModularSystem& sys, Int d) {
  if (d < 1) throw precondition_error("pm_quotient: d must be positive");
  ModularSystem out = sys;
  for (std::size_t i = 0; i < out.A.size(); ++i) {
    for (Int& a : out.A[i]) a = checked_mul(a, d) % out.b[i];
    for (Int& g : out.G[i]) g = checked_mul(g, d);
  }
  return out;
}

ModularSystem pm_intersect(const ModularSystem& a, const ModularSystem& b) {
  if (a.A[0].size() != b.A[0].size()) {
    throw precondition_error("pm_intersect: dimension mismatch");
  }
  ModularSystem out = a;
  out.A.insert(out.A.end(), b.A.begin(), b.A.end());
  out.G.insert(out.G.end(), b.G.begin(), b.G.end());
  out.b.insert(out.b.end(), b.b.begin(), b.b.end());
  return out;
}

MembershipFn membership_of(const CSemigroup& s) {
  return [s](const Point& x) { return member(s, x); };
}

MembershipFn membership_of(const ModularSystem& sys) {
  return [sys](const Point& x) { return pm_member(sys, x); };
}

std::optional<ArfCounterexample> arf_check(const MembershipFn& s, const Point& window) {
  require_window(window);
  std::vector<Point> elems;
  for (const Point& x : box_points(window)) {
    if (s(x)) elems.push_back(x);
  }
  // Deterministic scan; the first violation in this order is reported.
  for (const Point& x : elems) {
    for (const Point& y : elems) {
      if (!leq(y, x)) continue;
      for (const Point& z : elems) {
        if (!leq(z, y)) continue;
        Point value = *sub_checked(add(x, y), z);  // >= x componentwise
        if (!s(value)) return ArfCounterexample{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<SaturatedCounterexample> saturated_check(const MembershipFn& s, const Point& window,
                                                       Int coeff_bound) {
  require_window(window);
  if (coeff_bound < 1) throw precondition_error("saturated_check: coefficient bound must be positive");
  const int p = window.dim();
  std::vector<Point> elems;
  for (const Point& x : box_points(window)) {
    if (s(x)) elems.push_back(x);
  }

  // The combination sum z_1 s_1 (+ z_2 s_2) must itself stay in N^p; the
  // shifted element s + sum is then checked when it fits the window.
  auto obligation = [&](const Point& base, const std::vector<Point>& terms,
                        const std::vector<Int>& coeffs) -> std::optional<SaturatedCounterexample> {
    std::vector<Int> sum(static_cast<std::size_t>(p), 0);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      for (int j = 0; j < p; ++j) {
        sum[static_cast<std::size_t>(j)] =
            checked_add(sum[static_cast<std::size_t>(j)], checked_mul(coeffs[t], terms[t][j]));
      }
    }
    Point value = base;
    for (int j = 0; j < p; ++j) {
      if (sum[static_cast<std::size_t>(j)] < 0) return std::nullopt;
      value[j] = checked_add(value[j], sum[static_cast<std::size_t>(j)]);
      if (value[j] > window[j]) return std::nullopt;
    }
    if (s(value)) return std::nullopt;
    return SaturatedCounterexample{base, terms, coeffs, value};
  };

  for (const Point& base : elems) {
    std::vector<Point> smaller;
    for (const Point& e : elems) {
      if (!is_zero(e) && leq(e, base)) smaller.push_back(e);
    }
    for (std::size_t i = 0; i < smaller.size(); ++i) {
      for (Int zi = -coeff_bound; zi <= coeff_bound; ++zi) {
        if (zi == 0) continue;
        if (auto c = obligation(base, {smaller[i]}, {zi})) return c;
        for (std::size_t j = i + 1; j < smaller.size(); ++j) {
          for (Int zj = -coeff_bound; zj <= coeff_bound; ++zj) {
            if (zj == 0) continue;
            if (auto c = obligation(base, {smaller[i], smaller[j]}, {zi, zj})) return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Point> smallest_ray_multiples(const MembershipFn& s, const Cone& cone, Int ceiling) {
  std::vector<Point> out;
  for (const Point& r : cone.rays) {
    Int k = 1;
    while (!s(scale(r, k))) {
      if (++k > ceiling) {
        throw guard_error("smallest_ray_multiples: no multiple of a ray inside the semigroup");
      }
    }
    out.push_back(scale(r, k));
  }
  return out;
}

std::optional<CmCounterexample> cm_check(const MembershipFn& s, const Cone& cone,
                                         const std::vector<Point>& ray_elements,
                                         const Point& window) {
  require_window(window);
  if (static_cast<std::size_t>(cone.dim) != cone.rays.size()) {
    throw precondition_error("cm_check: the semigroup must be simplicial");
  }
  if (ray_elements.size() != cone.rays.size()) {
    throw precondition_error("cm_check: one ray element per extremal ray required");
  }
  std::vector<Point> elems;
  for (const Point& x : box_points(window)) {
    if (s(x)) elems.push_back(x);
  }
  std::unordered_set<Point, PointHash> index(elems.begin(), elems.end());

  const int p = cone.dim;
  for (const Point& a : elems) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if (i == j) continue;
        // b with a + n_i = b + n_j, within the scanned window.
        auto b = sub_checked(add(a, ray_elements[static_cast<std::size_t>(i)]),
                             ray_elements[static_cast<std::size_t>(j)]);
        if (!b || !leq(*b, window) || !index.count(*b)) continue;
        auto c = sub_checked(a, ray_elements[static_cast<std::size_t>(j)]);
        if (!c || !s(*c)) return CmCounterexample{a, *b, i, j};
      }
    }
  }
  return std::nullopt;
}

RationalPolytope make_polytope(std::vector<std::vector<Rat>> vertices) {
  if (vertices.empty()) throw schema_error("polytope needs at least one vertex");
  const std::size_t p = vertices[0].size();
  if (p == 0) throw schema_error("polytope vertices need at least one coordinate");
  for (const auto& v : vertices) {
    if (v.size() != p) throw schema_error("polytope vertex dimension mismatch");
    for (const Rat& c : v) {
      if (c.is_negative()) throw schema_error("polytope vertices must be nonnegative");
    }
  }
  return RationalPolytope{std::move(vertices)};
}

RationalPolytope scale_polytope(const RationalPolytope& f, const Rat& factor) {
  RationalPolytope out = f;
  for (auto& v : out.vertices) {
    for (Rat& c : v) c = rat_mul(c, factor);
  }
  return out;
}

bool convex_member(const RationalPolytope& f, const Point& x) {
  const std::size_t p = f.vertices[0].size();
  if (static_cast<std::size_t>(x.dim()) != p) {
    throw precondition_error("convex_member: dimension mismatch");
  }
  require_nonnegative(x, "convex_member");
  if (is_zero(x)) return true;  // the i = 0 dilate

  // Scales t with x in tF are exactly the values of sum(w) over
  // {w >= 0 : sum w_j v_j = x}; optimize that linear functional both ways.
  std::vector<std::vector<Rat>> A(p, std::vector<Rat>(f.vertices.size()));
  std::vector<Rat> b(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < f.vertices.size(); ++j) A[i][j] = f.vertices[j][i];
    b[i] = Rat(x[static_cast<int>(i)]);
  }
  std::vector<Rat> ones(f.vertices.size(), Rat(1));
  LpResult lo = lp_solve(A, b, ones, /*maximize=*/false);
  if (lo.status == LpStatus::Infeasible) return false;
  LpResult hi = lp_solve(A, b, ones, /*maximize=*/true);

  Int first = rat_ceil(lo.value);
  if (first < 1) first = 1;
  if (hi.status == LpStatus::Unbounded) return true;
  return first <= rat_floor(hi.value);
}

std::optional<ConvexMismatch> convex_quotient_equal(const RationalPolytope& f, Int d,
                                                    const Point& window) {
  if (d < 1) throw precondition_error("convex_quotient_equal: d must be positive");
  require_window(window);
  RationalPolytope scaled = scale_polytope(f, Rat(1, d));
  for (const Point& x : box_points(window)) {
    bool quotient = convex_member(f, scale(x, d));
    bool direct = convex_member(scaled, x);
    if (quotient != direct) return ConvexMismatch{x, quotient, direct};
  }
  return std::nullopt;
}

}  // namespace semiq
