#include "semiq/covers.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "semiq/quotient.hpp"

namespace semiq {

namespace {

void require_f_in_cone(const CSemigroup& s, const Point& f) {
  if (!cone_contains(s.cone, f)) {
    throw precondition_error("the Frobenius bound f must lie in the cone");
  }
}

void require_f_above_scaled_frobenius(const CSemigroup& s, Int d, const Point& f) {
  if (auto fb = frobenius(s)) {
    if (order_less(s.order, f, scale(*fb, d))) {
      throw precondition_error("the Frobenius bound f must not precede d * Fb(S)");
    }
  }
}

// Does v/d land in S? Divisible combinations with quotient above Fb(S) are
// accepted without a lookup.
bool divides_into(const CSemigroup& s, Int d, const Point& v) {
  if (!divisible(v, d)) return false;
  Point q = div_exact(v, d);
  if (!s.gaps.empty() && order_less(s.order, s.gaps.back(), q)) return true;
  return member(s, q);
}

bool combination_ok(const CSemigroup& s, Int d, const Point& v) {
  return !divisible(v, d) || divides_into(s, d, v);
}

// Gap set of the cover determined by a full set of combination values.
std::vector<Point> cover_gaps(const CSemigroup& s, Int d, const std::vector<Point>& candidates,
                              const std::vector<Point>& combos) {
  std::vector<Point> gaps;
  for (const Point& x : candidates) {
    bool inside = false;
    for (const Point& c : combos) {
      auto rest = sub_checked(x, c);
      if (rest && divides_into(s, d, *rest)) {
        inside = true;
        break;
      }
    }
    if (!inside) gaps.push_back(x);
  }
  return gaps;
}

std::string gap_key(const std::vector<Point>& gaps) {
  std::ostringstream os;
  for (const Point& g : gaps) {
    for (Int v : g.c) os << v << ',';
    os << ';';
  }
  return os.str();
}

// All values sum(a_i * lambda_i) with coefficients in [0, d-1], deduplicated.
std::vector<Point> combination_values(Int d, int dim, const std::vector<Point>& lambda) {
  std::vector<Point> combos{zero_point(dim)};
  std::unordered_set<Point, PointHash> seen{combos[0]};
  for (const Point& l : lambda) {
    std::vector<Point> next = combos;
    for (const Point& base : combos) {
      Point v = base;
      for (Int a = 1; a < d; ++a) {
        v = add(v, l);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    combos = std::move(next);
  }
  return combos;
}

}  // namespace

std::vector<Point> cover_candidates(const CSemigroup& s, Int d, const Point& f) {
  if (d < 1) throw precondition_error("cover_candidates: d must be positive");
  require_f_in_cone(s, f);
  std::vector<Point> out;
  for (const Point& x : cone_points_leq(s.cone, s.order, f)) {
    if (x == f || !member(s, x)) continue;
    if (divisible(x, d)) continue;
    out.push_back(x);
  }
  return out;
}

bool is_admissible(const CSemigroup& s, Int d, const std::vector<Point>& lambda) {
  if (d < 1) throw precondition_error("is_admissible: d must be positive");
  const int dim = s.cone.dim;
  std::vector<Point> combos{zero_point(dim)};
  std::unordered_set<Point, PointHash> seen{combos[0]};
  for (const Point& l : lambda) {
    std::vector<Point> next = combos;
    for (const Point& base : combos) {
      Point v = base;
      for (Int a = 1; a < d; ++a) {
        v = add(v, l);
        if (!combination_ok(s, d, v)) return false;
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    combos = std::move(next);
  }
  return true;
}

CSemigroup build_cover(const CSemigroup& s, Int d, const Point& f,
                       const std::vector<Point>& lambda) {
  if (d < 1) throw precondition_error("build_cover: d must be positive");
  require_f_in_cone(s, f);
  require_f_above_scaled_frobenius(s, d, f);
  if (!is_admissible(s, d, lambda)) {
    throw precondition_error("build_cover: the subset lambda is not admissible");
  }
  std::vector<Point> candidates = cone_points_leq(s.cone, s.order, f);
  std::vector<Point> combos = combination_values(d, s.cone.dim, lambda);
  CSemigroup t = make_semigroup(s.cone, s.order, cover_gaps(s, d, candidates, combos),
                                /*check=*/true);
  if (!equal(quotient_gaps(t, d), s)) {
    throw precondition_error("build_cover: constructed cover fails the quotient postcondition");
  }
  return t;
}

CoverEnumeration enumerate_covers(const CSemigroup& s, Int d, const Point& f) {
  if (d < 1) throw precondition_error("enumerate_covers: d must be positive");
  require_f_in_cone(s, f);
  require_f_above_scaled_frobenius(s, d, f);

  // Every cover with Frobenius bound below f arises from the construction at
  // its own exact Frobenius element, so the bound is scanned over the whole
  // interval d*Fb(S) .. f (all of it when S is the full cone).
  std::vector<Point> bounds;
  for (const Point& g : cone_points_leq(s.cone, s.order, f)) {
    if (s.gaps.empty() || order_leq(s.order, scale(s.gaps.back(), d), g)) bounds.push_back(g);
  }

  CoverEnumeration result;
  std::unordered_set<std::string> seen_gap_sets;

  for (const Point& bound : bounds) {
    const std::vector<Point> candidates = cone_points_leq(s.cone, s.order, bound);
    const std::vector<Point> pool = cover_candidates(s, d, bound);
    if (pool.size() >= 63) throw guard_error("enumerate_covers: candidate pool too large");
    result.subset_bound += static_cast<std::size_t>(1) << pool.size();

    auto emit = [&](const std::vector<Point>& combos) {
      ++result.admissible_subsets;
      std::vector<Point> gaps = cover_gaps(s, d, candidates, combos);
      if (seen_gap_sets.insert(gap_key(gaps)).second) {
        result.covers.push_back(make_semigroup(s.cone, s.order, std::move(gaps), /*check=*/false));
      }
    };

    // Depth-first walk of the subset lattice over the sorted pool.
    // Inadmissible subsets prune their whole branch: coefficients include 0,
    // so any superset of an inadmissible set is inadmissible.
    struct Walker {
      const CSemigroup& s;
      Int d;
      const std::vector<Point>& pool;
      decltype(emit)& sink;

      void walk(std::size_t from, std::vector<Point>& combos) {
        sink(combos);
        for (std::size_t i = from; i < pool.size(); ++i) {
          std::vector<Point> extended = combos;
          std::unordered_set<Point, PointHash> seen(extended.begin(), extended.end());
          bool ok = true;
          for (const Point& base : combos) {
            Point v = base;
            for (Int a = 1; a < d && ok; ++a) {
              v = add(v, pool[i]);
              if (!combination_ok(s, d, v)) {
                ok = false;
                break;
              }
              if (seen.insert(v).second) extended.push_back(v);
            }
            if (!ok) break;
          }
          if (ok) walk(i + 1, extended);
        }
      }
    };
    std::vector<Point> root{zero_point(s.cone.dim)};
    Walker{s, d, pool, emit}.walk(0, root);
  }

  // Verify the postcondition on every distinct cover.
  for (const CSemigroup& t : result.covers) {
    if (!equal(quotient_gaps(t, d), s)) {
      throw precondition_error("enumerate_covers: a constructed cover fails the quotient postcondition");
    }
  }
  std::sort(result.covers.begin(), result.covers.end(),
            [&s](const CSemigroup& a, const CSemigroup& b) {
              const std::size_t n = std::min(a.gaps.size(), b.gaps.size());
              for (std::size_t i = 0; i < n; ++i) {
                int c = order_cmp(s.order, a.gaps[i], b.gaps[i]);
                if (c != 0) return c < 0;
              }
              return a.gaps.size() < b.gaps.size();
            });
  return result;
}

CoverTree build_cover_tree(const Cone& cone, const OrderSpec& order, Int d, const Point& f,
                           const VarietyPredicate& variety) {
  if (d < 1) throw precondition_error("build_cover_tree: d must be positive");
  if (!cone_contains(cone, f)) {
    throw precondition_error("build_cover_tree: f must lie in the cone");
  }

  CoverTree tree;
  tree.cone = cone;
  tree.order = order;
  tree.d = d;
  tree.f = f;
  tree.vertices.push_back(make_semigroup(cone, order, {}, /*check=*/false));
  tree.root = 0;

  std::unordered_set<std::string> seen{gap_key(tree.vertices[0].gaps)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    const CSemigroup parent = tree.vertices[idx];

    // Every cover of S has Frobenius element at or above d * Fb(S); when that
    // already exceeds the window there are no children.
    if (auto fb = frobenius(parent)) {
      if (order_less(order, f, scale(*fb, d))) continue;
    }
    for (CSemigroup& t : enumerate_covers(parent, d, f).covers) {
      if (equal(t, parent)) continue;  // the full cone is its own d-fold cover
      if (variety && !variety(t)) continue;
      if (!seen.insert(gap_key(t.gaps)).second) {
        throw error("build_cover_tree: vertex reached twice; quotient map is not a function");
      }
      tree.vertices.push_back(std::move(t));
      std::size_t child = tree.vertices.size() - 1;
      tree.edges.emplace_back(idx, child);
      queue.push_back(child);
    }
  }
  return tree;
}

std::string tree_to_dot(const CoverTree& t) {
  std::ostringstream os;
  os << "digraph covers {\n";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    os << "  n" << i << " [label=\"{";
    const auto& gaps = t.vertices[i].gaps;
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      if (j) os << ", ";
      os << "(";
      for (int k = 0; k < gaps[j].dim(); ++k) {
        if (k) os << ",";
        os << gaps[j][k];
      }
      os << ")";
    }
    os << "}\"];\n";
  }
  for (const auto& [a, b] : t.edges) {
    os << "  n" << a << " -> n" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace semiq
