#include "semiq/irreducible.hpp"

#include <sstream>

#include "semiq/quotient.hpp"

namespace semiq {

std::string irreducibility_name(Irreducibility k) {
  switch (k) {
    case Irreducibility::Symmetric: return "symmetric";
    case Irreducibility::PseudoSymmetric: return "pseudo-symmetric";
    case Irreducibility::NotIrreducible: return "not-irreducible";
  }
  return "?";
}

namespace {

const Point& require_frobenius(const CSemigroup& s, const char* what) {
  if (s.gaps.empty()) {
    throw precondition_error(std::string(what) + ": the full cone has no Frobenius element");
  }
  return s.gaps.back();
}

std::string point_str(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Irreducibility classify(const CSemigroup& s) {
  const Point& fb = require_frobenius(s, "classify");
  std::vector<Point> pf = pseudo_frobenius(s);
  if (pf.size() == 1 && pf[0] == fb) return Irreducibility::Symmetric;
  if (pf.size() == 2 && all_even(fb)) {
    Point half = div_exact(fb, 2);
    if ((pf[0] == half && pf[1] == fb) || (pf[0] == fb && pf[1] == half)) {
      return Irreducibility::PseudoSymmetric;
    }
  }
  return Irreducibility::NotIrreducible;
}

bool symmetric_by_complement(const CSemigroup& s) {
  const Point& fb = require_frobenius(s, "symmetric_by_complement");
  // For x above Fb both sides hold trivially, so the window is complete.
  for (const Point& x : cone_points_leq(s.cone, s.order, fb)) {
    auto mirror = sub_checked(fb, x);
    bool mirror_in_s = mirror && cone_contains(s.cone, *mirror) && !s.gap_index.count(*mirror);
    if (member(s, x) != !mirror_in_s) return false;
  }
  return true;
}

bool pseudo_symmetric_by_complement(const CSemigroup& s) {
  const Point& fb = require_frobenius(s, "pseudo_symmetric_by_complement");
  if (!all_even(fb)) return false;
  Point half = div_exact(fb, 2);
  for (const Point& x : cone_points_leq(s.cone, s.order, fb)) {
    auto mirror = sub_checked(fb, x);
    bool mirror_in_s = mirror && cone_contains(s.cone, *mirror) && !s.gap_index.count(*mirror);
    bool rhs = !mirror_in_s && x != half;
    if (member(s, x) != rhs) return false;
  }
  return true;
}

CSemigroup symmetric_double(const CSemigroup& s, const Point& f) {
  require_frobenius(s, "symmetric_double");
  if (!cone_contains(s.cone, f)) {
    throw precondition_error("symmetric_double: f must lie in the cone");
  }
  for (int i = 0; i < f.dim(); ++i) {
    if (f[i] % 2 == 0) {
      throw precondition_error("symmetric_double: coordinate " + std::to_string(i) +
                               " of f is even");
    }
  }
  std::vector<Point> pf = pseudo_frobenius(s);
  for (const Point& fi : pf) {
    for (const Point& fj : pf) {
      auto part = sub_checked(f, fi);
      std::optional<Point> rest = part ? sub_checked(*part, fj) : std::optional<Point>{};
      if (!rest || !member(s, *rest)) {
        throw precondition_error("symmetric_double: f - " + point_str(fi) + " - " +
                                 point_str(fj) + " is not in the semigroup");
      }
    }
  }

  // Shift bases f - 2 f_i for the translated copies of 2S.
  std::vector<Point> shifts;
  for (const Point& fi : pf) {
    shifts.push_back(*sub_checked(f, scale(fi, 2)));  // in S by the hypothesis with i = j
  }

  auto in_double = [&](const Point& x) {
    if (all_even(x) && member(s, div_exact(x, 2))) return true;
    auto mirror = sub_checked(f, x);
    if (!mirror || !cone_contains(s.cone, *mirror)) return true;
    for (const Point& base : shifts) {
      auto rest = sub_checked(x, base);
      if (rest && all_even(*rest) && member(s, div_exact(*rest, 2))) return true;
    }
    if (!all_even(x) && !all_odd(x)) {
      // x > f/2 evaluated as 2x > f to stay integral; mirror membership in
      // the cone was already established above.
      if (order_less(s.order, f, scale(x, 2))) return true;
    }
    return false;
  };

  // Every gap satisfies f - x in C, hence x <= f componentwise and x <= f in
  // the order; the window below f is complete.
  std::vector<Point> gaps;
  for (const Point& x : cone_points_leq(s.cone, s.order, f)) {
    if (!in_double(x)) gaps.push_back(x);
  }
  CSemigroup t = make_semigroup(s.cone, s.order, std::move(gaps), /*check=*/true);

  if (!(frobenius(t) && *frobenius(t) == f)) {
    throw precondition_error("symmetric_double: constructed cover has wrong Frobenius element");
  }
  if (classify(t) != Irreducibility::Symmetric) {
    throw precondition_error("symmetric_double: constructed cover is not symmetric");
  }
  if (!equal(quotient_gaps(t, 2), s)) {
    throw precondition_error("symmetric_double: constructed cover fails the quotient postcondition");
  }
  return t;
}

std::vector<Point> admissible_double_bounds(const CSemigroup& s, const Point& bound) {
  require_frobenius(s, "admissible_double_bounds");
  std::vector<Point> pf = pseudo_frobenius(s);
  std::vector<Point> out;
  for (const Point& f : cone_points_leq(s.cone, s.order, bound)) {
    if (!all_odd(f)) continue;
    bool ok = true;
    for (const Point& fi : pf) {
      for (const Point& fj : pf) {
        auto part = sub_checked(f, fi);
        std::optional<Point> rest = part ? sub_checked(*part, fj) : std::optional<Point>{};
        if (!rest || !member(s, *rest)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

CSemigroup pseudo_symmetric_cover(const CSemigroup& s) {
  const Point& fb = require_frobenius(s, "pseudo_symmetric_cover");
  if (classify(s) == Irreducibility::NotIrreducible) {
    throw precondition_error("pseudo_symmetric_cover: input must be irreducible");
  }
  Point fb2 = scale(fb, 2);

  auto in_cover = [&](const Point& x) {
    if (all_even(x) && member(s, div_exact(x, 2))) return true;
    if (order_less(s.order, fb2, x)) return true;
    if (!all_even(x) && order_less(s.order, fb, x) && order_less(s.order, x, fb2)) return true;
    return false;
  };

  std::vector<Point> gaps;
  for (const Point& x : cone_points_leq(s.cone, s.order, fb2)) {
    if (!in_cover(x)) gaps.push_back(x);
  }
  CSemigroup t = make_semigroup(s.cone, s.order, std::move(gaps), /*check=*/true);

  if (!(frobenius(t) && *frobenius(t) == fb2)) {
    throw precondition_error("pseudo_symmetric_cover: wrong Frobenius element");
  }
  if (classify(t) != Irreducibility::PseudoSymmetric) {
    throw precondition_error("pseudo_symmetric_cover: constructed cover is not pseudo-symmetric");
  }
  if (!equal(quotient_gaps(t, 2), s)) {
    throw precondition_error("pseudo_symmetric_cover: quotient postcondition failed");
  }
  return t;
}

CSemigroup fourth_pseudo_symmetric(const CSemigroup& s, const Point& f) {
  CSemigroup doubled = symmetric_double(s, f);
  CSemigroup t = pseudo_symmetric_cover(doubled);
  if (!equal(quotient_gaps(t, 4), s)) {
    throw precondition_error("fourth_pseudo_symmetric: quotient by 4 postcondition failed");
  }
  return t;
}

std::optional<CSemigroup> irreducible_half_witness(const CSemigroup& s) {
  require_frobenius(s, "irreducible_half_witness");
  if (classify(s) == Irreducibility::NotIrreducible) return std::nullopt;
  return pseudo_symmetric_cover(s);
}

HalfClassification half_dichotomy(const CSemigroup& t) {
  if (classify(t) != Irreducibility::PseudoSymmetric) {
    throw precondition_error("half_dichotomy: input must be pseudo-symmetric");
  }
  CSemigroup half = quotient_gaps(t, 2);
  HalfClassification out;
  out.kind = classify(half);
  out.frobenius_half = *frobenius(half);
  for (Int v : out.frobenius_half.c) out.frobenius_mod4.push_back(v % 4);
  return out;
}

}  // namespace semiq
