#include "semiq/order.hpp"

#include <algorithm>
#include <numeric>

namespace semiq {

OrderSpec make_order(OrderKind kind, int dim) {
  OrderSpec o;
  o.kind = kind;
  o.perm.resize(static_cast<std::size_t>(dim));
  std::iota(o.perm.begin(), o.perm.end(), 0);
  return o;
}

OrderSpec make_order(OrderKind kind, std::vector<int> perm) {
  OrderSpec o;
  o.kind = kind;
  o.perm = std::move(perm);
  validate_order(o, static_cast<int>(o.perm.size()));
  return o;
}

void validate_order(const OrderSpec& o, int dim) {
  if (static_cast<int>(o.perm.size()) != dim) {
    throw precondition_error("order permutation length does not match dimension");
  }
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (int i : o.perm) {
    if (i < 0 || i >= dim || seen[static_cast<std::size_t>(i)]) {
      throw precondition_error("order permutation is not a permutation of 0..p-1");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
}

std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::GradedLex: return "graded-then-lex";
    case OrderKind::GradedRevCoordLex: return "graded-then-revcoordlex";
    case OrderKind::Lex: return "lex";
  }
  return "?";
}

OrderKind order_kind_from_name(const std::string& name) {
  if (name == "graded-then-lex") return OrderKind::GradedLex;
  if (name == "graded-then-revcoordlex") return OrderKind::GradedRevCoordLex;
  if (name == "lex") return OrderKind::Lex;
  throw schema_error("unknown order kind: " + name);
}

namespace {

int cmp_int(Int a, Int b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

int order_cmp(const OrderSpec& o, const Point& a, const Point& b) {
  require_same_dim(a, b, "order_cmp");
  const int p = a.dim();
  if (static_cast<int>(o.perm.size()) != p) {
    throw precondition_error("order_cmp: permutation does not match point dimension");
  }
  if (o.kind != OrderKind::Lex) {
    if (int c = cmp_int(grade(a), grade(b))) return c;
  }
  switch (o.kind) {
    case OrderKind::GradedLex:
    case OrderKind::Lex:
      for (int i = 0; i < p; ++i) {
        if (int c = cmp_int(a[o.perm[static_cast<std::size_t>(i)]],
                            b[o.perm[static_cast<std::size_t>(i)]])) {
          return c;
        }
      }
      return 0;
    case OrderKind::GradedRevCoordLex:
      for (int i = p - 1; i >= 0; --i) {
        if (int c = cmp_int(a[o.perm[static_cast<std::size_t>(i)]],
                            b[o.perm[static_cast<std::size_t>(i)]])) {
          return c;
        }
      }
      return 0;
  }
  return 0;
}

bool order_less(const OrderSpec& o, const Point& a, const Point& b) {
  return order_cmp(o, a, b) < 0;
}

bool order_leq(const OrderSpec& o, const Point& a, const Point& b) {
  return order_cmp(o, a, b) <= 0;
}

void sort_points(const OrderSpec& o, std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(),
            [&o](const Point& a, const Point& b) { return order_cmp(o, a, b) < 0; });
}

}  // namespace semiq
