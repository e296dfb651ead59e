#pragma once

#include <string>
#include <vector>

#include "semiq/point.hpp"

namespace semiq {

/// Addition-compatible total orders on N^p with 0 minimal. All kinds compare
/// the coordinate sum first except Lex; ties are broken on permuted
/// coordinates. GradedRevCoordLex breaks ties on the last permuted coordinate
/// first, with the larger coordinate winning.
enum class OrderKind { GradedLex, GradedRevCoordLex, Lex };

struct OrderSpec {
  OrderKind kind = OrderKind::GradedRevCoordLex;
  std::vector<int> perm;  // permutation of 0..p-1

  friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
    return a.kind == b.kind && a.perm == b.perm;
  }
};

OrderSpec make_order(OrderKind kind, int dim);
OrderSpec make_order(OrderKind kind, std::vector<int> perm);

void validate_order(const OrderSpec& o, int dim);

std::string order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);

/// -1, 0 or +1.
int order_cmp(const OrderSpec& o, const Point& a, const Point& b);
bool order_less(const OrderSpec& o, const Point& a, const Point& b);
bool order_leq(const OrderSpec& o, const Point& a, const Point& b);

void sort_points(const OrderSpec& o, std::vector<Point>& pts);

}  // namespace semiq
