#include "semiq/point.hpp"

#include <string>

namespace semiq {

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw precondition_error(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_nonnegative(const Point& a, const char* what) {
  for (Int v : a.c) {
    if (v < 0) throw precondition_error(std::string(what) + ": negative coordinate");
  }
}

Point add(const Point& a, const Point& b) {
  require_same_dim(a, b, "add");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

std::optional<Point> sub_checked(const Point& a, const Point& b) {
  require_same_dim(a, b, "sub");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) {
    Int d = checked_sub(a[i], b[i]);
    if (d < 0) return std::nullopt;
    r[i] = d;
  }
  return r;
}

Point scale(const Point& a, Int k) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

Point zero_point(int dim) { return Point(std::vector<Int>(static_cast<std::size_t>(dim), 0)); }

bool leq(const Point& a, const Point& b) {
  require_same_dim(a, b, "leq");
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_zero(const Point& a) {
  for (Int v : a.c) {
    if (v != 0) return false;
  }
  return true;
}

Int grade(const Point& a) {
  Int s = 0;
  for (Int v : a.c) s = checked_add(s, v);
  return s;
}

bool divisible(const Point& a, Int d) {
  for (Int v : a.c) {
    if (v % d != 0) return false;
  }
  return true;
}

Point div_exact(const Point& a, Int d) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] / d;
  return r;
}

Point mod_each(const Point& a, Int d) {
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] % d;
  return r;
}

bool all_even(const Point& a) {
  for (Int v : a.c) {
    if (v % 2 != 0) return false;
  }
  return true;
}

bool all_odd(const Point& a) {
  for (Int v : a.c) {
    if (v % 2 == 0) return false;
  }
  return true;
}

}  // namespace semiq
