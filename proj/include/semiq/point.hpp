#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "semiq/common.hpp"

namespace semiq {

/// A point of N^p. Coordinates are fixed-width integers; all arithmetic on
/// points is checked and reports overflow instead of wrapping.
struct Point {
  std::vector<Int> c;

  Point() = default;
  explicit Point(std::vector<Int> coords) : c(std::move(coords)) {}
  Point(std::initializer_list<Int> coords) : c(coords) {}

  int dim() const { return static_cast<int>(c.size()); }
  Int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = 1469598103934665603ull ^ p.c.size();
    for (Int v : p.c) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void require_same_dim(const Point& a, const Point& b, const char* what);
void require_nonnegative(const Point& a, const char* what);

Point add(const Point& a, const Point& b);
/// a - b when the difference stays in N^p, nullopt otherwise.
std::optional<Point> sub_checked(const Point& a, const Point& b);
Point scale(const Point& a, Int k);
Point zero_point(int dim);

/// Componentwise partial order a <= b.
bool leq(const Point& a, const Point& b);
bool is_zero(const Point& a);

/// Coordinate sum; the grading used by the graded order kinds.
Int grade(const Point& a);

bool divisible(const Point& a, Int d);
Point div_exact(const Point& a, Int d);
Point mod_each(const Point& a, Int d);

bool all_even(const Point& a);
bool all_odd(const Point& a);

}  // namespace semiq
