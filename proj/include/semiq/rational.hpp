#pragma once

#include <numeric>

#include "semiq/common.hpp"

namespace semiq {

/// Exact rational over checked 64-bit integers. Always normalized: den > 0,
/// gcd(|num|, den) = 1.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}  // NOLINT: implicit from integers is intended
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw precondition_error("rational with zero denominator");
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_negative() const { return num < 0; }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

namespace detail {
// Fits an __int128 value into Int or reports overflow.
inline Int narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    throw overflow_error("rational arithmetic overflow");
  }
  return static_cast<Int>(v);
}
}  // namespace detail

inline Rat rat_add(const Rat& a, const Rat& b) {
  __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  __int128 g = 1;
  {
    __int128 x = n < 0 ? -n : n, y = d;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  return Rat(detail::narrow(n / g), detail::narrow(d / g));
}

inline Rat rat_neg(const Rat& a) { return Rat(checked_sub(0, a.num), a.den); }

inline Rat rat_sub(const Rat& a, const Rat& b) { return rat_add(a, rat_neg(b)); }

inline Rat rat_mul(const Rat& a, const Rat& b) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  __int128 g = 1;
  {
    __int128 x = n < 0 ? -n : n, y = d;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  return Rat(detail::narrow(n / g), detail::narrow(d / g));
}

inline Rat rat_div(const Rat& a, const Rat& b) {
  if (b.num == 0) throw precondition_error("rational division by zero");
  return rat_mul(a, Rat(b.den, b.num));
}

inline int rat_cmp(const Rat& a, const Rat& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline bool rat_less(const Rat& a, const Rat& b) { return rat_cmp(a, b) < 0; }

/// Largest integer <= a.
inline Int rat_floor(const Rat& a) {
  Int q = a.num / a.den;
  if (a.num % a.den != 0 && a.num < 0) --q;
  return q;
}

/// Smallest integer >= a.
inline Int rat_ceil(const Rat& a) {
  Int q = a.num / a.den;
  if (a.num % a.den != 0 && a.num > 0) ++q;
  return q;
}

}  // namespace semiq
