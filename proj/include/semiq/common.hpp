#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiq {

using Int = std::int64_t;

// Error classes map one-to-one onto CLI exit codes; see cli.hpp.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (bad JSON, wrong shape, invalid semigroup file).
struct schema_error : error {
  explicit schema_error(const std::string& msg) : error(msg) {}
};

// An operation was called outside its stated domain.
struct precondition_error : error {
  explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Fixed-width integer arithmetic left the representable range.
struct overflow_error : error {
  explicit overflow_error(const std::string& msg) : error(msg) {}
};

// A configurable search ceiling fired (non-terminating or oversized input).
struct guard_error : error {
  explicit guard_error(const std::string& msg) : error(msg) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace semiq
