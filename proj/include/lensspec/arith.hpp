#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lensspec {

using Int = std::int64_t;

/// Least non-negative residue of a modulo m (m >= 1).
constexpr Int mod(Int a, Int m) noexcept {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Units of Z/qZ in ascending order (for q = 1 this is {1}).
std::vector<Int> units_mod(Int q);

/// Positive divisors of q in ascending order.
std::vector<Int> divisors(Int q);

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n. Throws on overflow.
Int binomial(Int n, Int k);

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit integer overflow in multiplication");
  return r;
}

}  // namespace lensspec
