#pragma once

#include <cstdint>
#include <stdexcept>

namespace pathsample {

// Checked 64-bit unsigned arithmetic. Counts and weight totals must stay
// exact; anything past 2^64-1 is a hard error rather than silent wraparound.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit count overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit count overflow in multiplication");
  return r;
}

// C(d, 3) with a 128-bit intermediate; the result itself must fit in 64 bits.
inline std::uint64_t choose3(std::uint64_t d) {
  if (d < 3) return 0;
  unsigned __int128 t = (unsigned __int128)d * (d - 1) / 2 * (d - 2) / 3;
  if (t > (unsigned __int128)UINT64_MAX)
    throw std::overflow_error("64-bit count overflow in choose3");
  return (std::uint64_t)t;
}

}  // namespace pathsample
