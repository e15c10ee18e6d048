#ifndef CYCLECOUNT_CHECKED_HPP
#define CYCLECOUNT_CHECKED_HPP

#include <cstdint>

#include "cyclecount/errors.hpp"

// Overflow-checked integer arithmetic. All cycle/walk counts are exact
// integers; any wraparound would silently corrupt them, so every add/mul on
// count values goes through these helpers.

namespace cyclecount {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow_detected, "u64 addition overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow_detected, "u64 multiplication overflow");
  return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(errc::overflow_detected, "u64 subtraction underflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow_detected, "i64 addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow_detected, "i64 multiplication overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(errc::overflow_detected, "i64 subtraction overflow");
  return r;
}

inline std::int64_t to_signed(std::uint64_t a) {
  if (a > static_cast<std::uint64_t>(INT64_MAX))
    fail(errc::overflow_detected, "count does not fit in i64");
  return static_cast<std::int64_t>(a);
}

inline std::uint64_t to_unsigned(std::int64_t a) {
  if (a < 0) fail(errc::overflow_detected, "negative value where count expected");
  return static_cast<std::uint64_t>(a);
}

}  // namespace cyclecount

#endif
