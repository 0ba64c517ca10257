#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace sawlab {

/// Exact unbounded integer used for all walk counts. Counts grow like mu^n
/// and leave the 64-bit range around n = 40 on the square lattice.
using BigInt = boost::multiprecision::cpp_int;

/// Accumulator that stays in a machine word until it would overflow, then
/// spills into a BigInt. add() is exact for any sequence of inputs.
struct WideCount {
  std::uint64_t lo = 0;
  BigInt hi = 0;

  void add(std::uint64_t x) {
    std::uint64_t s;
    if (__builtin_add_overflow(lo, x, &s)) {
      hi += lo;
      hi += x;
      lo = 0;
    } else {
      lo = s;
    }
  }

  void add(const BigInt& x) { hi += x; }

  BigInt total() const { return hi + lo; }
};

/// Natural log of a positive BigInt, via the top bits and the bit length.
inline double log_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 63) return std::log(static_cast<double>(v.convert_to<std::uint64_t>()));
  const unsigned shift = bits - 63;
  const BigInt top = v >> shift;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * 0.6931471805599453;
}

/// n-th root of a count as a double: values[n]^(1/n).
inline double nth_root(const BigInt& v, int n) {
  return std::exp(log_big(v) / static_cast<double>(n));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace sawlab
