#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

// All group-element data (coordinates, flow values, ring coefficients) is
// arbitrary precision: iterated multiplication can double magnitudes per step,
// so no fixed width is safe. The combinatorial kernels narrow to int64 with
// loud errors instead.
using Int = boost::multiprecision::cpp_int;

inline long long toInt64Checked(const Int& v, const char* what) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
    throw CapacityError(std::string(what) + ": value " + v.str() + " exceeds 64-bit kernel range");
  }
  return v.convert_to<long long>();
}

inline Int absInt(const Int& v) { return v < 0 ? Int(-v) : v; }

// Exact nonnegative rational, kept reduced. Used for reported length ratios;
// never converted to floating point.
struct Fraction {
  Int num{0};
  Int den{1};

  Fraction() = default;
  Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw StructureError("fraction with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = boost::multiprecision::gcd(absInt(num), den);
    if (g > 1) { num /= g; den /= g; }
  }

  std::string str() const { return num.str() + "/" + den.str(); }

  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace magnus
