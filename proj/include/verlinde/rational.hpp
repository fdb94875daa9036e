#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace verlinde {

// Exact arithmetic substrate. cpp_rational keeps every value in lowest
// terms with a positive denominator, which is the canonical form all
// equality tests in this library rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace verlinde
