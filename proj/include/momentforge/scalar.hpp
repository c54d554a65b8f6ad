#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "momentforge/param_scalar.hpp"
#include "momentforge/rational.hpp"

namespace momentforge {

// Uniform scalar vocabulary for Rational, ParamScalar and double. All three
// are real: conjugation is the identity on each of them.

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

template <class S>
S conj(const S& s) {
  return s;
}

template <class S>
S from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline double from_rational<double>(const Rational& r) {
  return r.to_double();
}
template <>
inline ParamScalar from_rational<ParamScalar>(const Rational& r) {
  return ParamScalar(r);
}

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double x) { return x; }

/// Fixed 12-significant-digit rendering used for all float output.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Rounds to 12 significant digits (what format_double prints).
inline double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  return std::stod(format_double(x));
}

inline std::string scalar_string(const Rational& r) { return r.to_string(); }
inline std::string scalar_string(double x) { return format_double(x); }
inline std::string scalar_string(const ParamScalar& p) { return p.to_string(); }

}  // namespace momentforge
