#pragma once

#include <string>
#include <vector>

#include "momentforge/param_scalar.hpp"

namespace momentforge {

/// Quotient of two parameter polynomials.
///
/// Kept in a normal form: the common monomial factor is cancelled, the pair
/// is scaled jointly to coprime integer coefficients with a positive leading
/// denominator term, and a numerator that is a constant multiple of the
/// denominator collapses to that constant over 1.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const ParamScalar& p) : num_(p), den_(1) { normalize(); }  // NOLINT
  RationalFunction(ParamScalar num, ParamScalar den);

  const ParamScalar& numerator() const { return num_; }
  const ParamScalar& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Quotient rule: (N'D − ND') / D².
  RationalFunction derivative(int symbol) const;
  /// Throws DegenerateError where the denominator vanishes.
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();

  ParamScalar num_;
  ParamScalar den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace momentforge
