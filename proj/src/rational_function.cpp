#include "momentforge/rational_function.hpp"

#include <algorithm>

#include "momentforge/error.hpp"

namespace momentforge {

RationalFunction::RationalFunction(ParamScalar num, ParamScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DegenerateError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    num_ = ParamScalar(0);
    den_ = ParamScalar(1);
    return;
  }
  // Common monomial factor.
  int nsym = std::max(num_.nsym(), den_.nsym());
  num_ = num_.padded(nsym);
  den_ = den_.padded(nsym);
  auto gn = num_.monomial_gcd();
  auto gd = den_.monomial_gcd();
  ParamScalar::Key g(gn.size());
  bool any = false;
  for (size_t i = 0; i < g.size(); ++i) {
    g[i] = std::min(gn[i], gd[i]);
    any = any || g[i] > 0;
  }
  if (any) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  // Numerator a constant multiple of the denominator.
  const auto& [dk, dc] = *den_.terms().rbegin();
  Rational ratio = num_.coefficient(dk) / dc;
  if (!ratio.is_zero() && num_ == den_ * ratio) {
    num_ = ParamScalar(ratio);
    den_ = ParamScalar(1);
    return;
  }
  // Joint integer content, positive leading denominator term.
  mpz_class g_num = 0, l_den = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& [k, c] : p->terms()) {
      mpz_class a = c.numerator(), b = c.denominator();
      mpz_gcd(g_num.get_mpz_t(), g_num.get_mpz_t(), a.get_mpz_t());
      mpz_lcm(l_den.get_mpz_t(), l_den.get_mpz_t(), b.get_mpz_t());
    }
  }
  Rational scale(l_den, g_num);
  if (den_.coefficient(den_.leading_key()).sign() < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DegenerateError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative(int symbol) const {
  ParamScalar top = num_.derivative(symbol) * den_ - num_ * den_.derivative(symbol);
  return RationalFunction(top, den_ * den_);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& values) const {
  Rational d = den_.evaluate(values);
  if (d.is_zero()) throw DegenerateError("rational function denominator vanishes");
  return num_.evaluate(values) / d;
}

double RationalFunction::evaluate(const std::vector<double>& values) const {
  double d = den_.evaluate(values);
  if (d == 0.0) throw DegenerateError("rational function denominator vanishes");
  return num_.evaluate(values) / d;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_term() == Rational(1)) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace momentforge
