#include "momentforge/rational.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "momentforge/error.hpp"

namespace momentforge {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (num.empty() || den.empty() || !valid_int(num) || !valid_int(den))
    throw ParseError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(num.begin());
  if (den[0] == '+') den.erase(den.begin());
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(n, d);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double has no rational value");
  mpq_class q(x);
  return Rational(q);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DegenerateError("division by zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DegenerateError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

namespace {

// Continued-fraction search for the simplest fraction in [lo, hi], 0 <= lo <= hi.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
  Rational fl_r(fl);
  if (fl_r == lo) return lo;
  if (Rational(mpz_class(fl + 1)) <= hi) return Rational(mpz_class(fl + 1));
  // lo and hi share the integer part; recurse on reciprocals of the fractional parts.
  Rational inner = simplest_nonneg((hi - fl_r).inverse(), (lo - fl_r).inverse());
  return fl_r + inner.inverse();
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace momentforge
