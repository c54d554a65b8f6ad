#pragma once

#include <string>
#include <vector>

#include "momentforge/param_scalar.hpp"
#include "momentforge/rational.hpp"

namespace momentforge {

/// Dense univariate polynomial over Q; coeffs()[k] multiplies t^k.
/// The coefficient list never ends in a zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT

  static UPoly monomial(int k, const Rational& c = Rational(1));
  /// p has at most one occurring symbol (index sym); throws DomainError otherwise.
  static UPoly from_param(const ParamScalar& p, int sym);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  int sign_at(const Rational& t) const { return evaluate(t).sign(); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  UPoly primitive() const;
  /// Largest k with t^k dividing this.
  int trailing_zero_order() const;
  UPoly shift_down(int k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Throws DomainError on division by zero.
DivMod divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws DomainError when b does not divide a.
UPoly exact_divide(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Product of the distinct irreducible factors, primitive.
UPoly squarefree_part(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& p);
/// Number of distinct real roots in (lo, hi].
int count_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi);
/// Every real root lies strictly inside (-bound, bound).
Rational root_bound(const UPoly& p);

/// A real root of a squarefree polynomial known to lie in [lo, hi]. When
/// exact is set, lo == hi is the root itself.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  double midpoint() const { return ((lo + hi) / Rational(2)).to_double(); }
};

/// Isolates all distinct real roots, sorted ascending; intervals are
/// disjoint and each holds exactly one root.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);
/// Bisects until width <= max_width or the root is hit exactly. p must be
/// squarefree with exactly one root in the interval.
RootInterval refine(const UPoly& p, RootInterval iv, const Rational& max_width);

/// Determinant of a square matrix over Q[t] by fraction-free elimination.
UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m);

/// Coefficients of p viewed as a polynomial in symbol elim with
/// coefficients in Q[symbol keep]; p may only involve those two symbols.
std::vector<UPoly> split_bivariate(const ParamScalar& p, int elim, int keep);

/// Sylvester resultant of p and q with respect to symbol elim; the result is
/// a polynomial in symbol keep.
UPoly resultant(const ParamScalar& p, const ParamScalar& q, int elim, int keep);

}  // namespace momentforge
