#pragma once

#include <map>
#include <string>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

/// Polynomial in parameter symbols b₁..b_k with exact rational coefficients.
///
/// Every stored key has length nsym(); operands with different symbol counts
/// are padded to the larger one, so constants (nsym() == 0) mix freely.
/// No zero coefficient is ever stored.
class ParamScalar {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Rational>;

  ParamScalar() = default;
  ParamScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamScalar(int c) : ParamScalar(Rational(c)) {}  // NOLINT

  /// The symbol with 0-based index `index` in a ring of `nsym` symbols.
  static ParamScalar symbol(int index, int nsym);
  static ParamScalar from_terms(int nsym, TermMap terms);

  int nsym() const { return nsym_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Key& key) const;
  int total_degree() const;
  int degree_in(int symbol) const;
  /// Key of the leading term: largest total degree, then lexicographically
  /// largest. Requires a nonzero polynomial.
  Key leading_key() const;
  /// Same polynomial viewed in a ring of at least `nsym` symbols.
  ParamScalar padded(int nsym) const;
  /// Symbols that actually occur.
  std::vector<int> occurring_symbols() const;

  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator*=(const Rational& c);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(ParamScalar a, const Rational& c) { return a *= c; }
  friend ParamScalar operator*(const Rational& c, ParamScalar a) { return a *= c; }
  ParamScalar operator-() const;
  ParamScalar pow(unsigned e) const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b);

  ParamScalar derivative(int symbol) const;
  Rational evaluate(const std::vector<Rational>& values) const;
  double evaluate(const std::vector<double>& values) const;
  /// Ring homomorphism b_i -> images[i].
  ParamScalar substitute(const std::vector<ParamScalar>& images) const;

  /// Positive rational c such that (*this / c) has coprime integer
  /// coefficients. Zero for the zero polynomial.
  Rational content() const;
  /// *this divided by content(), sign fixed so the leading term is positive.
  ParamScalar primitive() const;
  /// Componentwise minimum exponent over all terms (the monomial gcd).
  Key monomial_gcd() const;
  /// Exact division by the monomial b^key; every term must be divisible.
  ParamScalar divide_monomial(const Key& key) const;

  /// e.g. "3*b1^2*b2 - b2 + 1"; names default to b1..bk.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void pad_to(int nsym);
  void add_term(Key key, const Rational& c);

  int nsym_ = 0;
  TermMap terms_;
};

inline bool is_zero(const ParamScalar& s) { return s.is_zero(); }

}  // namespace momentforge
