#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "momentforge/error.hpp"
#include "momentforge/exponent.hpp"
#include "momentforge/scalar.hpp"

namespace momentforge {

/// Homogeneous polynomial f = Σ c_α m^α of degree d in n variables.
///
/// Terms are kept in canonical order; no zero coefficient is stored and
/// the zero polynomial keeps its (n, d).
template <class S>
class SparsePoly {
 public:
  using Scalar = S;
  using TermMap = std::map<ExponentVector, S, CanonicalLess>;

  SparsePoly(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw DimensionError("polynomial needs at least one variable");
    if (d < 0) throw DimensionError("negative degree");
  }

  static SparsePoly monomial(const ExponentVector& e, const S& c) {
    SparsePoly p(e.size(), e.degree());
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return n_; }
  int degree() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  S coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Accumulates c into the coefficient of m^e, pruning a resulting zero.
  void add_term(const ExponentVector& e, const S& c) {
    if (e.size() != n_) throw DimensionError("exponent vector length differs from variable count");
    if (e.degree() != d_) throw DimensionError("term degree differs from polynomial degree");
    for (int v : e.values())
      if (v < 0) throw DimensionError("negative exponent");
    if (momentforge::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (momentforge::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int d_;
  TermMap terms_;
};

template <class S>
void require_same_shape(const SparsePoly<S>& f, const SparsePoly<S>& g) {
  if (f.nvars() != g.nvars() || f.degree() != g.degree())
    throw DimensionError("polynomials differ in variable count or degree");
}

template <class S>
SparsePoly<S> poly_add(const SparsePoly<S>& f, const SparsePoly<S>& g) {
  require_same_shape(f, g);
  SparsePoly<S> r = f;
  for (const auto& [e, c] : g.terms()) r.add_term(e, c);
  return r;
}

template <class S>
SparsePoly<S> poly_scale(const SparsePoly<S>& f, const S& lambda) {
  SparsePoly<S> r(f.nvars(), f.degree());
  if (is_zero(lambda)) return r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * lambda);
  return r;
}

/// ∂f/∂x_i for 0-based i.
template <class S>
SparsePoly<S> partial_derivative(const SparsePoly<S>& f, int i) {
  if (i < 0 || i >= f.nvars()) throw DimensionError("variable index out of range");
  if (f.degree() == 0) throw DomainError("cannot differentiate a degree-0 form");
  SparsePoly<S> r(f.nvars(), f.degree() - 1);
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    r.add_term(e.shifted(i, -1), c * S(e[i]));
  }
  return r;
}

/// x_i · f for 0-based i.
template <class S>
SparsePoly<S> times_variable(const SparsePoly<S>& f, int i) {
  if (i < 0 || i >= f.nvars()) throw DimensionError("variable index out of range");
  SparsePoly<S> r(f.nvars(), f.degree() + 1);
  for (const auto& [e, c] : f.terms()) r.add_term(e.shifted(i, 1), c);
  return r;
}

template <class T, class S, class F>
SparsePoly<T> map_coefficients(const SparsePoly<S>& f, F&& fn) {
  SparsePoly<T> r(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
  return r;
}

inline SparsePoly<double> to_float(const SparsePoly<Rational>& f) {
  return map_coefficients<double>(f, [](const Rational& c) { return c.to_double(); });
}

inline SparsePoly<ParamScalar> to_param(const SparsePoly<Rational>& f) {
  return map_coefficients<ParamScalar>(f, [](const Rational& c) { return ParamScalar(c); });
}

/// Evaluates every parameter coefficient exactly. Throws DomainError when a
/// parameter that occurs has no value.
inline SparsePoly<Rational> substitute_params(const SparsePoly<ParamScalar>& f,
                                              const std::vector<Rational>& values) {
  return map_coefficients<Rational>(f, [&](const ParamScalar& c) { return c.evaluate(values); });
}

inline SparsePoly<double> substitute_params(const SparsePoly<ParamScalar>& f,
                                            const std::vector<double>& values) {
  return map_coefficients<double>(f, [&](const ParamScalar& c) { return c.evaluate(values); });
}

/// Applies the ring map b_i -> images[i] to every coefficient.
inline SparsePoly<ParamScalar> substitute_params(const SparsePoly<ParamScalar>& f,
                                                 const std::vector<ParamScalar>& images) {
  return map_coefficients<ParamScalar>(f, [&](const ParamScalar& c) { return c.substitute(images); });
}

std::string coefficient_prefix(const Rational& c, bool first, bool unit_monomial);
std::string coefficient_prefix(double c, bool first, bool unit_monomial);
std::string coefficient_prefix(const ParamScalar& c, bool first, bool unit_monomial);

/// Display form in display order (canonically largest monomial first),
/// e.g. "b1*z^3 + b2*x*y*z + x^3".
template <class S>
std::string to_string(const SparsePoly<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    bool unit = it->first.degree() == 0;
    out += coefficient_prefix(it->second, first, unit);
    if (!unit) out += monomial_string(it->first);
    first = false;
  }
  return out;
}

}  // namespace momentforge
