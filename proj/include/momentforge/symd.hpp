#pragma once

#include <memory>
#include <vector>

#include "momentforge/exponent.hpp"
#include "momentforge/rational_function.hpp"
#include "momentforge/sparse_poly.hpp"

namespace momentforge {

/// Ordered monomial basis of Sym^d in n variables (canonical order) with the
/// SU(n)-invariant weights ‖m^α‖² = α₁!⋯αₙ!/d! precomputed.
class MonomialBasis {
 public:
  /// Throws DimensionError unless n >= 1 and d >= 1.
  MonomialBasis(int n, int d);

  int nvars() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const std::vector<ExponentVector>& monomials() const { return monomials_; }
  const ExponentVector& operator[](int k) const { return monomials_[static_cast<size_t>(k)]; }
  const Rational& weight(int k) const { return weights_[static_cast<size_t>(k)]; }
  /// Position of e in the basis, or -1.
  int index_of(const ExponentVector& e) const;

 private:
  int n_;
  int d_;
  std::vector<ExponentVector> monomials_;
  std::vector<Rational> weights_;
};

/// Shared immutable basis for (n, d); built once per process.
std::shared_ptr<const MonomialBasis> basis_for(int n, int d);

/// All exponent vectors of total degree d (d >= 0), canonical order.
std::vector<ExponentVector> all_monomials(int n, int d);

/// ‖m^α‖² = α₁!⋯αₙ!/|α|!
Rational weight(const ExponentVector& alpha);

/// ⟨f, g⟩ = Σ conj(f_α)·g_α·‖m^α‖², exact for exact scalars.
template <class S>
S inner_product(const SparsePoly<S>& f, const SparsePoly<S>& g) {
  require_same_shape(f, g);
  S total(0);
  const auto& small = f.term_count() <= g.term_count() ? f : g;
  const auto& large = f.term_count() <= g.term_count() ? g : f;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(e);
    if (it == large.terms().end()) continue;
    const S& fc = (&small == &f) ? c : it->second;
    const S& gc = (&small == &f) ? it->second : c;
    total = total + conj(fc) * gc * from_rational<S>(weight(e));
  }
  return total;
}

template <class S>
S norm_squared(const SparsePoly<S>& f) {
  return inner_product(f, f);
}

/// Coefficients of f aligned to a basis (zeros filled in).
template <class S>
struct CoefficientVector {
  std::shared_ptr<const MonomialBasis> basis;
  std::vector<S> entries;

  int size() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const CoefficientVector& a, const CoefficientVector& b) {
    return a.basis->nvars() == b.basis->nvars() && a.basis->degree() == b.basis->degree() &&
           a.entries == b.entries;
  }
};

template <class S>
CoefficientVector<S> coefficient_vector(const SparsePoly<S>& f) {
  CoefficientVector<S> v{basis_for(f.nvars(), f.degree()), {}};
  v.entries.assign(static_cast<size_t>(v.basis->size()), S(0));
  for (const auto& [e, c] : f.terms()) v.entries[static_cast<size_t>(v.basis->index_of(e))] = c;
  return v;
}

template <class S>
SparsePoly<S> from_coefficient_vector(const CoefficientVector<S>& v) {
  if (v.size() != v.basis->size()) throw DimensionError("coefficient vector length differs from basis");
  SparsePoly<S> f(v.basis->nvars(), v.basis->degree());
  for (int k = 0; k < v.size(); ++k) f.add_term((*v.basis)[k], v.entries[static_cast<size_t>(k)]);
  return f;
}

/// Divides by the first nonzero entry (canonical order). Field scalars only.
template <class S>
CoefficientVector<S> projective_normalize(const CoefficientVector<S>& v) {
  for (const auto& c : v.entries) {
    if (is_zero(c)) continue;
    CoefficientVector<S> r = v;
    S lead = c;
    for (auto& x : r.entries) x = x / lead;
    return r;
  }
  throw DegenerateError("cannot normalize the zero vector");
}

/// Parametric version: entries become rational functions of the parameters.
std::vector<RationalFunction> projective_normalize(const CoefficientVector<ParamScalar>& v);

/// Exponent vector of a single-term polynomial (Wt). Throws DomainError for
/// any other term count.
template <class S>
ExponentVector multidegree(const SparsePoly<S>& f) {
  if (f.term_count() != 1) throw DomainError("multidegree needs exactly one term");
  return f.terms().begin()->first;
}

}  // namespace momentforge
