#pragma once

#include <string>
#include <vector>

#include "momentforge/rational_function.hpp"
#include "momentforge/sparse_poly.hpp"
#include "momentforge/symd.hpp"

namespace momentforge {

/// Dense n×n matrix; houses H(f) and m(f).
template <class S>
struct MomentMatrix {
  int n = 0;
  std::vector<S> entries;

  MomentMatrix() = default;
  explicit MomentMatrix(int size) : n(size), entries(static_cast<size_t>(size * size), S(0)) {}

  S& operator()(int i, int j) { return entries[static_cast<size_t>(i * n + j)]; }
  const S& operator()(int i, int j) const { return entries[static_cast<size_t>(i * n + j)]; }

  S trace() const {
    S t(0);
    for (int i = 0; i < n; ++i) t = t + (*this)(i, i);
    return t;
  }
  bool is_diagonal() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }
  friend bool operator==(const MomentMatrix&, const MomentMatrix&) = default;
};

/// Unnormalized pieces shared by every moment construction:
/// gram(i, j) = ⟨∂f/∂x_j, ∂f/∂x_i⟩ and norm2 = ‖f‖².
template <class S>
struct GramData {
  int n = 0;
  int d = 0;
  MomentMatrix<S> gram;
  S norm2;
};

template <class S>
GramData<S> gram_data(const SparsePoly<S>& f) {
  GramData<S> g{f.nvars(), f.degree(), MomentMatrix<S>(f.nvars()), norm_squared(f)};
  std::vector<SparsePoly<S>> partials;
  partials.reserve(static_cast<size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) partials.push_back(partial_derivative(f, i));
  for (int i = 0; i < g.n; ++i) {
    for (int j = i; j < g.n; ++j) {
      g.gram(i, j) = inner_product(partials[static_cast<size_t>(j)], partials[static_cast<size_t>(i)]);
      if (i != j) g.gram(j, i) = conj(g.gram(i, j));
    }
  }
  return g;
}

namespace detail {
template <class S>
void require_nonzero(const SparsePoly<S>& f) {
  if (f.is_zero()) throw DegenerateError("moment map undefined for the zero polynomial");
}
}  // namespace detail

/// H(f)_ij = ⟨∂f/∂x_j, ∂f/∂x_i⟩ / (d·‖f‖²). Field scalars (Rational, double).
template <class S>
MomentMatrix<S> hermitian_matrix(const SparsePoly<S>& f) {
  detail::require_nonzero(f);
  auto g = gram_data(f);
  if (is_zero(g.norm2)) throw DegenerateError("polynomial has zero norm");
  S scale = S(f.degree()) * g.norm2;
  MomentMatrix<S> h(g.n);
  for (size_t k = 0; k < h.entries.size(); ++k) h.entries[k] = g.gram.entries[k] / scale;
  return h;
}

/// m(f) = 2(H(f) − (d/n)I); traceless.
template <class S>
MomentMatrix<S> moment_matrix(const SparsePoly<S>& f) {
  MomentMatrix<S> m = hermitian_matrix(f);
  S shift = from_rational<S>(Rational(f.degree()) / Rational(f.nvars()));
  for (int i = 0; i < m.n; ++i) m(i, i) = m(i, i) - shift;
  for (auto& x : m.entries) x = x * S(2);
  return m;
}

/// ‖m‖² = Re Tr(m·m).
template <class S>
S square_length(const SparsePoly<S>& f) {
  auto m = moment_matrix(f);
  S total(0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) total = total + m(i, j) * m(j, i);
  return total;
}

/// Pieces of ∂‖m‖²/∂a_α for every α of the full basis (canonical order):
/// with Q = Tr(P²), N = ‖f‖², the partial is 4(Q'_α N − 2Q N'_α) / (d² N³).
template <class S>
struct GradientParts {
  std::shared_ptr<const MonomialBasis> basis;
  S q;
  S norm2;
  std::vector<S> numerators;  // Q'_α N − 2 Q N'_α
};

template <class S>
GradientParts<S> gradient_parts(const SparsePoly<S>& f) {
  auto g = gram_data(f);
  const int n = g.n;
  const int d = g.d;
  auto basis = basis_for(n, d);
  std::vector<SparsePoly<S>> partials;
  for (int i = 0; i < n; ++i) partials.push_back(partial_derivative(f, i));
  auto dcoef = [&](int i, const ExponentVector& beta) { return partials[static_cast<size_t>(i)].coefficient(beta); };

  S q(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q = q + g.gram(i, j) * g.gram(j, i);

  GradientParts<S> out{basis, q, g.norm2, {}};
  out.numerators.reserve(static_cast<size_t>(basis->size()));
  for (int k = 0; k < basis->size(); ++k) {
    const ExponentVector& alpha = (*basis)[k];
    // ∂P_ij/∂c_α = α_j w(α−e_j) D_i(α−e_j) + α_i w(α−e_i) D_j(α−e_i), D_i = ∂f/∂x_i.
    S dq(0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        S dp(0);
        if (alpha[j] > 0) {
          ExponentVector beta = alpha.shifted(j, -1);
          dp = dp + from_rational<S>(weight(beta) * Rational(alpha[j])) * dcoef(i, beta);
        }
        if (alpha[i] > 0) {
          ExponentVector beta = alpha.shifted(i, -1);
          dp = dp + from_rational<S>(weight(beta) * Rational(alpha[i])) * dcoef(j, beta);
        }
        if (!is_zero(dp)) dq = dq + dp * g.gram(j, i);
      }
    }
    dq = dq * S(2);
    S dn = from_rational<S>(basis->weight(k) * Rational(2)) * f.coefficient(alpha);
    out.numerators.push_back(dq * g.norm2 - S(2) * q * dn);
  }
  return out;
}

/// ∂‖m‖²/∂a_α for all α of the basis, canonical order. Field scalars.
template <class S>
std::vector<S> gradient(const SparsePoly<S>& f) {
  detail::require_nonzero(f);
  auto parts = gradient_parts(f);
  if (is_zero(parts.norm2)) throw DegenerateError("polynomial has zero norm at evaluation point");
  S d2 = S(f.degree() * f.degree());
  S denom = d2 * parts.norm2 * parts.norm2 * parts.norm2;
  std::vector<S> out;
  out.reserve(parts.numerators.size());
  for (const auto& num : parts.numerators) out.push_back(S(4) * num / denom);
  return out;
}

/// (1/‖f‖²)·(d/dt)‖e^{tE_ij}.f‖² at t = 0, 0-based i, j. The action sends
/// X_i ↦ X_i + t·X_j for i ≠ j and X_i ↦ e^t·X_i for i = j; both expansions
/// are carried out exactly.
template <class S>
S flow_derivative(const SparsePoly<S>& f, int i, int j) {
  detail::require_nonzero(f);
  const int n = f.nvars();
  const int d = f.degree();
  if (i < 0 || j < 0 || i >= n || j >= n) throw DimensionError("matrix index out of range");
  S norm2 = norm_squared(f);
  if (is_zero(norm2)) throw DegenerateError("polynomial has zero norm");

  if (i == j) {
    // ‖Σ c_α e^{α_i t} m^α‖² = Σ_k e^{kt}·coef_k; derivative at 0 is Σ k·coef_k.
    std::map<int, S> exp_poly;
    for (const auto& [e, c] : f.terms()) {
      S w = conj(c) * c * from_rational<S>(weight(e));
      auto [it, inserted] = exp_poly.try_emplace(2 * e[i], w);
      if (!inserted) it->second = it->second + w;
    }
    S deriv(0);
    for (const auto& [k, c] : exp_poly) deriv = deriv + S(k) * c;
    return deriv / norm2;
  }

  // f(X_i + tX_j) = Σ_k t^k f_k.
  std::vector<SparsePoly<S>> pieces(static_cast<size_t>(d + 1), SparsePoly<S>(n, d));
  for (const auto& [e, c] : f.terms()) {
    for (int k = 0; k <= e[i]; ++k) {
      ExponentVector moved = e.shifted(i, -k).shifted(j, k);
      pieces[static_cast<size_t>(k)].add_term(moved, c * from_rational<S>(binomial(e[i], k)));
    }
  }
  std::vector<S> t_poly(static_cast<size_t>(2 * d + 1), S(0));
  for (int k = 0; k <= d; ++k)
    for (int l = 0; l <= d; ++l) {
      auto& slot = t_poly[static_cast<size_t>(k + l)];
      slot = slot + inner_product(pieces[static_cast<size_t>(k)], pieces[static_cast<size_t>(l)]);
    }
  return t_poly[1] / norm2;
}

// ---------------------------------------------------------------------------
// Symbolic (parametric) moment maps.

/// m(f) = (1/r)·(r_ij), scaled jointly so that r and every r_ij have coprime
/// integer coefficients.
struct SymbolicMoment {
  int n = 0;
  ParamScalar denominator;
  MomentMatrix<ParamScalar> numerators;

  RationalFunction entry(int i, int j) const { return RationalFunction(numerators(i, j), denominator); }
};

SymbolicMoment symbolic_moment(const SparsePoly<ParamScalar>& family);

/// ‖m‖² as an exact rational function of the family's parameters.
RationalFunction square_length_symbolic(const SparsePoly<ParamScalar>& family);

/// ∂‖m‖²/∂a_α for every α of the full basis, evaluated on the family
/// (non-support coefficients held at 0).
std::vector<RationalFunction> gradient_symbolic(const SparsePoly<ParamScalar>& family);

/// R = Σ a_α m^α with one symbol per basis monomial, symbol k ↔ basis[k].
SparsePoly<ParamScalar> general_form(int n, int d);
/// Names a[α₁,α₂,…] for the symbols of general_form.
std::vector<std::string> general_symbol_names(int n, int d);

/// ∂‖m‖²/∂b_α (imaginary coefficient parts) at the real point f, from the
/// complex construction c_α = a_α + i·b_α; exact.
std::vector<Rational> complex_gradient_imag_parts(const SparsePoly<Rational>& f);
/// Same construction, real-part partials ∂‖m‖²/∂a_α.
std::vector<Rational> complex_gradient_real_parts(const SparsePoly<Rational>& f);
/// Re Tr(m·m) for a complex form given by real and imaginary coefficient
/// vectors over the basis of (n, d); evaluated in doubles.
double square_length_complex(int n, int d, const std::vector<double>& re, const std::vector<double>& im);

}  // namespace momentforge
