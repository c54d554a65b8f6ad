#include "momentforge/moment.hpp"

namespace momentforge {

namespace {

// First-order dual numbers: v + e·ε with ε² = 0. Used for exact
// directional derivatives of the complex construction.
struct Dual {
  Rational v;
  Rational e;

  Dual() = default;
  Dual(int x) : v(x) {}  // NOLINT(google-explicit-constructor)
  Dual(Rational value, Rational eps) : v(std::move(value)), e(std::move(eps)) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.e + b.e}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.e - b.e}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.e + a.e * b.v}; }
  friend Dual operator/(const Dual& a, const Dual& b) {
    return {a.v / b.v, (a.e * b.v - a.v * b.e) / (b.v * b.v)};
  }
};

Dual lift(const Rational& r, Dual*) { return {r, Rational(0)}; }
double lift(const Rational& r, double*) { return r.to_double(); }

// Re Tr(m·m) for the form Σ (re_α + i·im_α) m^α over the (n, d) basis.
template <class S>
S square_length_split(const MonomialBasis& basis, const std::vector<S>& re, const std::vector<S>& im) {
  const int n = basis.nvars();
  const int d = basis.degree();
  S* tag = nullptr;
  S norm2(0);
  for (int k = 0; k < basis.size(); ++k) {
    const auto uk = static_cast<size_t>(k);
    norm2 = norm2 + lift(basis.weight(k), tag) * (re[uk] * re[uk] + im[uk] * im[uk]);
  }

  // D_i(β) = (β_i + 1)·c_{β+e_i} over the degree d−1 basis.
  auto lower = all_monomials(n, d - 1);
  const size_t lb = lower.size();
  std::vector<S> dre(static_cast<size_t>(n) * lb, S(0)), dim(static_cast<size_t>(n) * lb, S(0));
  for (int i = 0; i < n; ++i) {
    for (size_t b = 0; b < lb; ++b) {
      ExponentVector up = lower[b].shifted(i, 1);
      auto k = static_cast<size_t>(basis.index_of(up));
      S factor = lift(Rational(lower[b][i] + 1), tag);
      dre[static_cast<size_t>(i) * lb + b] = factor * re[k];
      dim[static_cast<size_t>(i) * lb + b] = factor * im[k];
    }
  }
  std::vector<S> lower_w;
  for (const auto& e : lower) lower_w.push_back(lift(weight(e), tag));

  // P_ij = Σ_β w(β)·conj(D_j(β))·D_i(β).
  std::vector<S> pre(static_cast<size_t>(n * n), S(0)), pim(static_cast<size_t>(n * n), S(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      S sr(0), si(0);
      for (size_t b = 0; b < lb; ++b) {
        const S& ar = dre[static_cast<size_t>(j) * lb + b];
        const S& ai = dim[static_cast<size_t>(j) * lb + b];
        const S& cr = dre[static_cast<size_t>(i) * lb + b];
        const S& ci = dim[static_cast<size_t>(i) * lb + b];
        // (ar − i·ai)(cr + i·ci)
        sr = sr + lower_w[b] * (ar * cr + ai * ci);
        si = si + lower_w[b] * (ar * ci - ai * cr);
      }
      pre[static_cast<size_t>(i * n + j)] = sr;
      pim[static_cast<size_t>(i * n + j)] = si;
    }
  }

  S scale = lift(Rational(d), tag) * norm2;
  S shift = lift(Rational(d) / Rational(n), tag);
  std::vector<S> mre(pre.size()), mim(pim.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto u = static_cast<size_t>(i * n + j);
      mre[u] = pre[u] / scale;
      if (i == j) mre[u] = mre[u] - shift;
      mre[u] = mre[u] * S(2);
      mim[u] = S(2) * (pim[u] / scale);
    }
  }
  S total(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto u = static_cast<size_t>(i * n + j);
      auto v = static_cast<size_t>(j * n + i);
      total = total + (mre[u] * mre[v] - mim[u] * mim[v]);
    }
  return total;
}

std::vector<Rational> complex_partials(const SparsePoly<Rational>& f, bool imaginary) {
  if (f.is_zero()) throw DegenerateError("moment map undefined for the zero polynomial");
  auto basis = basis_for(f.nvars(), f.degree());
  auto cv = coefficient_vector(f);
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(basis->size()));
  for (int k = 0; k < basis->size(); ++k) {
    std::vector<Dual> re, im;
    for (const auto& c : cv.entries) {
      re.emplace_back(c, Rational(0));
      im.emplace_back(Rational(0), Rational(0));
    }
    (imaginary ? im : re)[static_cast<size_t>(k)].e = Rational(1);
    out.push_back(square_length_split(*basis, re, im).e);
  }
  return out;
}

}  // namespace

SymbolicMoment symbolic_moment(const SparsePoly<ParamScalar>& family) {
  detail::require_nonzero(family);
  const int n = family.nvars();
  const int d = family.degree();
  auto g = gram_data(family);
  // m_ij = (2n·P_ij − 2d²·N·δ_ij) / (n·d·N)
  SymbolicMoment sm{n, g.norm2 * Rational(n * d), MomentMatrix<ParamScalar>(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ParamScalar e = g.gram(i, j) * Rational(2 * n);
      if (i == j) e -= g.norm2 * Rational(2 * d * d);
      sm.numerators(i, j) = e;
    }
  mpz_class gnum = 0, lden = 1;
  auto absorb = [&](const ParamScalar& p) {
    for (const auto& [k, c] : p.terms()) {
      mpz_class a = c.numerator(), b = c.denominator();
      mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), a.get_mpz_t());
      mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), b.get_mpz_t());
    }
  };
  absorb(sm.denominator);
  for (const auto& e : sm.numerators.entries) absorb(e);
  if (gnum == 0) throw DegenerateError("family has identically zero norm");
  Rational scale(lden, gnum);
  sm.denominator *= scale;
  for (auto& e : sm.numerators.entries) e *= scale;
  return sm;
}

RationalFunction square_length_symbolic(const SparsePoly<ParamScalar>& family) {
  auto sm = symbolic_moment(family);
  ParamScalar top;
  for (int i = 0; i < sm.n; ++i)
    for (int j = 0; j < sm.n; ++j) top += sm.numerators(i, j) * sm.numerators(j, i);
  return RationalFunction(top, sm.denominator * sm.denominator);
}

std::vector<RationalFunction> gradient_symbolic(const SparsePoly<ParamScalar>& family) {
  detail::require_nonzero(family);
  auto parts = gradient_parts(family);
  if (parts.norm2.is_zero()) throw DegenerateError("family has identically zero norm");
  const int d = family.degree();
  ParamScalar denom = parts.norm2 * parts.norm2 * parts.norm2 * Rational(d * d);
  std::vector<RationalFunction> out;
  out.reserve(parts.numerators.size());
  for (const auto& num : parts.numerators) out.emplace_back(num * Rational(4), denom);
  return out;
}

SparsePoly<ParamScalar> general_form(int n, int d) {
  auto basis = basis_for(n, d);
  SparsePoly<ParamScalar> r(n, d);
  for (int k = 0; k < basis->size(); ++k) r.add_term((*basis)[k], ParamScalar::symbol(k, basis->size()));
  return r;
}

std::vector<std::string> general_symbol_names(int n, int d) {
  auto basis = basis_for(n, d);
  std::vector<std::string> names;
  for (const auto& e : basis->monomials()) {
    std::string s = "a[";
    for (int i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    names.push_back(s + "]");
  }
  return names;
}

std::vector<Rational> complex_gradient_imag_parts(const SparsePoly<Rational>& f) {
  return complex_partials(f, true);
}

std::vector<Rational> complex_gradient_real_parts(const SparsePoly<Rational>& f) {
  return complex_partials(f, false);
}

double square_length_complex(int n, int d, const std::vector<double>& re, const std::vector<double>& im) {
  auto basis = basis_for(n, d);
  if (static_cast<int>(re.size()) != basis->size() || static_cast<int>(im.size()) != basis->size())
    throw DimensionError("coefficient vectors must match the basis size");
  return square_length_split(*basis, re, im);
}

}  // namespace momentforge
