#pragma once

// Naive reference implementations used as test oracles. Nothing here calls
// into the library's moment code; polynomials are plain maps and norms are
// computed straight from factorials.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "momentforge/rational.hpp"
#include "momentforge/sparse_poly.hpp"

namespace oracle {

using momentforge::Rational;
using Exp = std::vector<int>;
using Poly = std::map<Exp, Rational>;

inline Rational fact(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= Rational(i);
  return r;
}

inline Poly from_sparse(const momentforge::SparsePoly<Rational>& f) {
  Poly p;
  for (const auto& [e, c] : f.terms()) p[e.values()] = c;
  return p;
}

inline momentforge::SparsePoly<Rational> to_sparse(const Poly& p, int n, int d) {
  momentforge::SparsePoly<Rational> f(n, d);
  for (const auto& [e, c] : p) f.add_term(momentforge::ExponentVector(e), c);
  return f;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exp e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r[e] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

// f(A x): variable k becomes sum_l A[k][l] x_l
inline Poly substitute(const Poly& f, const std::vector<std::vector<Rational>>& A, int n) {
  std::vector<Poly> lin(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (A[k][l].is_zero()) continue;
      Exp e(static_cast<size_t>(n), 0);
      e[l] = 1;
      lin[k][e] = A[k][l];
    }
  Poly out;
  for (const auto& [e, c] : f) {
    Poly term{{Exp(static_cast<size_t>(n), 0), c}};
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < e[k]; ++p) term = mul(term, lin[k]);
    for (const auto& [te, tc] : term) out[te] += tc;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// sum |c_a|^2 a!/d!
inline Rational norm2(const Poly& f) {
  Rational total(0);
  for (const auto& [e, c] : f) {
    int d = 0;
    Rational w(1);
    for (int v : e) {
      w *= fact(v);
      d += v;
    }
    total += c * c * w / fact(d);
  }
  return total;
}

// Lagrange derivative at 0 of a polynomial of degree <= deg given by a sampler.
inline Rational derivative_at_zero(const std::function<Rational(const Rational&)>& g, int deg) {
  std::vector<Rational> ts;
  for (int k = 0; k <= deg; ++k) ts.push_back(Rational(k - deg / 2));
  std::vector<Rational> ys;
  for (const auto& t : ts) ys.push_back(g(t));
  // p'(0) = sum_k y_k L_k'(0)
  Rational total(0);
  for (size_t k = 0; k < ts.size(); ++k) {
    Rational denom(1);
    for (size_t l = 0; l < ts.size(); ++l)
      if (l != k) denom *= ts[k] - ts[l];
    // derivative at 0 of prod_{l != k} (t - t_l)
    Rational deriv(0);
    for (size_t skip = 0; skip < ts.size(); ++skip) {
      if (skip == k) continue;
      Rational prod(1);
      for (size_t l = 0; l < ts.size(); ++l)
        if (l != k && l != skip) prod *= -ts[l];
      deriv += prod;
    }
    total += ys[k] * deriv / denom;
  }
  return total;
}

// (1/|f|^2) d/dt |f((I + t E_ij) x)|^2 at 0; first order agrees with the
// group action exp(t E_ij)
inline Rational flow(const Poly& f, int n, int i, int j) {
  int d = 0;
  for (int v : f.begin()->first) d += v;
  Rational base = norm2(f);
  auto g = [&](const Rational& t) {
    std::vector<std::vector<Rational>> A(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int k = 0; k < n; ++k) A[k][k] = Rational(1);
    A[i][j] += t;
    return norm2(substitute(f, A, n));
  };
  return derivative_at_zero(g, 2 * d) / base;
}

// Distinct S_n orbits of m-subsets of degree-d monomials, by brute force.
inline size_t orbit_count_brute(int n, int d, int m) {
  std::vector<Exp> monos;
  std::function<void(Exp&, int, int)> gen = [&](Exp& e, int k, int left) {
    if (k == n - 1) {
      e[k] = left;
      monos.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      gen(e, k + 1, left - v);
    }
  };
  Exp e(static_cast<size_t>(n), 0);
  gen(e, 0, d);
  std::vector<int> perm(static_cast<size_t>(n));
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < n; ++k) perm[k] = k;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<Exp>> keys;
  std::vector<int> pick(static_cast<size_t>(m));
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == m) {
      std::vector<Exp> best;
      for (const auto& p : perms) {
        std::vector<Exp> img;
        for (int idx : pick) {
          Exp x(static_cast<size_t>(n));
          for (int k = 0; k < n; ++k) x[p[k]] = monos[idx][k];
          img.push_back(x);
        }
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
      }
      keys.insert(best);
      return;
    }
    for (int k = start; k < static_cast<int>(monos.size()); ++k) {
      pick[depth] = k;
      choose(k + 1, depth + 1);
    }
  };
  choose(0, 0);
  return keys.size();
}

// A support is identically diagonal iff no two members differ by e_i - e_j:
// every off-diagonal Gram entry is a sum over such pairs of distinct
// parameter monomials with positive weights, so nothing can cancel.
inline bool diagonal_by_differences(const std::vector<Exp>& support) {
  for (size_t a = 0; a < support.size(); ++a)
    for (size_t b = 0; b < support.size(); ++b) {
      if (a == b) continue;
      int plus = 0, minus = 0;
      bool other = false;
      for (size_t k = 0; k < support[a].size(); ++k) {
        int diff = support[a][k] - support[b][k];
        if (diff == 1) ++plus;
        else if (diff == -1) ++minus;
        else if (diff != 0) other = true;
      }
      if (!other && plus == 1 && minus == 1) return false;
    }
  return true;
}

inline Rational random_rational(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Rational(num(rng)) / Rational(den(rng));
}

// Random form of degree d in n variables with a few nonzero rational terms.
inline momentforge::SparsePoly<Rational> random_form(std::mt19937& rng, int n, int d, int max_terms = 6) {
  std::vector<Exp> monos;
  std::function<void(Exp&, int, int)> gen = [&](Exp& e, int k, int left) {
    if (k == n - 1) {
      e[k] = left;
      monos.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      gen(e, k + 1, left - v);
    }
  };
  Exp e(static_cast<size_t>(n), 0);
  gen(e, 0, d);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<size_t> which(0, monos.size() - 1);
  momentforge::SparsePoly<Rational> f(n, d);
  while (f.is_zero()) {
    int k = count(rng);
    for (int t = 0; t < k; ++t) {
      Rational c = random_rational(rng);
      f.add_term(momentforge::ExponentVector(monos[which(rng)]), c);
    }
  }
  return f;
}

}  // namespace oracle
