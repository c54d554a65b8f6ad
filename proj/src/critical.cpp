#include "momentforge/critical.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "momentforge/diagonal.hpp"
#include "momentforge/moment.hpp"
#include "momentforge/parallel.hpp"

namespace momentforge {

namespace {

const Rational kFine = Rational(1) / Rational(mpz_class(1) << 56, 1);

// ParamScalar flattened for fast double evaluation.
struct CompiledPoly {
  std::vector<double> coeffs;
  std::vector<std::vector<int>> keys;

  CompiledPoly() = default;
  CompiledPoly(const ParamScalar& p, double scale) {
    for (const auto& [key, c] : p.terms()) {
      coeffs.push_back(c.to_double() * scale);
      keys.push_back(key);
    }
  }

  double operator()(const std::vector<double>& x) const {
    double total = 0.0;
    for (size_t t = 0; t < coeffs.size(); ++t) {
      double term = coeffs[t];
      const auto& key = keys[t];
      for (size_t s = 0; s < key.size(); ++s)
        for (int e = 0; e < key[s]; ++e) term *= x[s];
      total += term;
    }
    return total;
  }
};

double max_abs_coefficient(const ParamScalar& p) {
  double m = 0.0;
  for (const auto& [key, c] : p.terms()) m = std::max(m, std::fabs(c.to_double()));
  return m;
}

// Numerators reduced for root finding: monomial factors dropped (they only
// vanish at a zero parameter), primitive, deduplicated.
std::vector<ParamScalar> reduced_equations(const GradientSystem& sys) {
  std::vector<ParamScalar> out;
  for (const auto& e : sys.equations) {
    if (e.is_zero()) continue;
    ParamScalar r = e.divide_monomial(e.monomial_gcd()).primitive();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const ParamScalar& a, const ParamScalar& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.terms().size() < b.terms().size();
  });
  return out;
}

ParamValue exact_value(const AlgebraicNumber& a) { return {a, a.approx}; }

std::vector<Rational> rational_values(const std::vector<ParamValue>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) {
    if (!v.exact) return {};
    auto r = v.exact->rational_value();
    if (!r) return {};
    out.push_back(*r);
  }
  return out;
}

// Fills residual, exact_zero and canonical_form; false when the point fails.
bool certify(CriticalSolution& s, double tol) {
  for (const auto& v : s.values)
    if (v.approx == 0.0) return false;
  auto exact = s.exact_member();
  if (exact) {
    auto r = verify_critical(*exact);
    if (!r.exact_zero) return false;
    s.exact_zero = true;
    s.residual = 0.0;
  } else {
    s.residual = verify_critical(s.member());
    if (!(s.residual <= tol)) return false;
  }
  s.canonical_form = torus_canonical(s.member());
  return true;
}

// Coordinate sign flip signs for the family parameters, keeping the fixed
// term at +1.
std::vector<int> flip_signs(const ParamFamily& fam, unsigned mask) {
  auto parity = [mask](const ExponentVector& e) {
    int p = 0;
    for (int i = 0; i < e.size(); ++i)
      if ((mask >> i) & 1U) p += e[i];
    return p % 2;
  };
  const int base = parity(fam.support.front());
  std::vector<int> signs;
  for (int k = 0; k < fam.num_params(); ++k) signs.push_back((parity(fam.param_monomial(k)) + base) % 2 ? -1 : 1);
  return signs;
}

// Representative of the sign-group orbit: most positive parameters, then
// positive as early as possible.
CriticalSolution sign_canonical(const CriticalSolution& s) {
  const int n = s.family.poly.nvars();
  std::vector<int> best;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    auto signs = flip_signs(s.family, mask);
    std::vector<int> key;
    for (size_t k = 0; k < signs.size(); ++k) key.push_back(signs[k] * (s.values[k].approx > 0 ? 1 : -1));
    auto score = [](const std::vector<int>& v) {
      std::vector<int> sc{static_cast<int>(std::count(v.begin(), v.end(), 1))};
      sc.insert(sc.end(), v.begin(), v.end());
      return sc;
    };
    if (best.empty() || score(key) > score(best)) best = key;
  }
  CriticalSolution r = s;
  for (size_t k = 0; k < r.values.size(); ++k) {
    bool flip = (s.values[k].approx > 0 ? 1 : -1) != best[k];
    if (!flip) continue;
    r.values[k].approx = -r.values[k].approx;
    if (r.values[k].exact) r.values[k].exact = r.values[k].exact->negated();
  }
  r.canonical_form = torus_canonical(r.member());
  return r;
}

bool close_values(const CriticalSolution& a, const CriticalSolution& b, double tol) {
  for (size_t k = 0; k < a.values.size(); ++k)
    if (std::fabs(a.values[k].approx - b.values[k].approx) > tol * (1.0 + std::fabs(a.values[k].approx))) return false;
  return true;
}

std::vector<CriticalSolution> merge_sign_classes(std::vector<CriticalSolution> found) {
  std::vector<CriticalSolution> out;
  for (auto& s : found) {
    CriticalSolution c = sign_canonical(s);
    bool dup = std::any_of(out.begin(), out.end(), [&](const CriticalSolution& o) { return close_values(o, c, 1e-6); });
    if (!dup) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CriticalSolution& a, const CriticalSolution& b) {
    return a.approx_values() < b.approx_values();
  });
  return out;
}

std::vector<CriticalSolution> solve_one(const GradientSystem& sys, const std::vector<ParamScalar>& eqs,
                                        const SolveOptions& opts) {
  const int sym = sys.unknowns.front();
  UPoly g;
  for (const auto& e : eqs) g = gcd(g, UPoly::from_param(e, sym));
  std::vector<CriticalSolution> out;
  if (g.is_zero() || g.degree() == 0) return out;
  UPoly sf = squarefree_part(g);
  for (const auto& iv : isolate_real_roots(sf)) {
    auto a = AlgebraicNumber::from_root(sf, iv);
    CriticalSolution s;
    s.family = sys.family;
    s.values = {exact_value(a)};
    s.method = "gcd";
    if (certify(s, opts.tolerance)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<CriticalSolution> solve_newton(const GradientSystem& sys, const std::vector<ParamScalar>& eqs,
                                           const SolveOptions& opts);

std::vector<CriticalSolution> solve_two(const GradientSystem& sys, const std::vector<ParamScalar>& eqs,
                                        const SolveOptions& opts) {
  const int s0 = sys.unknowns[0];
  const int s1 = sys.unknowns[1];
  const size_t pool = std::min<size_t>(eqs.size(), 6);
  UPoly r0;
  UPoly r1;
  for (size_t i = 0; i < pool; ++i) {
    for (size_t j = i + 1; j < pool; ++j) {
      UPoly a = resultant(eqs[i], eqs[j], s1, s0);
      UPoly b = resultant(eqs[i], eqs[j], s0, s1);
      if (a.is_zero() || b.is_zero()) continue;
      r0 = gcd(r0, a);
      r1 = gcd(r1, b);
    }
  }
  if (r0.is_zero() || r1.is_zero()) return solve_newton(sys, eqs, opts);
  std::vector<CriticalSolution> out;
  if (r0.degree() == 0 || r1.degree() == 0) return out;
  auto roots = [](const UPoly& r) {
    UPoly sf = squarefree_part(r.shift_down(r.trailing_zero_order()));
    std::vector<AlgebraicNumber> v;
    for (const auto& iv : isolate_real_roots(sf)) v.push_back(AlgebraicNumber::from_root(sf, iv));
    return v;
  };
  const auto c0 = roots(r0);
  const auto c1 = roots(r1);
  std::vector<CompiledPoly> compiled;
  for (const auto& e : eqs) compiled.emplace_back(e, 1.0 / max_abs_coefficient(e));
  for (const auto& a : c0) {
    for (const auto& b : c1) {
      std::vector<double> x(static_cast<size_t>(std::max(s0, s1) + 1), 0.0);
      x[static_cast<size_t>(s0)] = a.approx;
      x[static_cast<size_t>(s1)] = b.approx;
      // Cheap prefilter on the scaled numerators before the full gradient.
      bool plausible = std::all_of(compiled.begin(), compiled.end(), [&](const CompiledPoly& p) {
        return std::fabs(p(x)) <= 1e-6 * (1.0 + std::pow(std::fabs(a.approx) + std::fabs(b.approx), 8));
      });
      if (!plausible) continue;
      CriticalSolution s;
      s.family = sys.family;
      s.values = {exact_value(a), exact_value(b)};
      s.method = "resultant";
      if (certify(s, opts.tolerance)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<CriticalSolution> solve_newton(const GradientSystem& sys, const std::vector<ParamScalar>& eqs,
                                           const SolveOptions& opts) {
  const int k = static_cast<int>(sys.unknowns.size());
  std::vector<CompiledPoly> f;
  std::vector<std::vector<CompiledPoly>> jac;
  for (const auto& e : eqs) {
    double scale = 1.0 / max_abs_coefficient(e);
    f.emplace_back(e, scale);
    std::vector<CompiledPoly> row;
    for (int s : sys.unknowns) row.emplace_back(e.derivative(s), scale);
    jac.push_back(std::move(row));
  }
  const int grid = opts.newton_grid;
  size_t starts = 1;
  for (int i = 0; i < k; ++i) starts *= static_cast<size_t>(grid);

  std::mutex mu;
  std::vector<CriticalSolution> found;
  parallel_for(starts, [&](size_t idx) {
    std::vector<double> x(static_cast<size_t>(k));
    size_t rest = idx;
    for (int i = 0; i < k; ++i) {
      int g = static_cast<int>(rest % static_cast<size_t>(grid));
      rest /= static_cast<size_t>(grid);
      x[static_cast<size_t>(i)] = grid == 1 ? 0.5 : -opts.newton_box + 2.0 * opts.newton_box * g / (grid - 1);
      // Skip the coordinate hyperplanes where the parameter would vanish.
      if (x[static_cast<size_t>(i)] == 0.0) x[static_cast<size_t>(i)] = 0.3;
    }
    Eigen::VectorXd fx(static_cast<Eigen::Index>(f.size()));
    Eigen::MatrixXd jx(static_cast<Eigen::Index>(f.size()), k);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      for (size_t r = 0; r < f.size(); ++r) {
        fx(static_cast<Eigen::Index>(r)) = f[r](x);
        for (int c = 0; c < k; ++c) jx(static_cast<Eigen::Index>(r), c) = jac[r][static_cast<size_t>(c)](x);
      }
      Eigen::VectorXd step = jx.completeOrthogonalDecomposition().solve(-fx);
      if (!step.allFinite()) break;
      for (int c = 0; c < k; ++c) x[static_cast<size_t>(c)] += step(c);
      if (step.norm() <= 1e-13 * std::max(1.0, Eigen::Map<Eigen::VectorXd>(x.data(), k).norm())) {
        converged = true;
        break;
      }
      if (Eigen::Map<Eigen::VectorXd>(x.data(), k).norm() > 1e6) break;
    }
    if (!converged) return;
    for (double v : x)
      if (std::fabs(v) < 1e-6) return;
    CriticalSolution s;
    s.family = sys.family;
    for (double v : x) s.values.push_back({std::nullopt, v});
    s.method = "newton";
    if (!certify(s, opts.tolerance)) return;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jx);
    const auto& sv = svd.singularValues();
    s.positive_dimensional = sv.size() < k || sv(k - 1) <= 1e-7 * std::max(1.0, sv(0));
    std::lock_guard lock(mu);
    found.push_back(std::move(s));
  });
  // Deterministic order regardless of scheduling.
  std::sort(found.begin(), found.end(), [](const CriticalSolution& a, const CriticalSolution& b) {
    return a.approx_values() < b.approx_values();
  });
  std::vector<CriticalSolution> clustered;
  for (auto& s : found) {
    bool dup = std::any_of(clustered.begin(), clustered.end(), [&](const CriticalSolution& o) {
      double dist = 0.0;
      for (size_t i = 0; i < s.values.size(); ++i) dist += std::pow(s.values[i].approx - o.values[i].approx, 2);
      return std::sqrt(dist) <= 1e-6;
    });
    if (!dup) clustered.push_back(std::move(s));
  }
  return clustered;
}

bool rows_independent(std::vector<std::vector<Rational>> rows) {
  // Rank test by elimination.
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank == rows.size();
}

// Incremental GF(2) basis with reduced rows keyed by pivot.
struct Gf2Basis {
  std::vector<std::pair<unsigned, unsigned>> rows;  // (reduced vector, combination of original rows)

  // Returns true and records the row when independent.
  bool insert(unsigned v, unsigned tag) {
    unsigned combo = tag;
    for (const auto& [r, c] : rows) {
      unsigned pivot = r & (~r + 1);
      if (v & pivot) {
        v ^= r;
        combo ^= c;
      }
    }
    if (v == 0) return false;
    unsigned pivot = v & (~v + 1);
    for (auto& [r, c] : rows)
      if (r & pivot) {
        r ^= v;
        c ^= combo;
      }
    rows.emplace_back(v, combo);
    return true;
  }
};

}  // namespace

GradientSystem gradient_system(const ParamFamily& fam) {
  GradientSystem sys;
  sys.family = fam;
  for (const auto& g : gradient_symbolic(fam.poly)) {
    sys.equations.push_back(g.numerator().is_zero() ? g.numerator() : g.numerator().primitive());
    sys.denominators.push_back(g.denominator());
  }
  for (int k = 0; k < fam.num_params(); ++k) sys.unknowns.push_back(k);
  return sys;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  return {UPoly(std::vector<Rational>{-r, Rational(1)}), RootInterval{r, r, true}, r.to_double()};
}

AlgebraicNumber AlgebraicNumber::from_root(const UPoly& p, const RootInterval& iv0) {
  RootInterval iv = refine(p, iv0, kFine);
  if (iv.exact) return from_rational(iv.lo);
  Rational guess = simplest_between(iv.lo, iv.hi);
  if (p.evaluate(guess).is_zero()) return from_rational(guess);
  if (iv.lo.sign() == iv.hi.sign()) {
    Rational a = iv.lo * iv.lo;
    Rational b = iv.hi * iv.hi;
    Rational c = simplest_between(std::min(a, b), std::max(a, b));
    UPoly quad(std::vector<Rational>{-c, Rational(0), Rational(1)});
    if (divmod(p, quad).remainder.is_zero()) {
      double root = std::sqrt(c.to_double());
      return {quad, iv, iv.lo.sign() > 0 ? root : -root};
    }
  }
  return {p, iv, iv.midpoint()};
}

std::optional<Rational> AlgebraicNumber::rational_value() const {
  if (minimal_polynomial.degree() != 1) return std::nullopt;
  return -minimal_polynomial.coefficient(0) / minimal_polynomial.coefficient(1);
}

std::optional<Rational> AlgebraicNumber::square() const {
  const auto& p = minimal_polynomial;
  if (p.degree() != 2 || !p.coefficient(1).is_zero() || p.coefficient(2) != Rational(1)) return std::nullopt;
  return -p.coefficient(0);
}

AlgebraicNumber AlgebraicNumber::negated() const {
  std::vector<Rational> c = minimal_polynomial.coeffs();
  for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  UPoly q(std::move(c));
  if (q.lead().sign() < 0) q = -q;
  return {q, RootInterval{-interval.hi, -interval.lo, interval.exact}, -approx};
}

std::string AlgebraicNumber::to_string() const {
  if (auto r = rational_value()) return r->to_string();
  if (auto c = square()) return std::string(approx < 0 ? "-" : "") + "sqrt(" + c->to_string() + ")";
  return "root(" + minimal_polynomial.to_string() + " in [" + interval.lo.to_string() + ", " +
         interval.hi.to_string() + "])";
}

std::vector<double> CriticalSolution::approx_values() const {
  std::vector<double> v;
  for (const auto& p : values) v.push_back(p.approx);
  return v;
}

SparsePoly<double> CriticalSolution::member() const { return family_member(family, approx_values()); }

std::optional<SparsePoly<Rational>> CriticalSolution::exact_member() const {
  auto r = rational_values(values);
  if (r.size() != values.size()) return std::nullopt;
  return family_member(family, r);
}

std::vector<CriticalSolution> solve_real(const GradientSystem& sys, const SolveOptions& opts) {
  const size_t k = sys.unknowns.size();
  if (k == 0 || k > 3) throw UnsupportedError("solver handles one to three unknowns");
  const auto eqs = reduced_equations(sys);
  std::vector<CriticalSolution> found;
  if (eqs.empty()) {
    found = solve_newton(sys, eqs, opts);
  } else if (k == 1) {
    found = solve_one(sys, eqs, opts);
  } else if (k == 2) {
    found = solve_two(sys, eqs, opts);
  } else {
    found = solve_newton(sys, eqs, opts);
  }
  return merge_sign_classes(std::move(found));
}

Residual verify_critical(const SparsePoly<Rational>& f) {
  Residual r{0.0, true};
  for (const auto& g : gradient(f)) {
    if (!g.is_zero()) r.exact_zero = false;
    r.value = std::max(r.value, std::fabs(g.to_double()));
  }
  return r;
}

double verify_critical(const SparsePoly<double>& f) {
  double m = 0.0;
  for (double g : gradient(f)) m = std::max(m, std::fabs(g));
  return m;
}

bool fixed_point_check(const SparsePoly<Rational>& f) {
  const auto m = moment_matrix(f);
  if (!m.is_diagonal()) throw DomainError("fixed-point check needs a diagonal moment matrix");
  // e^{m}.f has coefficient c_α·e^{⟨λ,α⟩}. After projective normalization by
  // the first term, c_α/c_first·e^{μ_α} equals c_α/c_first iff μ_α = 0.
  Rational first_exponent;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mu(0);
    for (int i = 0; i < f.nvars(); ++i) mu += m(i, i) * Rational(e[i]);
    if (first) {
      first_exponent = mu;
      first = false;
    } else if (mu != first_exponent) {
      return false;
    }
  }
  return true;
}

SparsePoly<double> torus_canonical(const SparsePoly<double>& f) {
  if (f.is_zero()) throw DegenerateError("torus canonical form of the zero polynomial");
  const int n = f.nvars();
  std::vector<ExponentVector> support;
  std::vector<double> coeff;
  for (const auto& [e, c] : f.terms()) {
    support.push_back(e);
    coeff.push_back(c);
  }
  // Magnitudes: greedy Q-independent rows (α, 1) become 1.
  std::vector<std::vector<Rational>> chosen;
  std::vector<size_t> chosen_idx;
  for (size_t t = 0; t < support.size(); ++t) {
    std::vector<Rational> row;
    for (int i = 0; i < n; ++i) row.emplace_back(support[t][i]);
    row.emplace_back(1);
    auto trial = chosen;
    trial.push_back(row);
    if (rows_independent(trial)) {
      chosen = std::move(trial);
      chosen_idx.push_back(t);
    }
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(chosen.size()), n + 1);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(chosen.size()));
  for (size_t r = 0; r < chosen.size(); ++r) {
    for (int c = 0; c <= n; ++c) a(static_cast<Eigen::Index>(r), c) = chosen[r][static_cast<size_t>(c)].to_double();
    rhs(static_cast<Eigen::Index>(r)) = -std::log(std::fabs(coeff[chosen_idx[r]]));
  }
  Eigen::VectorXd u = a.completeOrthogonalDecomposition().solve(rhs);
  // Signs: greedy GF(2)-independent rows (α mod 2, 1) become positive.
  Gf2Basis basis;
  unsigned flips = 0;  // bit i flips x_i, bit n flips the overall sign
  std::vector<std::pair<unsigned, bool>> constraints;
  for (size_t t = 0; t < support.size(); ++t) {
    unsigned v = 1U << n;
    for (int i = 0; i < n; ++i)
      if (support[t][i] % 2) v |= 1U << i;
    if (basis.insert(v, 1U << constraints.size())) constraints.emplace_back(v, coeff[t] < 0);
  }
  // Solve ⟨v_r, s⟩ = neg_r over GF(2) using the reduced basis.
  for (const auto& [reduced, combo] : basis.rows) {
    bool target = false;
    for (size_t r = 0; r < constraints.size(); ++r)
      if ((combo >> r) & 1U) target ^= constraints[r].second;
    if (target) flips |= reduced & (~reduced + 1);
  }
  SparsePoly<double> out(n, f.degree());
  for (size_t t = 0; t < support.size(); ++t) {
    double log_scale = u(n);
    int parity = (flips >> n) & 1U;
    for (int i = 0; i < n; ++i) {
      log_scale += u(i) * support[t][i];
      if ((flips >> i) & 1U) parity += support[t][i];
    }
    double mag = std::fabs(coeff[t]) * std::exp(log_scale);
    double sign = (coeff[t] < 0 ? -1.0 : 1.0) * (parity % 2 ? -1.0 : 1.0);
    out.add_term(support[t], sign * mag);
  }
  return out;
}

SparsePoly<double> torus_canonical(const SparsePoly<Rational>& f) { return torus_canonical(to_float(f)); }

bool sign_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol) {
  if (f.nvars() != g.nvars() || f.degree() != g.degree() || f.term_count() != g.term_count()) return false;
  const int n = f.nvars();
  for (unsigned mask = 0; mask < (1U << (n + 1)); ++mask) {
    bool ok = true;
    for (const auto& [e, c] : f.terms()) {
      auto it = g.terms().find(e);
      if (it == g.terms().end()) return false;
      int parity = (mask >> n) & 1U;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) parity += e[i];
      double flipped = parity % 2 ? -c : c;
      if (std::fabs(flipped - it->second) > tol * (1.0 + std::fabs(c))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool torus_permutation_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol) {
  if (f.nvars() != g.nvars() || f.degree() != g.degree() || f.term_count() != g.term_count()) return false;
  const auto cg = torus_canonical(g);
  for (const auto& p : all_permutations(f.nvars())) {
    auto pf = permute(p, f);
    if (support_of(pf) != support_of(g)) continue;
    if (sign_equivalent(torus_canonical(pf), cg, tol)) return true;
  }
  return false;
}

std::vector<FamilyReport> critical_points(int n, int d, int m, const SolveOptions& opts) {
  auto families = diagonal_families(n, d, m);
  std::vector<FamilyReport> out(families.size());
  parallel_for(families.size(), [&](size_t k) {
    out[k].family = families[k];
    out[k].solutions = solve_real(gradient_system(families[k]), opts);
  });
  return out;
}

}  // namespace momentforge
