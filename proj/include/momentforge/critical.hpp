#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentforge/orbits.hpp"
#include "momentforge/rational_function.hpp"
#include "momentforge/upoly.hpp"

namespace momentforge {

/// Numerators of ∂‖m‖²/∂a_α over the full basis (canonical order), on a family.
struct GradientSystem {
  ParamFamily family;
  /// Primitive numerators; identically zero components stay as zero.
  std::vector<ParamScalar> equations;
  std::vector<ParamScalar> denominators;
  /// Parameter symbol indices, 0-based (b₁ is 0).
  std::vector<int> unknowns;
};

GradientSystem gradient_system(const ParamFamily& fam);

/// Real algebraic number given by a squarefree polynomial and an isolating
/// interval. Minimal polynomials are detected for rationals and square roots
/// of rationals; otherwise the defining polynomial is kept.
struct AlgebraicNumber {
  UPoly minimal_polynomial;
  RootInterval interval;
  double approx = 0.0;

  /// p squarefree with exactly one root in iv.
  static AlgebraicNumber from_root(const UPoly& p, const RootInterval& iv);
  static AlgebraicNumber from_rational(const Rational& r);

  std::optional<Rational> rational_value() const;
  /// c when this is ±√c with c rational and not a square.
  std::optional<Rational> square() const;
  AlgebraicNumber negated() const;
  /// "3/2", "sqrt(2)", "-sqrt(1/3)", or "root(poly in [lo, hi])".
  std::string to_string() const;
};

struct ParamValue {
  std::optional<AlgebraicNumber> exact;
  double approx = 0.0;
};

struct CriticalSolution {
  ParamFamily family;
  std::vector<ParamValue> values;
  /// max |∂‖m‖²/∂a_α| at the point, in doubles.
  double residual = 0.0;
  /// Every value rational and the exact gradient vanishes.
  bool exact_zero = false;
  /// Found by Newton on a singular Jacobian: the point lies on a curve or
  /// surface of critical points.
  bool positive_dimensional = false;
  SparsePoly<double> canonical_form{1, 1};
  std::string method;

  std::vector<double> approx_values() const;
  SparsePoly<double> member() const;
  /// Member with exact coefficients; empty unless every value is rational.
  std::optional<SparsePoly<Rational>> exact_member() const;
};

struct SolveOptions {
  double tolerance = 1e-9;
  int newton_grid = 11;
  double newton_box = 3.0;
};

/// Real critical points of ‖m‖² in the family with all parameters nonzero,
/// merged modulo sign changes of the coordinates. Throws UnsupportedError
/// for more than three unknowns.
std::vector<CriticalSolution> solve_real(const GradientSystem& sys, const SolveOptions& opts = {});

struct Residual {
  double value = 0.0;
  bool exact_zero = false;
};

/// Max |gradient entry|; exact zero detection for rational input.
Residual verify_critical(const SparsePoly<Rational>& f);
double verify_critical(const SparsePoly<double>& f);

/// Whether e^{m(f)} fixes f projectively, decided exactly by comparing the
/// exponents of e termwise. Throws DomainError unless m(f) is diagonal.
bool fixed_point_check(const SparsePoly<Rational>& f);

/// Coordinate and overall rescaling making a greedy independent subset of
/// the coefficients ±1 (+1 where a sign change of coordinates allows).
SparsePoly<double> torus_canonical(const SparsePoly<double>& f);
SparsePoly<double> torus_canonical(const SparsePoly<Rational>& f);

/// Same support and coefficients within tol after some coordinate sign
/// change and overall sign.
bool sign_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol);

/// g equals σ·f up to torus_canonical for some permutation σ; compares
/// canonical coefficients within relative tolerance tol.
bool torus_permutation_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol);

struct FamilyReport {
  ParamFamily family;
  std::vector<CriticalSolution> solutions;
};

/// Diagonal m-term families and their critical points; families with no
/// solutions are kept (rejected list).
std::vector<FamilyReport> critical_points(int n, int d, int m, const SolveOptions& opts = {});

}  // namespace momentforge
