#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "momentforge/param_scalar.hpp"
#include "momentforge/sparse_poly.hpp"

namespace momentforge {

/// One parsed term: rational·√radicand·(parameter monomial)·x^exponent.
struct ParsedTerm {
  ExponentVector exponent;
  Rational rational{1};
  Rational radicand{1};
  ParamScalar::Key params;
};

/// Homogeneous form in the text syntax used by the fixtures and the CLI,
/// e.g. "sqrt(72)*x*y*z^2 + y^4", "b1*x^2*z + x*y^2", "36*a[4,0,0]^2".
/// Variables are x, y, z for n <= 3 and x1..xn otherwise. Parameter names
/// b1, b2, … and general coefficient names a[α₁,…,αₙ] are accepted.
struct ParsedPoly {
  int n = 0;
  int d = 0;
  std::vector<ParsedTerm> terms;
  /// Number of symbols in use: max b index, or the basis size when a[…]
  /// names occur.
  int nsym = 0;
  bool general_symbols = false;

  bool has_params() const;
  bool has_radicals() const;

  SparsePoly<double> to_float() const;
  /// Throws DomainError when a coefficient is irrational or parametric.
  SparsePoly<Rational> to_exact() const;
  /// Throws DomainError when a coefficient is irrational.
  SparsePoly<ParamScalar> to_param() const;
};

/// Throws ParseError on malformed input or inconsistent degrees.
ParsedPoly parse_poly(std::string_view text, int n);

/// Parses a scalar expression in parameter symbols (no variables), e.g. a
/// printed entry of the quartic moment matrix. d of the result is 0.
ParamScalar parse_param_scalar(std::string_view text, int n, int d);

/// Splits "x^3, x^2*y, …" on top-level commas.
std::vector<std::string> split_list(std::string_view text);

}  // namespace momentforge
