#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "momentforge/sparse_poly.hpp"

namespace momentforge {

using Json = nlohmann::json;

/// A polynomial read from user input: exact, float or parametric.
class AnyPoly {
 public:
  using Value = std::variant<SparsePoly<Rational>, SparsePoly<double>, SparsePoly<ParamScalar>>;

  explicit AnyPoly(Value v) : v_(std::move(v)) {}

  bool is_exact() const { return std::holds_alternative<SparsePoly<Rational>>(v_); }
  bool is_float() const { return std::holds_alternative<SparsePoly<double>>(v_); }
  bool is_param() const { return std::holds_alternative<SparsePoly<ParamScalar>>(v_); }
  int nvars() const;
  int degree() const;

  const SparsePoly<Rational>& exact() const;
  const SparsePoly<ParamScalar>& param() const;
  /// Float view; throws DomainError for parametric input.
  SparsePoly<double> as_float() const;
  const Value& value() const { return v_; }

  /// Display names of the parameter symbols; empty means b1, b2, ...
  std::vector<std::string> symbol_names;

 private:
  Value v_;
};

/// {"n", "d", "terms": [{"exp": [...], "coeff": ...}]}. A coefficient is a
/// "p/q" string, a JSON number, or {"params": [{"exp": [...], "coeff": "p/q"}]}
/// for a polynomial in b1, b2, ... Terms may repeat; they are summed.
/// Throws ParseError.
AnyPoly poly_from_json(const Json& j);
AnyPoly poly_from_json_text(const std::string& text);
/// Text syntax of parse_poly; irrational coefficients give a float poly.
AnyPoly poly_from_text(const std::string& text, int n);

/// Terms in canonical order. Float coefficients keep full precision so that
/// reading the output back gives the same polynomial.
Json poly_to_json(const SparsePoly<Rational>& f);
Json poly_to_json(const SparsePoly<double>& f);
Json poly_to_json(const SparsePoly<ParamScalar>& f);
Json poly_to_json(const AnyPoly& f);

Json exponent_json(const ExponentVector& e);
ExponentVector exponent_from_json(const Json& j);

}  // namespace momentforge
