#include "momentforge/sparse_poly.hpp"

namespace momentforge {

namespace {

std::string join_sign(bool negative, bool first) {
  if (first) return negative ? "-" : "";
  return negative ? " - " : " + ";
}

}  // namespace

std::string coefficient_prefix(const Rational& c, bool first, bool unit_monomial) {
  Rational mag = c.abs();
  std::string s = join_sign(c.sign() < 0, first);
  if (unit_monomial) return s + mag.to_string();
  if (mag != Rational(1)) s += mag.to_string() + "*";
  return s;
}

std::string coefficient_prefix(double c, bool first, bool unit_monomial) {
  double mag = c < 0 ? -c : c;
  std::string s = join_sign(c < 0, first);
  if (unit_monomial) return s + format_double(mag);
  std::string text = format_double(mag);
  if (text != "1") s += text + "*";
  return s;
}

std::string coefficient_prefix(const ParamScalar& c, bool first, bool unit_monomial) {
  if (c.is_constant()) return coefficient_prefix(c.constant_term(), first, unit_monomial);
  if (c.terms().size() == 1) {
    const auto& [k, v] = *c.terms().begin();
    ParamScalar mono = ParamScalar::from_terms(c.nsym(), {{k, Rational(1)}});
    std::string s = coefficient_prefix(v, first, false) + mono.to_string();
    return unit_monomial ? s : s + "*";
  }
  std::string s = (first ? "(" : " + (") + c.to_string() + ")";
  return unit_monomial ? s : s + "*";
}

}  // namespace momentforge
