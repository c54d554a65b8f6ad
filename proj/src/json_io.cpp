#include "momentforge/json_io.hpp"

#include "momentforge/moment.hpp"
#include "momentforge/text_format.hpp"

namespace momentforge {

int AnyPoly::nvars() const {
  return std::visit([](const auto& f) { return f.nvars(); }, v_);
}

int AnyPoly::degree() const {
  return std::visit([](const auto& f) { return f.degree(); }, v_);
}

const SparsePoly<Rational>& AnyPoly::exact() const {
  if (!is_exact()) throw DomainError("polynomial does not have exact rational coefficients");
  return std::get<SparsePoly<Rational>>(v_);
}

const SparsePoly<ParamScalar>& AnyPoly::param() const {
  if (!is_param()) throw DomainError("polynomial has no parameters");
  return std::get<SparsePoly<ParamScalar>>(v_);
}

SparsePoly<double> AnyPoly::as_float() const {
  if (is_float()) return std::get<SparsePoly<double>>(v_);
  if (is_exact()) return to_float(exact());
  throw DomainError("parametric polynomial has no numeric value");
}

Json exponent_json(const ExponentVector& e) { return Json(e.values()); }

ExponentVector exponent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"exp\" must be an array of integers");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("\"exp\" must be an array of integers");
    v.push_back(x.get<int>());
  }
  return ExponentVector(std::move(v));
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("exact coefficient must be a \"p/q\" string or an integer");
}

ParamScalar params_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"params\" must be a list of terms");
  int nsym = 0;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp")) throw ParseError("parameter term needs \"exp\"");
    nsym = std::max(nsym, static_cast<int>(t["exp"].size()));
  }
  ParamScalar::TermMap terms;
  for (const auto& t : j) {
    ExponentVector e = exponent_from_json(t["exp"]);
    ParamScalar::Key key = e.values();
    for (int v : key)
      if (v < 0) throw ParseError("negative parameter exponent");
    key.resize(static_cast<size_t>(nsym), 0);
    Rational c = t.contains("coeff") ? rational_from_json(t["coeff"]) : Rational(1);
    terms[key] += c;
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  return ParamScalar::from_terms(nsym, std::move(terms));
}

template <class S>
Json terms_json(const SparsePoly<S>& f, auto&& coeff) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", exponent_json(e)}, {"coeff", coeff(c)}});
  return {{"n", f.nvars()}, {"d", f.degree()}, {"terms", terms}};
}

}  // namespace

AnyPoly poly_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
    for (const char* key : {"n", "d", "terms"})
      if (!j.contains(key)) throw ParseError(std::string("polynomial is missing \"") + key + "\"");
    if (!j["n"].is_number_integer() || !j["d"].is_number_integer())
      throw ParseError("\"n\" and \"d\" must be integers");
    int n = j["n"].get<int>();
    int d = j["d"].get<int>();
    if (!j["terms"].is_array()) throw ParseError("\"terms\" must be an array");

    bool any_float = false, any_param = false;
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
        throw ParseError("each term needs \"exp\" and \"coeff\"");
      const auto& c = t["coeff"];
      if (c.is_number_float()) any_float = true;
      else if (c.is_object()) any_param = true;
      else if (!c.is_string() && !c.is_number_integer()) throw ParseError("unrecognized coefficient");
    }
    if (any_float && any_param) throw ParseError("float and parametric coefficients cannot be mixed");

    if (any_float) {
      SparsePoly<double> f(n, d);
      for (const auto& t : j["terms"]) {
        const auto& c = t["coeff"];
        double v = c.is_number() ? c.get<double>() : rational_from_json(c).to_double();
        f.add_term(exponent_from_json(t["exp"]), v);
      }
      return AnyPoly(f);
    }
    if (any_param) {
      SparsePoly<ParamScalar> f(n, d);
      for (const auto& t : j["terms"]) {
        const auto& c = t["coeff"];
        ParamScalar v;
        if (c.is_object()) {
          if (!c.contains("params")) throw ParseError("object coefficient needs \"params\"");
          v = params_from_json(c["params"]);
        } else {
          v = ParamScalar(rational_from_json(c));
        }
        f.add_term(exponent_from_json(t["exp"]), v);
      }
      return AnyPoly(f);
    }
    SparsePoly<Rational> f(n, d);
    for (const auto& t : j["terms"]) f.add_term(exponent_from_json(t["exp"]), rational_from_json(t["coeff"]));
    return AnyPoly(f);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

AnyPoly poly_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return poly_from_json(j);
}

AnyPoly poly_from_text(const std::string& text, int n) {
  ParsedPoly p = parse_poly(text, n);
  if (p.has_radicals()) {
    if (p.has_params()) throw ParseError("radicals and parameters cannot be mixed");
    return AnyPoly(p.to_float());
  }
  if (p.has_params()) {
    AnyPoly out(p.to_param());
    if (p.general_symbols) out.symbol_names = general_symbol_names(n, p.d);
    return out;
  }
  return AnyPoly(p.to_exact());
}

Json poly_to_json(const SparsePoly<Rational>& f) {
  return terms_json(f, [](const Rational& c) { return Json(c.to_string()); });
}

Json poly_to_json(const SparsePoly<double>& f) {
  return terms_json(f, [](double c) { return Json(c); });
}

Json poly_to_json(const SparsePoly<ParamScalar>& f) {
  return terms_json(f, [](const ParamScalar& c) -> Json {
    if (c.is_constant()) return c.constant_term().to_string();
    Json terms = Json::array();
    for (const auto& [key, v] : c.terms()) terms.push_back({{"exp", key}, {"coeff", v.to_string()}});
    return {{"params", terms}};
  });
}

Json poly_to_json(const AnyPoly& f) {
  return std::visit([](const auto& p) { return poly_to_json(p); }, f.value());
}

}  // namespace momentforge
