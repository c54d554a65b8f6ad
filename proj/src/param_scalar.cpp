#include "momentforge/param_scalar.hpp"

#include <algorithm>
#include <cmath>

#include "momentforge/error.hpp"

namespace momentforge {

ParamScalar::ParamScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Key{}, c);
}

ParamScalar ParamScalar::symbol(int index, int nsym) {
  if (index < 0 || index >= nsym) throw DimensionError("parameter symbol index out of range");
  ParamScalar s;
  s.nsym_ = nsym;
  Key k(static_cast<size_t>(nsym), 0);
  k[static_cast<size_t>(index)] = 1;
  s.terms_.emplace(std::move(k), Rational(1));
  return s;
}

ParamScalar ParamScalar::from_terms(int nsym, TermMap terms) {
  ParamScalar s;
  s.nsym_ = nsym;
  for (auto& [k, c] : terms) {
    if (static_cast<int>(k.size()) != nsym) throw DimensionError("parameter key length mismatch");
    if (!c.is_zero()) s.terms_.emplace(k, c);
  }
  return s;
}

bool ParamScalar::is_constant() const {
  for (const auto& [k, c] : terms_)
    for (int e : k)
      if (e != 0) return false;
  return true;
}

Rational ParamScalar::constant_term() const {
  return coefficient(Key(static_cast<size_t>(nsym_), 0));
}

Rational ParamScalar::coefficient(const Key& key) const {
  Key k = key;
  k.resize(static_cast<size_t>(nsym_), 0);
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamScalar::total_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

int ParamScalar::degree_in(int symbol) const {
  int deg = -1;
  for (const auto& [k, c] : terms_)
    deg = std::max(deg, symbol < nsym_ ? k[static_cast<size_t>(symbol)] : 0);
  return deg;
}

std::vector<int> ParamScalar::occurring_symbols() const {
  std::vector<int> out;
  for (int i = 0; i < nsym_; ++i)
    if (degree_in(i) > 0) out.push_back(i);
  return out;
}

void ParamScalar::pad_to(int nsym) {
  if (nsym <= nsym_) return;
  TermMap padded;
  for (auto& [k, c] : terms_) {
    Key nk = k;
    nk.resize(static_cast<size_t>(nsym), 0);
    padded.emplace(std::move(nk), c);
  }
  terms_ = std::move(padded);
  nsym_ = nsym;
}

void ParamScalar::add_term(Key key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.nsym_ > nsym_) pad_to(o.nsym_);
  for (const auto& [k, c] : o.terms_) {
    Key nk = k;
    nk.resize(static_cast<size_t>(nsym_), 0);
    add_term(std::move(nk), c);
  }
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  if (o.nsym_ > nsym_) pad_to(o.nsym_);
  for (const auto& [k, c] : o.terms_) {
    Key nk = k;
    nk.resize(static_cast<size_t>(nsym_), 0);
    add_term(std::move(nk), -c);
  }
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r;
  r.nsym_ = std::max(a.nsym_, b.nsym_);
  if (a.is_zero() || b.is_zero()) return r;
  const auto n = static_cast<size_t>(r.nsym_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      ParamScalar::Key k(n, 0);
      for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      r.add_term(std::move(k), ca * cb);
    }
  }
  return r;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  *this = *this * o;
  return *this;
}

ParamScalar& ParamScalar::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

ParamScalar ParamScalar::pow(unsigned e) const {
  ParamScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.nsym_ == b.nsym_) return a.terms_ == b.terms_;
  ParamScalar diff = a;
  diff -= b;
  return diff.is_zero();
}

ParamScalar ParamScalar::derivative(int symbol) const {
  ParamScalar r;
  r.nsym_ = nsym_;
  if (symbol >= nsym_) return r;
  const auto s = static_cast<size_t>(symbol);
  for (const auto& [k, c] : terms_) {
    if (k[s] == 0) continue;
    Key nk = k;
    nk[s] -= 1;
    r.add_term(std::move(nk), c * Rational(k[s]));
  }
  return r;
}

Rational ParamScalar::evaluate(const std::vector<Rational>& values) const {
  for (int s : occurring_symbols())
    if (s >= static_cast<int>(values.size())) throw DomainError("missing value for parameter symbol");
  Rational total;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) t *= values[i].pow(static_cast<unsigned>(k[i]));
    total += t;
  }
  return total;
}

double ParamScalar::evaluate(const std::vector<double>& values) const {
  for (int s : occurring_symbols())
    if (s >= static_cast<int>(values.size())) throw DomainError("missing value for parameter symbol");
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double t = c.to_double();
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) t *= std::pow(values[i], k[i]);
    total += t;
  }
  return total;
}

ParamScalar ParamScalar::substitute(const std::vector<ParamScalar>& images) const {
  for (int s : occurring_symbols())
    if (s >= static_cast<int>(images.size())) throw DomainError("missing image for parameter symbol");
  ParamScalar total;
  for (const auto& [k, c] : terms_) {
    ParamScalar t(c);
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) t *= images[i].pow(static_cast<unsigned>(k[i]));
    total += t;
  }
  return total;
}

Rational ParamScalar::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& [k, c] : terms_) {
    mpz_class num = c.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_class den = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return Rational(g, l);
}

ParamScalar::Key ParamScalar::leading_key() const {
  if (terms_.empty()) throw DegenerateError("zero polynomial has no leading term");
  const Key* lead = nullptr;
  int lead_deg = -1;
  for (const auto& [k, v] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    if (s > lead_deg || (s == lead_deg && *lead < k)) {
      lead = &k;
      lead_deg = s;
    }
  }
  return *lead;
}

ParamScalar ParamScalar::padded(int nsym) const {
  ParamScalar r = *this;
  r.pad_to(nsym);
  return r;
}

ParamScalar ParamScalar::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (terms_.at(leading_key()).sign() < 0) c = -c;
  ParamScalar r = *this;
  r *= c.inverse();
  return r;
}

ParamScalar::Key ParamScalar::monomial_gcd() const {
  Key g(static_cast<size_t>(nsym_), 0);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      g = k;
      first = false;
    } else {
      for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], k[i]);
    }
  }
  return g;
}

ParamScalar ParamScalar::divide_monomial(const Key& key) const {
  ParamScalar r;
  r.nsym_ = nsym_;
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    for (size_t i = 0; i < key.size() && i < nk.size(); ++i) {
      nk[i] -= key[i];
      if (nk[i] < 0) throw DomainError("monomial does not divide parameter polynomial");
    }
    r.terms_.emplace(std::move(nk), c);
  }
  return r;
}

std::string ParamScalar::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a.first) da += e;
    for (int e : b.first) db += e;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [k, c] : ordered) {
    std::string mono;
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "b" + std::to_string(i + 1);
      if (k[i] > 1) mono += "^" + std::to_string(k[i]);
    }
    Rational mag = c.abs();
    std::string term;
    if (mono.empty()) {
      term = mag.to_string();
    } else if (mag == Rational(1)) {
      term = mono;
    } else {
      term = mag.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + term;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace momentforge
