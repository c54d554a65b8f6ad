#include "momentforge/text_format.hpp"

#include <cctype>
#include <cmath>
#include <map>

#include "momentforge/error.hpp"
#include "momentforge/symd.hpp"

namespace momentforge {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

class Parser {
 public:
  Parser(std::string_view text, int n, bool allow_variables)
      : text_(text), n_(n), allow_variables_(allow_variables) {}

  ParsedPoly parse() {
    ParsedPoly out;
    out.n = n_;
    skip_space();
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      ParsedTerm t = term();
      if (negative) t.rational = -t.rational;
      out.terms.push_back(std::move(t));
      first = false;
    }
    if (out.terms.empty()) fail("empty polynomial");
    out.d = out.terms.front().exponent.degree();
    for (const auto& t : out.terms)
      if (t.exponent.degree() != out.d) fail("terms of different degree");
    out.general_symbols = general_;
    out.nsym = general_ ? basis_for(n_, general_degree_)->size() : max_param_;
    for (auto& t : out.terms) t.params.resize(static_cast<size_t>(out.nsym), 0);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip_space();
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Rational number() {
    skip_space();
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    Rational r = Rational::parse(text_.substr(start, pos_ - start));
    // "p/q" binds as one number only when q is a plain integer.
    if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      r /= Rational(integer());
    }
    return r;
  }

  int exponent_suffix() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  void set_param(ParamScalar::Key& key, int index, int power) {
    if (key.size() <= static_cast<size_t>(index)) key.resize(static_cast<size_t>(index) + 1, 0);
    key[static_cast<size_t>(index)] += power;
  }

  // Multiplies one factor into t; divide applies it as a divisor.
  void factor(ParsedTerm& t, bool divide) {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r = number();
      int e = exponent_suffix();
      r = r.pow(static_cast<unsigned>(e));
      if (divide) {
        if (r.is_zero()) fail("division by zero");
        t.rational /= r;
      } else {
        t.rational *= r;
      }
      return;
    }
    if (c == '(') {
      ++pos_;
      Rational r = number();
      expect(')');
      int e = exponent_suffix();
      r = r.pow(static_cast<unsigned>(e));
      if (divide) t.rational /= r;
      else t.rational *= r;
      return;
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      Rational r = number();
      expect(')');
      if (r.sign() <= 0) fail("sqrt of a non-positive number");
      if (divide) {
        t.radicand /= r;
      } else {
        t.radicand *= r;
      }
      return;
    }
    if (divide) fail("only numbers and square roots may divide");
    if (c == 'b' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      int index = integer();
      if (index < 1) fail("parameter indices start at 1");
      max_param_ = std::max(max_param_, index);
      set_param(t.params, index - 1, exponent_suffix());
      return;
    }
    if (c == 'a' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      pos_ += 2;
      std::vector<int> alpha{integer()};
      while (true) {
        skip_space();
        if (peek() == ']') break;
        expect(',');
        alpha.push_back(integer());
      }
      ++pos_;
      if (static_cast<int>(alpha.size()) != n_) fail("coefficient name has the wrong length");
      ExponentVector e(alpha);
      if (general_ && e.degree() != general_degree_) fail("coefficient names of different degrees");
      general_ = true;
      general_degree_ = e.degree();
      int index = basis_for(n_, general_degree_)->index_of(e);
      set_param(t.params, index, exponent_suffix());
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!allow_variables_) fail("variables are not allowed here");
      size_t start = pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int var = -1;
      for (int i = 0; i < n_; ++i)
        if (variable_name(i, n_) == name) var = i;
      if (var < 0) fail("unknown variable '" + name + "'");
      t.exponent[var] += exponent_suffix();
      return;
    }
    fail("unexpected character");
  }

  ParsedTerm term() {
    ParsedTerm t;
    t.exponent = ExponentVector(n_);
    factor(t, false);
    while (true) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        factor(t, false);
      } else if (peek() == '/') {
        ++pos_;
        factor(t, true);
      } else {
        break;
      }
    }
    // Fold perfect squares out of the radicand.
    if (auto r = rational_sqrt(t.radicand)) {
      t.rational *= *r;
      t.radicand = Rational(1);
    }
    return t;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int n_;
  bool allow_variables_;
  int max_param_ = 0;
  bool general_ = false;
  int general_degree_ = 0;
};

}  // namespace

bool ParsedPoly::has_params() const {
  for (const auto& t : terms)
    for (int p : t.params)
      if (p != 0) return true;
  return false;
}

bool ParsedPoly::has_radicals() const {
  for (const auto& t : terms)
    if (t.radicand != Rational(1)) return true;
  return false;
}

SparsePoly<double> ParsedPoly::to_float() const {
  if (has_params()) throw DomainError("polynomial has parameters");
  SparsePoly<double> f(n, d);
  for (const auto& t : terms) f.add_term(t.exponent, t.rational.to_double() * std::sqrt(t.radicand.to_double()));
  return f;
}

SparsePoly<Rational> ParsedPoly::to_exact() const {
  if (has_params()) throw DomainError("polynomial has parameters");
  if (has_radicals()) throw DomainError("polynomial has irrational coefficients");
  SparsePoly<Rational> f(n, d);
  for (const auto& t : terms) f.add_term(t.exponent, t.rational);
  return f;
}

SparsePoly<ParamScalar> ParsedPoly::to_param() const {
  if (has_radicals()) throw DomainError("polynomial has irrational coefficients");
  SparsePoly<ParamScalar> f(n, d);
  for (const auto& t : terms) f.add_term(t.exponent, ParamScalar::from_terms(nsym, {{t.params, t.rational}}));
  return f;
}

ParsedPoly parse_poly(std::string_view text, int n) {
  if (n < 1) throw DimensionError("polynomial needs at least one variable");
  return Parser(text, n, true).parse();
}

ParamScalar parse_param_scalar(std::string_view text, int n, int d) {
  ParsedPoly p = Parser(text, n, false).parse();
  if (p.has_radicals()) throw ParseError("irrational coefficient in a parameter expression");
  int nsym = p.general_symbols ? basis_for(n, d)->size() : p.nsym;
  if (p.general_symbols && p.nsym != nsym) throw ParseError("coefficient names of an unexpected degree");
  ParamScalar out = ParamScalar(0).padded(nsym);
  for (auto& t : p.terms) {
    auto key = t.params;
    key.resize(static_cast<size_t>(nsym), 0);
    out += ParamScalar::from_terms(nsym, {{key, t.rational}});
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\n");
    size_t b = s.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  cur = trim(cur);
  if (!cur.empty()) out.push_back(cur);
  for (auto& s : out) s = trim(s);
  return out;
}

}  // namespace momentforge
