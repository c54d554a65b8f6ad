#include "momentforge/upoly.hpp"

#include <algorithm>
#include <utility>

#include "momentforge/error.hpp"

namespace momentforge {

namespace {

// Divides by a positive rational so coefficients become coprime integers;
// the sign pattern is preserved.
UPoly positive_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class n = abs(c.numerator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c * scale);
  return UPoly(std::move(out));
}

int variations(const std::vector<UPoly>& seq, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_param(const ParamScalar& p, int sym) {
  UPoly r;
  for (const auto& [key, c] : p.terms()) {
    for (size_t s = 0; s < key.size(); ++s)
      if (static_cast<int>(s) != sym && key[s] != 0) throw DomainError("polynomial is not univariate");
    int k = sym < static_cast<int>(key.size()) ? key[static_cast<size_t>(sym)] : 0;
    r += monomial(k, c);
  }
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = lead().inverse();
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * inv);
  return UPoly(std::move(v));
}

UPoly UPoly::primitive() const {
  UPoly p = positive_primitive(*this);
  return p.lead().sign() < 0 ? -p : p;
}

int UPoly::trailing_zero_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<size_t>(k)].is_zero()) ++k;
  return is_zero() ? 0 : k;
}

UPoly UPoly::shift_down(int k) const {
  if (k <= 0 || is_zero()) return *this;
  return UPoly(std::vector<Rational>(c_.begin() + std::min<long>(k, static_cast<long>(c_.size())), c_.end()));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = a == Rational(1);
    if (k == 0 || !unit) out += a.to_string();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational inv = b.lead().inverse();
  std::vector<Rational> quot(static_cast<size_t>(std::max(a.degree() - db + 1, 0)), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<size_t>(k)];
    if (top.is_zero()) continue;
    Rational q = top * inv;
    quot[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_divide(const UPoly& a, const UPoly& b) {
  auto dm = divmod(a, b);
  if (!dm.remainder.is_zero()) throw DomainError("inexact polynomial division");
  return dm.quotient;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = positive_primitive(a);
  UPoly y = positive_primitive(b);
  while (!y.is_zero()) {
    UPoly r = positive_primitive(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly(1);
  UPoly g = gcd(p, p.derivative());
  return exact_divide(p, g).primitive();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_primitive(p));
  UPoly d = positive_primitive(p.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = positive_primitive(-divmod(seq[seq.size() - 2], seq.back()).remainder);
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int count_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi) {
  return variations(sturm, lo) - variations(sturm, hi);
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  const Rational lead = p.lead().abs();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, p.coefficient(k).abs() / lead);
  return m + Rational(2);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& input) {
  std::vector<RootInterval> out;
  if (input.degree() <= 0) return out;
  const UPoly p = squarefree_part(input);
  const auto sturm = sturm_sequence(p);
  const Rational bound = root_bound(p);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    // Roots in the open interval (lo, hi).
    int c = count_roots(sturm, lo, hi) - (p.sign_at(hi) == 0 ? 1 : 0);
    if (c == 0) continue;
    if (c == 1 && p.sign_at(lo) != 0 && p.sign_at(hi) != 0) {
      out.push_back({lo, hi, false});
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (p.sign_at(mid) == 0) out.push_back({mid, mid, true});
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine(const UPoly& p, RootInterval iv, const Rational& max_width) {
  if (iv.exact) return iv;
  int slo = p.sign_at(iv.lo);
  while (iv.width() > max_width) {
    Rational mid = (iv.lo + iv.hi) / Rational(2);
    int s = p.sign_at(mid);
    if (s == 0) return {mid, mid, true};
    if (s == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  int sign = 1;
  UPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return UPoly();
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<UPoly> split_bivariate(const ParamScalar& p, int elim, int keep) {
  std::vector<UPoly> out;
  for (const auto& [key, c] : p.terms()) {
    for (size_t s = 0; s < key.size(); ++s) {
      int si = static_cast<int>(s);
      if (si != elim && si != keep && key[s] != 0) throw DomainError("polynomial involves a third symbol");
    }
    auto at = [&key](int s) { return s < static_cast<int>(key.size()) ? key[static_cast<size_t>(s)] : 0; };
    size_t e = static_cast<size_t>(at(elim));
    if (out.size() <= e) out.resize(e + 1);
    out[e] += UPoly::monomial(at(keep), c);
  }
  return out;
}

UPoly resultant(const ParamScalar& p, const ParamScalar& q, int elim, int keep) {
  auto a = split_bivariate(p, elim, keep);
  auto b = split_bivariate(q, elim, keep);
  if (a.empty() || b.empty()) return UPoly();
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) return UPoly(1);
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = b[static_cast<size_t>(n - k)];
  return bareiss_determinant(std::move(syl));
}

}  // namespace momentforge
