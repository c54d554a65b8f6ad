#include "momentforge/symd.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace momentforge {

namespace {

void fill(int n, int var, int remaining, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (var == n - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[var] = k;
    fill(n, var + 1, remaining - k, cur, out);
  }
}

const Rational& cached_factorial(int k) {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> t;
    for (int i = 0; i <= 40; ++i) t.push_back(factorial(i));
    return t;
  }();
  if (k < static_cast<int>(table.size())) return table[static_cast<size_t>(k)];
  thread_local Rational big;
  big = factorial(k);
  return big;
}

}  // namespace

std::vector<ExponentVector> all_monomials(int n, int d) {
  if (n < 1) throw DimensionError("need at least one variable");
  if (d < 0) throw DimensionError("negative degree");
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  fill(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

Rational weight(const ExponentVector& alpha) {
  Rational num(1);
  for (int a : alpha.values()) num *= cached_factorial(a);
  return num / cached_factorial(alpha.degree());
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) throw DimensionError("monomial basis needs n >= 1 and d >= 1");
  monomials_ = all_monomials(n, d);
  weights_.reserve(monomials_.size());
  for (const auto& e : monomials_) weights_.push_back(momentforge::weight(e));
}

int MonomialBasis::index_of(const ExponentVector& e) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), e, CanonicalLess{});
  if (it == monomials_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - monomials_.begin());
}

std::shared_ptr<const MonomialBasis> basis_for(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, d);
  return slot;
}

std::vector<RationalFunction> projective_normalize(const CoefficientVector<ParamScalar>& v) {
  for (const auto& c : v.entries) {
    if (c.is_zero()) continue;
    std::vector<RationalFunction> out;
    out.reserve(v.entries.size());
    for (const auto& x : v.entries) out.emplace_back(x, c);
    return out;
  }
  throw DegenerateError("cannot normalize the zero vector");
}

}  // namespace momentforge
