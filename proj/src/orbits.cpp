#include "momentforge/orbits.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "momentforge/parallel.hpp"
#include "momentforge/symd.hpp"

namespace momentforge {

SupportSet make_support(std::vector<ExponentVector> monomials) {
  if (monomials.empty()) throw DomainError("support set must be non-empty");
  const int n = monomials.front().size();
  const int d = monomials.front().degree();
  for (const auto& e : monomials) {
    if (e.size() != n || e.degree() != d) throw DimensionError("support monomials differ in (n, d)");
    for (int v : e.values())
      if (v < 0) throw DimensionError("negative exponent");
  }
  std::sort(monomials.begin(), monomials.end(), CanonicalLess{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  return monomials;
}

bool RepresentativeLess::operator()(const SupportSet& a, const SupportSet& b) const {
  CanonicalLess less;
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (less(*ia, *ib)) return true;
    if (less(*ib, *ia)) return false;
  }
  return a.size() < b.size();
}

void validate_permutation(const Permutation& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation length differs from variable count");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)]) throw DomainError("not a permutation");
    seen[static_cast<size_t>(p)] = true;
  }
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ExponentVector permute(const Permutation& perm, const ExponentVector& e) {
  ExponentVector r(e.size());
  for (int i = 0; i < e.size(); ++i) r[perm[static_cast<size_t>(i)]] = e[i];
  return r;
}

SupportSet permute(const Permutation& perm, const SupportSet& s) {
  if (!s.empty()) validate_permutation(perm, s.front().size());
  SupportSet r;
  r.reserve(s.size());
  for (const auto& e : s) r.push_back(permute(perm, e));
  std::sort(r.begin(), r.end(), CanonicalLess{});
  return r;
}

SupportSet canonical_representative(const SupportSet& s) {
  if (s.empty()) return s;
  SupportSet best = s;
  for (const auto& p : all_permutations(s.front().size())) {
    SupportSet cand = permute(p, s);
    if (RepresentativeLess{}(cand, best)) best = std::move(cand);
  }
  return best;
}

int orbit_size(const SupportSet& s) {
  if (s.empty()) return 0;
  std::set<SupportSet, RepresentativeLess> images;
  for (const auto& p : all_permutations(s.front().size())) images.insert(permute(p, s));
  return static_cast<int>(images.size());
}

std::vector<OrbitRepresentative> orbit_classes(int n, int d, int m) {
  auto basis = basis_for(n, d);
  const int total = basis->size();
  if (m < 1 || m > total) throw DomainError("term count out of range for this basis");

  // Split the C(B, m) subsets by their smallest index so workers share nothing.
  std::vector<std::set<SupportSet, RepresentativeLess>> partial(static_cast<size_t>(total));
  parallel_for(static_cast<size_t>(total - m + 1), [&](size_t first) {
    auto& found = partial[first];
    std::vector<int> idx(static_cast<size_t>(m));
    idx[0] = static_cast<int>(first);
    for (int k = 1; k < m; ++k) idx[static_cast<size_t>(k)] = static_cast<int>(first) + k;
    while (true) {
      SupportSet s;
      for (int k : idx) s.push_back((*basis)[k]);
      found.insert(canonical_representative(s));
      // Advance positions 1..m-1 (position 0 stays fixed).
      int pos = m - 1;
      while (pos >= 1 && idx[static_cast<size_t>(pos)] == total - m + pos) --pos;
      if (pos < 1) break;
      ++idx[static_cast<size_t>(pos)];
      for (int k = pos + 1; k < m; ++k) idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
    }
  });
  std::set<SupportSet, RepresentativeLess> all;
  for (auto& p : partial) all.insert(p.begin(), p.end());
  std::vector<OrbitRepresentative> out;
  out.reserve(all.size());
  for (const auto& s : all) out.push_back({s});
  return out;
}

bool uses_all_variables(const SupportSet& s) {
  if (s.empty()) return false;
  for (int i = 0; i < s.front().size(); ++i) {
    bool used = std::any_of(s.begin(), s.end(), [i](const ExponentVector& e) { return e[i] > 0; });
    if (!used) return false;
  }
  return true;
}

ParamFamily build_family(const SupportSet& s) {
  if (s.size() < 2) throw DomainError("a family needs at least two monomials");
  SupportSet support = make_support(s);
  const int m = static_cast<int>(support.size());
  const int nsym = m - 1;
  SparsePoly<ParamScalar> poly(support.front().size(), support.front().degree());
  for (int k = 0; k < nsym; ++k) {
    poly.add_term(support[static_cast<size_t>(m - 1 - k)], ParamScalar::symbol(k, nsym));
  }
  poly.add_term(support.front(), ParamScalar(1).padded(nsym));
  return {std::move(support), std::move(poly)};
}

std::string support_string(const SupportSet& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += monomial_string(*it);
  }
  return out;
}

}  // namespace momentforge
