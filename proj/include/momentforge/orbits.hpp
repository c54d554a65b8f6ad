#pragma once

#include <string>
#include <vector>

#include "momentforge/exponent.hpp"
#include "momentforge/param_scalar.hpp"
#include "momentforge/sparse_poly.hpp"

namespace momentforge {

/// Monomial support of a form: ascending canonical order, no duplicates,
/// common (n, d).
using SupportSet = std::vector<ExponentVector>;

/// Sorts, deduplicates and validates a list of exponent vectors.
SupportSet make_support(std::vector<ExponentVector> monomials);

template <class S>
SupportSet support_of(const SparsePoly<S>& f) {
  SupportSet s;
  for (const auto& [e, c] : f.terms()) s.push_back(e);
  return s;
}

/// Order on supports used to pick orbit representatives: both sides are
/// read from their canonically largest monomial down and compared
/// lexicographically. (This is how the printed 𝒯 lists order sums.)
struct RepresentativeLess {
  bool operator()(const SupportSet& a, const SupportSet& b) const;
};

/// σ maps variable i to variable perm[i] (0-based).
using Permutation = std::vector<int>;

/// Throws DomainError unless perm is a bijection of {0..n-1}.
void validate_permutation(const Permutation& perm, int n);
std::vector<Permutation> all_permutations(int n);

ExponentVector permute(const Permutation& perm, const ExponentVector& e);
SupportSet permute(const Permutation& perm, const SupportSet& s);

template <class S>
SparsePoly<S> permute(const Permutation& perm, const SparsePoly<S>& f) {
  validate_permutation(perm, f.nvars());
  SparsePoly<S> r(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms()) r.add_term(permute(perm, e), c);
  return r;
}

/// Minimum of the 𝔖ₙ-orbit of s under RepresentativeLess.
SupportSet canonical_representative(const SupportSet& s);
/// Number of distinct supports in the orbit of s.
int orbit_size(const SupportSet& s);

struct OrbitRepresentative {
  SupportSet support;
  int term_count() const { return static_cast<int>(support.size()); }
};

/// 𝒯_m: one representative per orbit of m-element supports in Sym^d, sorted
/// by RepresentativeLess. Throws DomainError unless 1 <= m <= |basis|.
std::vector<OrbitRepresentative> orbit_classes(int n, int d, int m);

/// True iff every variable has a positive exponent in some member.
bool uses_all_variables(const SupportSet& s);

/// Σ b_k m^{α_k} + m^{α_last}: terms in display order get b₁..b_{m−1}, the
/// canonically smallest term gets coefficient 1.
struct ParamFamily {
  SupportSet support;
  SparsePoly<ParamScalar> poly{1, 0};

  int num_params() const { return static_cast<int>(support.size()) - 1; }
  /// Display-order monomial that carries parameter k (0-based).
  const ExponentVector& param_monomial(int k) const {
    return support[support.size() - 1 - static_cast<size_t>(k)];
  }
  std::string to_string() const { return momentforge::to_string(poly); }
};

/// Throws DomainError for supports with fewer than two monomials.
ParamFamily build_family(const SupportSet& s);

/// Family member at concrete parameter values.
template <class S>
SparsePoly<S> family_member(const ParamFamily& fam, const std::vector<S>& values) {
  if (static_cast<int>(values.size()) != fam.num_params())
    throw DomainError("parameter value count differs from family parameter count");
  const int n = fam.poly.nvars();
  SparsePoly<S> r(n, fam.poly.degree());
  for (int k = 0; k < fam.num_params(); ++k) r.add_term(fam.param_monomial(k), values[static_cast<size_t>(k)]);
  r.add_term(fam.support.front(), S(1));
  return r;
}

std::string support_string(const SupportSet& s);

}  // namespace momentforge
