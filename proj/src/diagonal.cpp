#include "momentforge/diagonal.hpp"

#include <random>

#include "momentforge/moment.hpp"
#include "momentforge/parallel.hpp"

namespace momentforge {

namespace {

std::optional<std::vector<Rational>> find_witness(const std::vector<OffDiagonalEntry>& entries, int nsym) {
  auto hits = [&](const std::vector<Rational>& v) {
    for (const auto& e : entries)
      if (!e.numerator.evaluate(v).is_zero()) return true;
    return false;
  };
  // Small grid first so witnesses are readable, then random rationals.
  std::vector<Rational> v(static_cast<size_t>(nsym), Rational(1));
  const int grid[] = {1, -1, 2, -2, 3};
  const size_t grid_size = std::size(grid);
  size_t combos = 1;
  for (int k = 0; k < nsym; ++k) combos *= grid_size;
  for (size_t c = 0; c < combos; ++c) {
    size_t rest = c;
    for (int k = 0; k < nsym; ++k) {
      v[static_cast<size_t>(k)] = Rational(grid[rest % grid_size]);
      rest /= grid_size;
    }
    if (hits(v)) return v;
  }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(1, 97);
  std::uniform_int_distribution<int> den(1, 31);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    for (auto& x : v) x = Rational(neg(rng) ? -num(rng) : num(rng)) / Rational(den(rng));
    if (hits(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

DiagonalVerdict is_identically_diagonal(const ParamFamily& fam) {
  DiagonalVerdict verdict{fam, true, {}, std::nullopt};
  const auto sm = symbolic_moment(fam.poly);
  for (int i = 0; i < sm.n; ++i)
    for (int j = i + 1; j < sm.n; ++j)
      if (!sm.numerators(i, j).is_zero()) verdict.offending_entries.push_back({i, j, sm.numerators(i, j)});
  verdict.is_diagonal = verdict.offending_entries.empty();
  if (!verdict.is_diagonal) verdict.witness = find_witness(verdict.offending_entries, fam.num_params());
  return verdict;
}

bool diagonal_at(const ParamFamily& fam, const std::vector<Rational>& values) {
  return hermitian_matrix(family_member(fam, values)).is_diagonal();
}

std::vector<DiagonalVerdict> classify_families(int n, int d, int m) {
  if (m < 2) throw DomainError("diagonal classification needs at least two terms");
  std::vector<SupportSet> supports;
  for (const auto& rep : orbit_classes(n, d, m))
    if (uses_all_variables(rep.support)) supports.push_back(rep.support);
  std::vector<std::optional<DiagonalVerdict>> slots(supports.size());
  parallel_for(supports.size(), [&](size_t k) { slots[k] = is_identically_diagonal(build_family(supports[k])); });
  std::vector<DiagonalVerdict> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<ParamFamily> diagonal_families(int n, int d, int m) {
  std::vector<ParamFamily> out;
  for (auto& v : classify_families(n, d, m))
    if (v.is_diagonal) out.push_back(std::move(v.family));
  return out;
}

}  // namespace momentforge
