#pragma once

#include <optional>
#include <vector>

#include "momentforge/orbits.hpp"

namespace momentforge {

struct OffDiagonalEntry {
  int i = 0;
  int j = 0;
  ParamScalar numerator;
};

struct DiagonalVerdict {
  ParamFamily family;
  bool is_diagonal = false;
  /// Upper-triangle entries whose numerator is not identically zero.
  std::vector<OffDiagonalEntry> offending_entries;
  /// For non-diagonal families: parameter values, all nonzero, at which
  /// some off-diagonal entry is nonzero.
  std::optional<std::vector<Rational>> witness;
};

DiagonalVerdict is_identically_diagonal(const ParamFamily& fam);

/// True when m(f) is off-diagonal free at these parameter values.
bool diagonal_at(const ParamFamily& fam, const std::vector<Rational>& values);

/// Families of m-term supports that use every variable and have identically
/// diagonal moment matrices, in representative order. Throws DomainError
/// for m < 2.
std::vector<ParamFamily> diagonal_families(int n, int d, int m);

/// Verdicts for every all-variable family with m terms (diagonal or not).
std::vector<DiagonalVerdict> classify_families(int n, int d, int m);

}  // namespace momentforge
