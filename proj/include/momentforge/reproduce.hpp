#pragma once

#include <string>
#include <vector>

#include "momentforge/critical.hpp"

namespace momentforge {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::string case_name;
  std::vector<CheckResult> checks;
  /// Findings that are reported but not compared (extra critical points,
  /// two-term quartic diagonal families).
  std::vector<std::string> notes;

  bool all_match() const;
};

/// Runs the full pipeline for "cubics", "quartics" or "all" and compares it
/// with the embedded fixtures. Throws DomainError for other names.
ReproduceReport reproduce_paper(const std::string& which);

/// Support set of a monomial-sum text such as "x^2*z + x*y^2".
SupportSet support_from_text(const std::string& text, int n);

/// f and g agree after a coordinate permutation, coordinate sign changes and
/// an overall nonzero scale; coefficients compared within relative tol.
bool projectively_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol);

struct FixtureMatch {
  std::string fixture;
  double residual = 0.0;
  /// Index into the flattened solution list, or -1.
  int torus_match = -1;
  /// Solution equal to the fixture up to permutation, signs and scale.
  int exact_match = -1;
};

/// Matches a fixture polynomial against solver output.
FixtureMatch match_fixture(const std::string& fixture, const std::vector<CriticalSolution>& solutions);

/// All solutions of the diagonal families with the given term counts.
std::vector<CriticalSolution> solve_families(int n, int d, int m_lo, int m_hi);

}  // namespace momentforge
