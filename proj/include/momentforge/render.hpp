#pragma once

#include <string>
#include <vector>

#include "momentforge/critical.hpp"
#include "momentforge/diagonal.hpp"
#include "momentforge/json_io.hpp"
#include "momentforge/moment.hpp"
#include "momentforge/points.hpp"
#include "momentforge/reproduce.hpp"

namespace momentforge {

// JSON and plain-text renderings of every result the CLI prints. Exact
// values become "p/q" strings, floats are rounded to 12 significant digits,
// parametric values become expression strings. Object keys come out sorted.

Json scalar_json(const Rational& x);
Json scalar_json(double x);

Json matrix_json(const MomentMatrix<Rational>& m);
Json matrix_json(const MomentMatrix<double>& m);
std::string matrix_text(const MomentMatrix<Rational>& m);
std::string matrix_text(const MomentMatrix<double>& m);

/// {"denominator": r, "numerators": [[r_ij]]} with m = (r_ij)/r.
Json symbolic_moment_json(const SymbolicMoment& m, const std::vector<std::string>& names = {});
std::string symbolic_moment_text(const SymbolicMoment& m, const std::vector<std::string>& names = {});

/// [{"exp": α, "value": ∂‖m‖²/∂a_α}] over the full basis.
Json gradient_json(int n, int d, const std::vector<Rational>& values);
Json gradient_json(int n, int d, const std::vector<double>& values);
std::string gradient_text(int n, int d, const std::vector<Rational>& values);
std::string gradient_text(int n, int d, const std::vector<double>& values);
Json gradient_json(int n, int d, const std::vector<RationalFunction>& values,
                   const std::vector<std::string>& names = {});
std::string gradient_text(int n, int d, const std::vector<RationalFunction>& values,
                          const std::vector<std::string>& names = {});

Json monomials_json(int n, int d);
std::string monomials_text(int n, int d);

Json support_json(const SupportSet& s);
Json orbits_json(const std::vector<OrbitRepresentative>& reps);
std::string orbits_text(const std::vector<OrbitRepresentative>& reps);

Json verdicts_json(const std::vector<DiagonalVerdict>& verdicts);
std::string verdicts_text(const std::vector<DiagonalVerdict>& verdicts);

/// Rational and ±√c values as exact strings, anything else as
/// {"minpoly", "interval", "approx"}; numeric-only values as numbers.
Json param_value_json(const ParamValue& v);
Json solution_json(const CriticalSolution& s);
Json critical_json(const std::vector<FamilyReport>& reports);
std::string critical_text(const std::vector<FamilyReport>& reports);

Json report_json(const ReproduceReport& r);
std::string report_text(const ReproduceReport& r);

Json points_json(const std::vector<Point3>& pts);
/// One "x y z" line per point.
std::string points_text(const std::vector<Point3>& pts);

}  // namespace momentforge
