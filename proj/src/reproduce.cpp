#include "momentforge/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "momentforge/diagonal.hpp"
#include "momentforge/fixtures.hpp"
#include "momentforge/moment.hpp"
#include "momentforge/symd.hpp"
#include "momentforge/text_format.hpp"

namespace momentforge {

namespace {

using SupportCollection = std::set<SupportSet, RepresentativeLess>;

SupportCollection supports_from(const std::vector<std::string>& texts, int n) {
  SupportCollection out;
  for (const auto& t : texts) out.insert(support_from_text(t, n));
  return out;
}

std::string count_detail(size_t got, size_t want) {
  return std::to_string(got) + " found, " + std::to_string(want) + " expected";
}

CheckResult check_basis(const std::string& name, int d, const std::vector<std::string>& expected) {
  auto basis = basis_for(3, d);
  bool pass = basis->size() == static_cast<int>(expected.size());
  for (int k = 0; pass && k < basis->size(); ++k)
    pass = (*basis)[k] == parse_poly(expected[static_cast<size_t>(k)], 3).terms.front().exponent;
  return {name, pass, count_detail(static_cast<size_t>(basis->size()), expected.size()) + ", order compared"};
}

CheckResult check_orbits(const std::string& name, int d, int m, const std::vector<std::string>& expected) {
  SupportCollection got;
  for (const auto& r : orbit_classes(3, d, m)) got.insert(r.support);
  SupportCollection want = supports_from(expected, 3);
  bool pass = got == want && got.size() == expected.size();
  return {name, pass, count_detail(got.size(), expected.size())};
}

CheckResult check_diagonal(const std::string& name, int d, int m_lo, int m_hi, const std::vector<std::string>& expected) {
  std::vector<SparsePoly<ParamScalar>> got;
  for (int m = m_lo; m <= m_hi; ++m)
    for (const auto& f : diagonal_families(3, d, m)) got.push_back(f.poly);
  size_t matched = 0;
  for (const auto& text : expected) {
    auto want = parse_poly(text, 3).to_param();
    if (std::any_of(got.begin(), got.end(), [&](const auto& g) { return g == want; })) ++matched;
  }
  bool pass = matched == expected.size() && got.size() == expected.size();
  return {name, pass, count_detail(got.size(), expected.size()) + ", " + std::to_string(matched) + " matched"};
}

void check_critical(ReproduceReport& report, const std::string& label, const std::vector<std::string>& fixtures,
                    const std::vector<CriticalSolution>& solutions) {
  std::vector<bool> used(solutions.size(), false);
  for (const auto& text : fixtures) {
    auto m = match_fixture(text, solutions);
    bool verified = m.residual <= 1e-9;
    bool found = m.torus_match >= 0;
    if (m.exact_match >= 0) used[static_cast<size_t>(m.exact_match)] = true;
    std::ostringstream detail;
    detail << "residual " << format_double(m.residual) << (found ? ", rediscovered" : ", not rediscovered");
    if (m.exact_match >= 0) detail << " (same coefficients)";
    report.checks.push_back({label + " " + text, verified && found, detail.str()});
  }
  for (size_t k = 0; k < solutions.size(); ++k) {
    if (used[k] || solutions[k].positive_dimensional) continue;
    report.notes.push_back("extra critical point: " + to_string(solutions[k].member()));
  }
}

void run_cubics(ReproduceReport& r) {
  r.checks.push_back(check_basis("cubics: basis M(2)", 2, fixtures::quadric_basis()));
  r.checks.push_back(check_basis("cubics: basis M(3)", 3, fixtures::cubic_basis()));

  auto f = parse_poly("x^3 + y^3", 3).to_exact();
  auto m = moment_matrix(f);
  MomentMatrix<Rational> want(3);
  want(0, 0) = 1;
  want(1, 1) = 1;
  want(2, 2) = -2;
  r.checks.push_back({"cubics: moment matrix of x^3 + y^3", m == want, "diag(1, 1, -2) expected"});

  r.checks.push_back(check_orbits("cubics: orbit classes, 1 term", 3, 1, fixtures::cubic_orbits_1()));
  r.checks.push_back(check_orbits("cubics: orbit classes, 2 terms", 3, 2, fixtures::cubic_orbits_2()));
  r.checks.push_back(check_orbits("cubics: orbit classes, 3 terms", 3, 3, fixtures::cubic_orbits_3()));
  r.checks.push_back(check_diagonal("cubics: diagonal families", 3, 2, 4, fixtures::cubic_diagonal_families()));
  size_t beyond = 0;
  for (int m = 5; m <= 10; ++m) beyond += diagonal_families(3, 3, m).size();
  r.checks.push_back({"cubics: no diagonal families with 5 or more terms", beyond == 0, std::to_string(beyond) + " found"});

  // b3 z^3 + xyz + b2 y^3 + b1 x^3 with b1^2 = b2^2 = b3^2, then with b2 doubled.
  auto xyz_member = [](const Rational& b1, const Rational& b2, const Rational& b3) {
    SparsePoly<Rational> g(3, 3);
    g.add_term({0, 0, 3}, b3);
    g.add_term({1, 1, 1}, 1);
    g.add_term({0, 3, 0}, b2);
    g.add_term({3, 0, 0}, b1);
    return g;
  };
  bool prop = true;
  for (int b : {1, 2}) {
    for (int s = 0; s < 8; ++s) {
      Rational b1(s & 1 ? -b : b), b2(s & 2 ? -b : b), b3(s & 4 ? -b : b);
      auto on = xyz_member(b1, b2, b3);
      prop = prop && fixed_point_check(on) && verify_critical(on).value <= 1e-9;
      prop = prop && !fixed_point_check(xyz_member(b1, b2 * Rational(2), b3));
    }
  }
  r.checks.push_back({"cubics: xyz family fixed-point criterion", prop, "b1^2 = b2^2 = b3^2 fixed, violations not fixed"});

  check_critical(r, "cubics: critical", fixtures::cubic_critical(), solve_families(3, 3, 2, 3));
}

void run_quartics(ReproduceReport& r) {
  r.checks.push_back(check_orbits("quartics: orbit classes, 2 terms", 4, 2, fixtures::quartic_orbits_2()));
  r.checks.push_back(check_orbits("quartics: orbit classes, 3 terms", 4, 3, fixtures::quartic_orbits_3()));
  r.checks.push_back(check_diagonal("quartics: diagonal families, 3 terms", 4, 3, 3, fixtures::quartic_diagonal_families()));
  for (const auto& fam : diagonal_families(3, 4, 2)) r.notes.push_back("two-term diagonal family: " + fam.to_string());

  const auto sm = symbolic_moment(general_form(3, 4));
  for (const auto& e : fixtures::quartic_moment_matrix()) {
    ParamScalar want = parse_param_scalar(e.expression, 3, 4);
    const ParamScalar& got = e.i < 0 ? sm.denominator : sm.numerators(e.i, e.j);
    r.checks.push_back({"quartics: moment matrix entry " + e.name, got == want, "exact comparison"});
  }
  check_critical(r, "quartics: critical", fixtures::quartic_critical(), solve_families(3, 4, 2, 3));
}

}  // namespace

bool ReproduceReport::all_match() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SupportSet support_from_text(const std::string& text, int n) {
  std::vector<ExponentVector> mons;
  for (const auto& t : parse_poly(text, n).terms) mons.push_back(t.exponent);
  return make_support(std::move(mons));
}

bool projectively_equivalent(const SparsePoly<double>& f, const SparsePoly<double>& g, double tol) {
  if (f.nvars() != g.nvars() || f.degree() != g.degree() || f.term_count() != g.term_count() || f.is_zero())
    return false;
  auto normalized = [](const SparsePoly<double>& p) {
    double lead = p.terms().begin()->second;
    return poly_scale(p, 1.0 / lead);
  };
  const auto ng = normalized(g);
  for (const auto& perm : all_permutations(f.nvars())) {
    auto pf = permute(perm, f);
    if (support_of(pf) != support_of(g)) continue;
    if (sign_equivalent(normalized(pf), ng, tol)) return true;
  }
  return false;
}

FixtureMatch match_fixture(const std::string& fixture, const std::vector<CriticalSolution>& solutions) {
  FixtureMatch m;
  m.fixture = fixture;
  auto parsed = parse_poly(fixture, 3);
  auto f = parsed.to_float();
  m.residual = parsed.has_radicals() ? verify_critical(f) : verify_critical(parsed.to_exact()).value;
  for (size_t k = 0; k < solutions.size(); ++k) {
    auto member = solutions[k].member();
    if (m.exact_match < 0 && projectively_equivalent(f, member, 1e-9)) m.exact_match = static_cast<int>(k);
    if (m.torus_match < 0 && torus_permutation_equivalent(f, member, 1e-9)) m.torus_match = static_cast<int>(k);
  }
  if (m.exact_match >= 0) m.torus_match = m.exact_match;
  return m;
}

std::vector<CriticalSolution> solve_families(int n, int d, int m_lo, int m_hi) {
  std::vector<CriticalSolution> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (auto& rep : critical_points(n, d, m))
      for (auto& s : rep.solutions) out.push_back(std::move(s));
  return out;
}

ReproduceReport reproduce_paper(const std::string& which) {
  ReproduceReport r;
  r.case_name = which;
  if (which == "cubics" || which == "all") run_cubics(r);
  if (which == "quartics" || which == "all") run_quartics(r);
  if (r.checks.empty()) throw DomainError("unknown reproduction case '" + which + "'");
  return r;
}

}  // namespace momentforge
