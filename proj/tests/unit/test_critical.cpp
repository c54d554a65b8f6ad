#include <gtest/gtest.h>

#include "helpers.hpp"
#include "momentforge/critical.hpp"
#include "momentforge/diagonal.hpp"
#include "momentforge/fixtures.hpp"
#include "momentforge/moment.hpp"
#include "momentforge/reproduce.hpp"
#include "oracle.hpp"

using namespace momentforge;
using testing_helpers::approx;
using testing_helpers::exact;

namespace {

ParamFamily fam(const std::string& text) { return build_family(support_from_text(text, 3)); }

// max |central difference of the squared length| over all coefficients
double fd_residual(const SparsePoly<double>& f) {
  const double h = 1e-6;
  auto basis = basis_for(f.nvars(), f.degree());
  double worst = 0.0;
  double scale = 1.0 / std::sqrt(norm_squared(f));
  auto unit = poly_scale(f, scale);
  for (int k = 0; k < basis->size(); ++k) {
    auto plus = unit, minus = unit;
    plus.add_term((*basis)[k], h);
    minus.add_term((*basis)[k], -h);
    worst = std::max(worst, std::abs(square_length(plus) - square_length(minus)) / (2 * h));
  }
  return worst;
}

}  // namespace

TEST(GradientSystem, Shape) {
  auto sys = gradient_system(fam("x^2*z + x*y^2"));
  EXPECT_EQ(sys.equations.size(), 10u);
  EXPECT_EQ(sys.unknowns, std::vector<int>({0}));
  auto quartic = gradient_system(fam("x^4 + y^4 + z^4"));
  EXPECT_EQ(quartic.equations.size(), 15u);
  EXPECT_EQ(quartic.unknowns.size(), 2u);
}

TEST(SolveReal, OneUnknown) {
  auto sols = solve_real(gradient_system(fam("x^2*z + x*y^2")));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(*sols[0].values[0].exact->rational_value(), Rational(1));
  EXPECT_TRUE(sols[0].exact_zero);
  // the sign-flipped partner is critical as well
  EXPECT_TRUE(verify_critical(exact("-x^2*z + x*y^2")).exact_zero);
  EXPECT_TRUE(torus_permutation_equivalent(sols[0].member(), approx("x^2*z + x*y^2"), 1e-9));

  auto sols2 = solve_real(gradient_system(fam("y^2*z + x^2*z")));
  ASSERT_FALSE(sols2.empty());
  for (const auto& s : sols2) EXPECT_EQ(s.values[0].exact->rational_value()->abs(), Rational(1));
}

TEST(SolveReal, TwoUnknownsIrrational) {
  auto sols = solve_real(gradient_system(fam("x*z^2 + y^3 + x^3")));
  bool found = false;
  for (const auto& s : sols) {
    EXPECT_LE(s.residual, 1e-9);
    EXPECT_LE(fd_residual(s.member()), 1e-6);
    const auto& b1 = s.values[0].exact;
    const auto& b2 = s.values[1].exact;
    if (b1 && b2 && b1->rational_value() == Rational(3) && b2->square() == Rational(2) && b2->approx > 0) {
      found = true;
      EXPECT_LE(b2->interval.width().to_double(), 1e-12);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(std::any_of(sols.begin(), sols.end(), [](const CriticalSolution& s) {
    return torus_permutation_equivalent(s.member(), approx("3*x*z^2 + sqrt(2)*y^3 + x^3"), 1e-9);
  }));
}

TEST(SolveReal, NoRealSolutions) {
  EXPECT_TRUE(solve_real(gradient_system(fam("x*y*z + y^3 + x^3"))).empty());
}

TEST(SolveReal, TooManyUnknowns) {
  auto f = build_family(support_from_text("x^4 + y^4 + z^4 + x^2*y^2 + y^2*z^2", 3));
  EXPECT_THROW(solve_real(gradient_system(f)), UnsupportedError);
}

TEST(SolveReal, PositiveDimensionalFamily) {
  auto sols = solve_real(gradient_system(fam("z^3 + x*y*z + y^3 + x^3")));
  ASSERT_FALSE(sols.empty());
  for (const auto& s : sols) {
    EXPECT_TRUE(s.positive_dimensional);
    auto v = s.approx_values();
    // b1^2 = b3^2 = 1, b2 free
    EXPECT_NEAR(v[0] * v[0], 1.0, 1e-8);
    EXPECT_NEAR(v[2] * v[2], 1.0, 1e-8);
    EXPECT_LE(s.residual, 1e-9);
  }
}

TEST(VerifyCritical, Examples) {
  auto r = verify_critical(exact("x^3 + y^3 + z^3"));
  EXPECT_TRUE(r.exact_zero);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_GT(verify_critical(exact("x^3 + x^2*y")).value, 0.1);
  EXPECT_LE(verify_critical(exact("x^3 + y^3 + z^3 + 2*x*y*z")).value, 1e-9);
  EXPECT_THROW(verify_critical(SparsePoly<Rational>(3, 3)), DegenerateError);
}

TEST(VerifyCritical, MonomialsAreExactlyCritical) {
  for (int d = 3; d <= 4; ++d)
    for (const auto& e : basis_for(3, d)->monomials()) {
      auto r = verify_critical(SparsePoly<Rational>::monomial(e, Rational(1)));
      EXPECT_TRUE(r.exact_zero) << monomial_string(e);
    }
}

TEST(VerifyCritical, PublishedCubicsAndQuartics) {
  for (const auto& t : fixtures::cubic_critical()) {
    auto f = parse_poly(t, 3).to_float();
    EXPECT_LE(verify_critical(f), 1e-9) << t;
    EXPECT_LE(fd_residual(f), 1e-6) << t;
  }
  for (const auto& t : fixtures::quartic_critical()) {
    auto f = parse_poly(t, 3).to_float();
    EXPECT_LE(verify_critical(f), 1e-9) << t;
    EXPECT_LE(fd_residual(f), 1e-6) << t;
  }
}

// Signed permutations of the coordinates are unitary, so they preserve
// criticality; rescaling coordinates does not.
TEST(VerifyCritical, SignedPermutationInvariance) {
  auto perms = all_permutations(3);
  for (const auto& t : fixtures::quartic_critical()) {
    auto f = parse_poly(t, 3).to_float();
    for (const auto& p : perms)
      for (int signs = 0; signs < 8; ++signs) {
        SparsePoly<double> g(3, 4);
        const auto moved = permute(p, f);
        for (const auto& [e, c] : moved.terms()) {
          int flip = 0;
          for (int i = 0; i < 3; ++i)
            if (signs >> i & 1) flip += e[i];
          g.add_term(e, flip % 2 ? -c : c);
        }
        EXPECT_LE(verify_critical(g), 1e-9) << t;
      }
  }
}

TEST(TorusCanonical, CriticalityIsNotTorusInvariant) {
  EXPECT_TRUE(verify_critical(exact("3*x*y*z^2 + x^3*y")).exact_zero);
  auto canon = torus_canonical(exact("3*x*y*z^2 + x^3*y"));
  EXPECT_GT(verify_critical(canon), 1e-3);
}

TEST(TorusCanonical, Examples) {
  EXPECT_TRUE(sign_equivalent(torus_canonical(exact("4*x*z^3 + 4*x*y^3 + x^4")),
                              torus_canonical(exact("x*z^3 + x*y^3 + x^4")), 1e-12));
  auto t = torus_canonical(exact("x^3 + y^3 + z^3"));
  EXPECT_TRUE(sign_equivalent(t, approx("x^3 + y^3 + z^3"), 1e-12));
  EXPECT_TRUE(sign_equivalent(torus_canonical(exact("8*x^3 + y^3")), approx("x^3 + y^3"), 1e-12));
  EXPECT_THROW(torus_canonical(SparsePoly<Rational>(3, 3)), DegenerateError);
}

TEST(FixedPoint, Examples) {
  EXPECT_TRUE(fixed_point_check(exact("x^3 + y^3")));
  EXPECT_TRUE(fixed_point_check(exact("z^3 + x*y*z + y^3 + x^3")));
  EXPECT_FALSE(fixed_point_check(exact("z^3 + x*y*z + 2*y^3 + x^3")));
  EXPECT_THROW(fixed_point_check(exact("x^3 + x^2*y")), DomainError);
}

TEST(FixedPoint, AgreesWithVerify) {
  // on diagonal families the criterion and the gradient agree
  std::mt19937 rng(51);
  for (int m = 2; m <= 3; ++m)
    for (const auto& f : diagonal_families(3, 3, m))
      for (int k = 0; k < 20; ++k) {
        std::vector<Rational> at;
        for (int p = 0; p < f.num_params(); ++p) {
          Rational x(0);
          while (x.is_zero()) x = oracle::random_rational(rng, 3);
          at.push_back(k < 2 ? Rational(k ? -1 : 1) : x);
        }
        auto g = family_member(f, at);
        EXPECT_EQ(fixed_point_check(g), verify_critical(g).exact_zero) << to_string(g);
      }
}

TEST(CriticalPoints, CubicsRediscoverPublishedList) {
  auto sols = solve_families(3, 3, 2, 4);
  for (const auto& t : fixtures::cubic_critical()) {
    auto m = match_fixture(t, sols);
    EXPECT_GE(m.torus_match, 0) << t;
    EXPECT_LE(m.residual, 1e-9) << t;
  }
}

TEST(CriticalPoints, QuarticRationalEntriesExact) {
  auto sols = solve_families(3, 4, 2, 3);
  for (const auto& t : fixtures::quartic_critical()) {
    auto parsed = parse_poly(t, 3);
    auto m = match_fixture(t, sols);
    EXPECT_GE(m.torus_match, 0) << t;
    if (parsed.has_radicals()) continue;
    ASSERT_GE(m.exact_match, 0) << t;
    const auto& s = sols[static_cast<size_t>(m.exact_match)];
    EXPECT_TRUE(s.exact_zero) << t;
    EXPECT_TRUE(s.exact_member().has_value()) << t;
  }
}

TEST(CriticalPoints, RejectedFamiliesKept) {
  auto reports = critical_points(3, 3, 3);
  EXPECT_EQ(reports.size(), diagonal_families(3, 3, 3).size());
  EXPECT_TRUE(std::any_of(reports.begin(), reports.end(), [](const FamilyReport& r) { return r.solutions.empty(); }));
}
