#include <gtest/gtest.h>

#include "helpers.hpp"
#include "momentforge/json_io.hpp"
#include "momentforge/symd.hpp"
#include "oracle.hpp"

using namespace momentforge;
using testing_helpers::approx;
using testing_helpers::exact;
using testing_helpers::family;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_EQ(Rational::from_double(0.375), Rational(3) / Rational(8));
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(Rational(1) / Rational(3), Rational(1) / Rational(2)), Rational(1) / Rational(2));
  EXPECT_EQ(simplest_between(Rational(31) / Rational(100), Rational(34) / Rational(100)), Rational(1) / Rational(3));
  EXPECT_EQ(simplest_between(Rational(-5) / Rational(2), Rational(-2)), Rational(-2));
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(poly_add(exact("x^3"), exact("y^3")), exact("x^3 + y^3"));
  EXPECT_TRUE(poly_add(exact("x^3"), exact("-x^3")).is_zero());
  EXPECT_EQ(poly_add(exact("2*x^2*y"), exact("3*x^2*y")), exact("5*x^2*y"));
  EXPECT_THROW(poly_add(exact("x^3"), exact("x^4")), DimensionError);
  EXPECT_THROW(poly_add(exact("x^3", 2), exact("x^3", 3)), DimensionError);
}

TEST(PolyScale, Examples) {
  EXPECT_EQ(poly_scale(exact("x^3 + y^3"), Rational(3)), exact("3*x^3 + 3*y^3"));
  EXPECT_TRUE(poly_scale(exact("x^3 + y^3"), Rational(0)).is_zero());
  EXPECT_EQ(poly_scale(exact("2*x*y*z"), Rational(1) / Rational(2)), exact("x*y*z"));
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(partial_derivative(exact("x^3"), 0), exact("3*x^2"));
  EXPECT_TRUE(partial_derivative(exact("x^3 + y^3"), 2).is_zero());
  EXPECT_EQ(partial_derivative(exact("x^2*y + x*y*z"), 1), exact("x^2 + x*z"));
  EXPECT_THROW(partial_derivative(exact("x^3"), 3), DimensionError);
  EXPECT_THROW(partial_derivative(exact("x^3"), -1), DimensionError);
}

TEST(SubstituteParams, Examples) {
  EXPECT_EQ(substitute_params(family("b1*x^2*z + x*y^2"), std::vector<Rational>{1}), exact("x^2*z + x*y^2"));
  EXPECT_EQ(substitute_params(family("b1*z^3 + b2*y^3 + x^3"), std::vector<Rational>{0, 1}), exact("y^3 + x^3"));
  auto f = substitute_params(family("b1*x*z^2 + b2*y^3 + x^3"), std::vector<double>{3.0, std::sqrt(2.0)});
  EXPECT_DOUBLE_EQ(f.coefficient({1, 0, 2}), 3.0);
  EXPECT_NEAR(f.coefficient({0, 3, 0}), 1.41421356, 1e-8);
  EXPECT_DOUBLE_EQ(f.coefficient({3, 0, 0}), 1.0);
  EXPECT_THROW(substitute_params(family("b1*x^2*z + b2*x*y^2 + z^3"), std::vector<Rational>{1}), DomainError);
}

TEST(TextFormat, ParsesRadicalsAndFractions) {
  auto f = approx("sqrt(2)*x*z^2 + y^3/sqrt(3) + x^2*y");
  EXPECT_NEAR(f.coefficient({1, 0, 2}), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(f.coefficient({0, 3, 0}), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(exact("(1/2)^2*x^2 + sqrt(4)*y^2"), exact("1/4*x^2 + 2*y^2"));
  EXPECT_THROW(parse_poly("x^3 + y^2", 3), ParseError);
  EXPECT_THROW(parse_poly("x^3 + w^3", 3), ParseError);
  EXPECT_THROW(parse_poly("x^3 +", 3), ParseError);
}

TEST(TextFormat, DisplayOrder) {
  EXPECT_EQ(to_string(exact("x^3 + x*y*z + z^3")), "z^3 + x*y*z + x^3");
  EXPECT_EQ(to_string(family("x^3 + b2*y^3 + b1*z^3")), "b1*z^3 + b2*y^3 + x^3");
  EXPECT_EQ(to_string(exact("x1^2*x4 - 1/2*x2^3", 4)), "x1^2*x4 - 1/2*x2^3");
}

TEST(Json, RoundTripExact) {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    auto f = oracle::random_form(rng, 3, 3 + k % 2);
    auto back = poly_from_json_text(poly_to_json(f).dump());
    ASSERT_TRUE(back.is_exact());
    EXPECT_EQ(back.exact(), f);
  }
}

TEST(Json, RoundTripFloat) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    SparsePoly<double> f(3, 4);
    f.add_term({4, 0, 0}, u(rng));
    f.add_term({1, 2, 1}, u(rng) * 1e-7);
    f.add_term({0, 0, 4}, 1.0);
    auto back = poly_from_json_text(poly_to_json(f).dump());
    ASSERT_TRUE(back.is_float());
    EXPECT_EQ(back.as_float(), f);
  }
}

TEST(Json, RoundTripParametric) {
  // compound coefficient b1^2 - 3/2 b2 on x^2 z
  auto f = family("b2*x*y^2 + 7*z^3");
  auto b1 = ParamScalar::symbol(0, 2), b2 = ParamScalar::symbol(1, 2);
  f.add_term({2, 0, 1}, b1 * b1 - Rational(3) / Rational(2) * b2);
  auto back = poly_from_json_text(poly_to_json(f).dump());
  ASSERT_TRUE(back.is_param());
  EXPECT_EQ(back.param(), f);
}

TEST(Json, Format) {
  auto j = poly_to_json(exact("x^3 + 1/2*y^3"));
  EXPECT_EQ(j.dump(), R"({"d":3,"n":3,"terms":[{"coeff":"1","exp":[3,0,0]},{"coeff":"1/2","exp":[0,3,0]}]})");
  auto g = poly_from_json_text(R"({"n":2,"d":2,"terms":[{"exp":[1,1],"coeff":"2/4"},{"exp":[1,1],"coeff":3}]})");
  EXPECT_EQ(g.exact(), exact("7/2*x*y", 2));
}

TEST(Json, Errors) {
  EXPECT_THROW(poly_from_json_text("{"), ParseError);
  EXPECT_THROW(poly_from_json_text(R"({"n":3,"terms":[]})"), ParseError);
  EXPECT_THROW(poly_from_json_text(R"({"n":3,"d":3,"terms":[{"exp":[2,0,0],"coeff":"1"}]})"), ParseError);
  EXPECT_THROW(poly_from_json_text(R"({"n":3,"d":3,"terms":[{"exp":[3,0,0],"coeff":true}]})"), ParseError);
  EXPECT_THROW(poly_from_json_text(R"({"n":3,"d":3,"terms":[{"exp":[3,0,0],"coeff":"x"}]})"), ParseError);
}

TEST(Basis, Examples) {
  auto b2 = basis_for(3, 2);
  std::vector<std::string> want2{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  ASSERT_EQ(b2->size(), 6);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(monomial_string((*b2)[k]), want2[static_cast<size_t>(k)]);
  auto b3 = basis_for(3, 3);
  std::vector<std::string> want3{"x^3", "x^2*y", "x*y^2", "y^3", "x^2*z", "x*y*z", "y^2*z", "x*z^2", "y*z^2", "z^3"};
  ASSERT_EQ(b3->size(), 10);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(monomial_string((*b3)[k]), want3[static_cast<size_t>(k)]);
  auto b15 = basis_for(1, 5);
  ASSERT_EQ(b15->size(), 1);
  EXPECT_EQ((*b15)[0], ExponentVector({5}));
  EXPECT_THROW(MonomialBasis(0, 3), DimensionError);
  EXPECT_THROW(MonomialBasis(3, 0), DimensionError);
}

TEST(Basis, CountsAreBinomial) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 6; ++d) {
      auto b = basis_for(n, d);
      EXPECT_EQ(Rational(b->size()), binomial(n + d - 1, d)) << n << " " << d;
      for (int k = 0; k < b->size(); ++k) EXPECT_EQ(b->index_of((*b)[k]), k);
      for (int k = 1; k < b->size(); ++k) EXPECT_TRUE(CanonicalLess{}((*b)[k - 1], (*b)[k]));
    }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight({3, 0, 0}), Rational(1));
  EXPECT_EQ(weight({2, 1, 0}), Rational(1) / Rational(3));
  EXPECT_EQ(weight({1, 1, 1}), Rational(1) / Rational(6));
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(exact("x^3"), exact("x^3")), Rational(1));
  EXPECT_EQ(inner_product(exact("x^3 + y^3"), exact("x^3")), Rational(1));
  EXPECT_EQ(inner_product(exact("2*x*y"), exact("3*x*y")), Rational(3));
  EXPECT_THROW(inner_product(exact("x^3"), exact("x^2")), DimensionError);
}

TEST(InnerProduct, UnitaryInvariance) {
  // rotations with rational entries (3/5, 4/5) act unitarily
  std::mt19937 rng(11);
  Rational c = Rational(3) / Rational(5), s = Rational(4) / Rational(5);
  for (int k = 0; k < 30; ++k) {
    auto f = oracle::random_form(rng, 3, 3 + k % 2);
    int a = k % 3, b = (k + 1) % 3;
    std::vector<std::vector<Rational>> U(3, std::vector<Rational>(3, Rational(0)));
    for (int i = 0; i < 3; ++i) U[i][i] = 1;
    U[a][a] = c; U[a][b] = -s; U[b][a] = s; U[b][b] = c;
    auto g = oracle::to_sparse(oracle::substitute(oracle::from_sparse(f), U, 3), 3, f.degree());
    EXPECT_EQ(norm_squared(g), norm_squared(f));
  }
}

TEST(CoefficientVector, Examples) {
  auto v = coefficient_vector(exact("x^3 + y^3"));
  std::vector<Rational> want{1, 0, 0, 1, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(v.entries, want);
  auto w = coefficient_vector(exact("x*y*z"));
  EXPECT_EQ(w.entries[5], Rational(1));
  EXPECT_EQ(from_coefficient_vector(w), exact("x*y*z"));
  auto z = coefficient_vector(SparsePoly<Rational>(3, 3));
  for (const auto& x : z.entries) EXPECT_TRUE(x.is_zero());
}

TEST(ProjectiveNormalize, Examples) {
  CoefficientVector<Rational> v{basis_for(3, 2), {0, 2, 4, 6, 0, 8}};
  auto n = projective_normalize(v);
  std::vector<Rational> want{0, 1, 2, 3, 0, 4};
  EXPECT_EQ(n.entries, want);
  EXPECT_EQ(projective_normalize(n), n);
  CoefficientVector<Rational> zero{basis_for(3, 2), std::vector<Rational>(6, Rational(0))};
  EXPECT_THROW(projective_normalize(zero), DegenerateError);
}

TEST(ProjectiveNormalize, Parametric) {
  auto F = family("b3*z^3 + x*y*z + b2*y^3 + b1*x^3");
  auto v = projective_normalize(coefficient_vector(F));
  ASSERT_EQ(v.size(), 10u);
  std::vector<Rational> at{2, 3, 5};  // b1, b2, b3
  std::vector<Rational> want{1, 0, 0, Rational(3) / Rational(2), 0, Rational(1) / Rational(2), 0, 0, 0, Rational(5) / Rational(2)};
  for (size_t k = 0; k < 10; ++k) EXPECT_EQ(v[k].evaluate(at), want[k]) << k;
}

TEST(Multidegree, Examples) {
  EXPECT_EQ(multidegree(exact("x^2*z")), ExponentVector({2, 0, 1}));
  EXPECT_EQ(multidegree(exact("z^3")), ExponentVector({0, 0, 3}));
  EXPECT_EQ(multidegree(exact("x*y*z")), ExponentVector({1, 1, 1}));
  EXPECT_THROW(multidegree(exact("x^3 + y^3")), DomainError);
}
