#include <gtest/gtest.h>

#include "momentforge/critical.hpp"
#include "momentforge/upoly.hpp"

using namespace momentforge;

namespace {

// coefficients low to high
UPoly P(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.push_back(Rational(x));
  return UPoly(r);
}

}  // namespace

TEST(UPoly, Arithmetic) {
  auto a = P({-1, 0, 1});  // t^2 - 1
  auto b = P({1, 1});      // t + 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, P({1, 2, 1})), b);
  EXPECT_EQ(squarefree_part(P({1, 2, 1})), b);
}

TEST(UPoly, RootIsolation) {
  // (t - 1)(t + 2)(t^2 - 2)
  auto p = P({-1, 1}) * P({2, 1}) * P({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  std::vector<double> want{-2, -std::sqrt(2.0), 1, std::sqrt(2.0)};
  for (size_t k = 0; k < 4; ++k) {
    auto iv = refine(p, roots[k], Rational(1) / Rational(1000000000));
    EXPECT_NEAR(iv.midpoint(), want[k], 1e-9);
  }
  EXPECT_TRUE(isolate_real_roots(P({1, 0, 1})).empty());
  EXPECT_EQ(count_roots(sturm_sequence(p), Rational(0), Rational(2)), 2);
}

TEST(UPoly, Resultant) {
  // eliminate b1 from b1 - b2 and b1^2 - 2: leaves b2^2 - 2
  ParamScalar b1 = ParamScalar::symbol(0, 2), b2 = ParamScalar::symbol(1, 2);
  auto r = resultant(b1 - b2, b1 * b1 - ParamScalar(2), 0, 1);
  auto monic_r = r.monic();
  EXPECT_EQ(monic_r, P({-2, 0, 1}));
}

TEST(AlgebraicNumber, Recognition) {
  auto p = P({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  auto pos = AlgebraicNumber::from_root(p, roots[1]);
  ASSERT_TRUE(pos.square().has_value());
  EXPECT_EQ(*pos.square(), Rational(2));
  EXPECT_EQ(pos.to_string(), "sqrt(2)");
  EXPECT_EQ(pos.negated().to_string(), "-sqrt(2)");
  EXPECT_LE(pos.interval.width().to_double(), 1e-12);
  auto third = P({-1, 0, 3});
  auto r3 = AlgebraicNumber::from_root(third, isolate_real_roots(third)[1]);
  EXPECT_EQ(r3.to_string(), "sqrt(1/3)");
  auto q = AlgebraicNumber::from_root(P({-3, 2}), isolate_real_roots(P({-3, 2}))[0]);
  ASSERT_TRUE(q.rational_value().has_value());
  EXPECT_EQ(*q.rational_value(), Rational(3) / Rational(2));
  auto cubic = P({-2, 0, 0, 1});
  auto c = AlgebraicNumber::from_root(cubic, isolate_real_roots(cubic)[0]);
  EXPECT_FALSE(c.rational_value());
  EXPECT_FALSE(c.square());
  EXPECT_NEAR(c.approx, std::cbrt(2.0), 1e-12);
}
