// Randomized property suites over cubics and quartics in three variables.

#include <gtest/gtest.h>

#include "momentforge/moment.hpp"
#include "oracle.hpp"

using namespace momentforge;

namespace {

constexpr int kSamples = 120;

std::vector<SparsePoly<Rational>> sample_forms(unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SparsePoly<Rational>> out;
  for (int k = 0; k < kSamples; ++k) out.push_back(oracle::random_form(rng, 3, k % 2 ? 4 : 3, 7));
  return out;
}

}  // namespace

TEST(Properties, TraceIsZero) {
  for (const auto& f : sample_forms(101)) EXPECT_TRUE(moment_matrix(f).trace().is_zero()) << to_string(f);
}

TEST(Properties, ScaleInvariance) {
  std::mt19937 rng(102);
  for (const auto& f : sample_forms(102)) {
    Rational lambda(0);
    while (lambda.is_zero()) lambda = oracle::random_rational(rng, 20);
    auto g = poly_scale(f, lambda);
    EXPECT_EQ(moment_matrix(g), moment_matrix(f));
    EXPECT_EQ(square_length(g), square_length(f));
  }
}

TEST(Properties, EulerRelation) {
  for (const auto& f : sample_forms(103)) {
    auto g = gradient(f);
    auto v = coefficient_vector(f);
    Rational total(0);
    for (size_t k = 0; k < g.size(); ++k) total += v.entries[k] * g[k];
    EXPECT_TRUE(total.is_zero()) << to_string(f);
  }
}

TEST(Properties, FlowIsTwiceHermitian) {
  for (const auto& f : sample_forms(104)) {
    auto h = hermitian_matrix(f);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(flow_derivative(f, i, j), Rational(2) * h(i, j));
  }
}

TEST(Properties, GradientMatchesFiniteDifferences) {
  const double h = 1e-5;
  for (const auto& f : sample_forms(105)) {
    auto g = gradient(f);
    auto ff = to_float(f);
    // unit-norm representative keeps the second derivative moderate
    double scale = 1.0 / std::sqrt(norm_squared(ff));
    auto unit = poly_scale(ff, scale);
    auto basis = basis_for(3, f.degree());
    for (int k = 0; k < basis->size(); ++k) {
      auto plus = unit, minus = unit;
      plus.add_term((*basis)[k], h);
      minus.add_term((*basis)[k], -h);
      double fd = (square_length(plus) - square_length(minus)) / (2 * h);
      // gradient is homogeneous of degree -1
      double exact_value = g[static_cast<size_t>(k)].to_double() / scale;
      EXPECT_NEAR(fd, exact_value, 1e-7) << to_string(f) << " at " << monomial_string((*basis)[k]);
    }
  }
}

TEST(Properties, ImaginaryGradientVanishes) {
  for (const auto& f : sample_forms(106))
    for (const auto& x : complex_gradient_imag_parts(f)) EXPECT_TRUE(x.is_zero()) << to_string(f);
}
