#pragma once

#include <string>

#include "momentforge/text_format.hpp"

namespace testing_helpers {

inline momentforge::SparsePoly<momentforge::Rational> exact(const std::string& text, int n = 3) {
  return momentforge::parse_poly(text, n).to_exact();
}

inline momentforge::SparsePoly<double> approx(const std::string& text, int n = 3) {
  return momentforge::parse_poly(text, n).to_float();
}

inline momentforge::SparsePoly<momentforge::ParamScalar> family(const std::string& text, int n = 3) {
  return momentforge::parse_poly(text, n).to_param();
}

}  // namespace testing_helpers
