#include "momentforge/fixtures.hpp"

namespace momentforge::fixtures {

const std::vector<std::string>& quadric_basis() {
  static const std::vector<std::string> v{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
  return v;
}

const std::vector<std::string>& cubic_basis() {
  static const std::vector<std::string> v{"x^3", "x^2*y", "x*y^2", "y^3", "x^2*z",
                                          "x*y*z", "y^2*z", "x*z^2", "y*z^2", "z^3"};
  return v;
}

const std::vector<std::string>& cubic_orbits_1() {
  static const std::vector<std::string> v{"x^3", "x^2*y", "x*y*z"};
  return v;
}

const std::vector<std::string>& cubic_orbits_2() {
  static const std::vector<std::string> v{
      "x^2*y + x^3",
      "x*y^2 + x^3",
      "x*y^2 + x^2*y",
      "y^3 + x^3",
      "x^2*z + x^2*y",
      "x^2*z + x*y^2",
      "x^2*z + y^3",
      "x*y*z + x^3",
      "x*y*z + x^2*y",
      "y^2*z + x^2*z",
  };
  return v;
}

const std::vector<std::string>& cubic_orbits_3() {
  static const std::vector<std::string> v{
      "x*y^2 + x^2*y + x^3",
      "y^3 + x^2*y + x^3",
      "x^2*z + x^2*y + x^3",
      "x^2*z + x*y^2 + x^3",
      "x^2*z + x*y^2 + x^2*y",
      "x^2*z + y^3 + x^3",
      "x^2*z + y^3 + x^2*y",
      "x^2*z + y^3 + x*y^2",
      "x*y*z + x^2*y + x^3",
      "x*y*z + x*y^2 + x^3",
      "x*y*z + x*y^2 + x^2*y",
      "x*y*z + y^3 + x^3",
      "x*y*z + x^2*z + x^2*y",
      "x*y*z + x^2*z + x*y^2",
      "x*y*z + x^2*z + y^3",
      "y^2*z + x^2*z + x^3",
      "y^2*z + x^2*z + x^2*y",
      "y^2*z + x*y*z + x^2*z",
      "x*z^2 + x*y^2 + x^3",
      "x*z^2 + x*y^2 + x^2*y",
      "x*z^2 + y^3 + x^3",
      "x*z^2 + y^3 + x^2*y",
      "x*z^2 + x^2*z + y^3",
      "x*z^2 + y^2*z + x^2*y",
      "z^3 + y^3 + x^3",
  };
  return v;
}

const std::vector<std::string>& quartic_orbits_2() {
  static const std::vector<std::string> v{
      "x^3*y + x^4",
      "x^2*y^2 + x^4",
      "x^2*y^2 + x^3*y",
      "x*y^3 + x^4",
      "x*y^3 + x^3*y",
      "y^4 + x^4",
      "x^3*z + x^3*y",
      "x^3*z + x^2*y^2",
      "x^3*z + x*y^3",
      "x^3*z + y^4",
      "x^2*y*z + x^4",
      "x^2*y*z + x^3*y",
      "x^2*y*z + x^2*y^2",
      "x^2*y*z + x*y^3",
      "x^2*y*z + y^4",
      "x*y^2*z + x^3*z",
      "x*y^2*z + x^2*y*z",
      "y^3*z + x^3*z",
      "x^2*z^2 + x^2*y^2",
      "x^2*z^2 + x*y^3",
      "x^2*z^2 + y^4",
      "x^2*z^2 + x*y^2*z",
  };
  return v;
}

const std::vector<std::string>& quartic_orbits_3() {
  static const std::vector<std::string> v{
      "x^2*y^2 + x^3*y + x^4",
      "x*y^3 + x^3*y + x^4",
      "x*y^3 + x^2*y^2 + x^4",
      "x*y^3 + x^2*y^2 + x^3*y",
      "y^4 + x^3*y + x^4",
      "y^4 + x^2*y^2 + x^4",
      "x^3*z + x^3*y + x^4",
      "x^3*z + x^2*y^2 + x^4",
      "x^3*z + x^2*y^2 + x^3*y",
      "x^3*z + x*y^3 + x^4",
      "x^3*z + x*y^3 + x^3*y",
      "x^3*z + x*y^3 + x^2*y^2",
      "x^3*z + y^4 + x^4",
      "x^3*z + y^4 + x^3*y",
      "x^3*z + y^4 + x^2*y^2",
      "x^3*z + y^4 + x*y^3",
      "x^2*y*z + x^3*y + x^4",
      "x^2*y*z + x^2*y^2 + x^4",
      "x^2*y*z + x^2*y^2 + x^3*y",
      "x^2*y*z + x*y^3 + x^4",
      "x^2*y*z + x*y^3 + x^3*y",
      "x^2*y*z + x*y^3 + x^2*y^2",
      "x^2*y*z + y^4 + x^4",
      "x^2*y*z + y^4 + x^3*y",
      "x^2*y*z + y^4 + x^2*y^2",
      "x^2*y*z + y^4 + x*y^3",
      "x^2*y*z + x^3*z + x^3*y",
      "x^2*y*z + x^3*z + x^2*y^2",
      "x^2*y*z + x^3*z + x*y^3",
      "x^2*y*z + x^3*z + y^4",
      "x*y^2*z + x^3*z + x^4",
      "x*y^2*z + x^3*z + x^3*y",
      "x*y^2*z + x^3*z + x^2*y^2",
      "x*y^2*z + x^3*z + x*y^3",
      "x*y^2*z + x^3*z + y^4",
      "x*y^2*z + x^2*y*z + x^4",
      "x*y^2*z + x^2*y*z + x^3*y",
      "x*y^2*z + x^2*y*z + x^2*y^2",
      "x*y^2*z + x^2*y*z + x^3*z",
      "y^3*z + x^3*z + x^4",
      "y^3*z + x^3*z + x^3*y",
      "y^3*z + x^3*z + x^2*y^2",
      "y^3*z + x^2*y*z + x^3*z",
      "x^2*z^2 + x^2*y^2 + x^4",
      "x^2*z^2 + x^2*y^2 + x^3*y",
      "x^2*z^2 + x*y^3 + x^4",
      "x^2*z^2 + x*y^3 + x^3*y",
      "x^2*z^2 + x*y^3 + x^2*y^2",
      "x^2*z^2 + y^4 + x^4",
      "x^2*z^2 + y^4 + x^3*y",
      "x^2*z^2 + y^4 + x^2*y^2",
      "x^2*z^2 + y^4 + x*y^3",
      "x^2*z^2 + x^3*z + x*y^3",
      "x^2*z^2 + x^3*z + y^4",
      "x^2*z^2 + x^2*y*z + x^2*y^2",
      "x^2*z^2 + x^2*y*z + x*y^3",
      "x^2*z^2 + x^2*y*z + y^4",
      "x^2*z^2 + x*y^2*z + x^4",
      "x^2*z^2 + x*y^2*z + x^3*y",
      "x^2*z^2 + x*y^2*z + x^2*y^2",
      "x^2*z^2 + x*y^2*z + x*y^3",
      "x^2*z^2 + x*y^2*z + y^4",
      "x^2*z^2 + x*y^2*z + x^3*z",
      "x^2*z^2 + x*y^2*z + x^2*y*z",
      "x^2*z^2 + y^3*z + x^4",
      "x^2*z^2 + y^3*z + x^3*y",
      "x^2*z^2 + y^3*z + x^2*y^2",
      "x^2*z^2 + y^3*z + x*y^3",
      "x^2*z^2 + y^3*z + x^3*z",
      "x^2*z^2 + y^3*z + x^2*y*z",
      "x*y*z^2 + x*y^3 + x^4",
      "x*y*z^2 + x*y^3 + x^3*y",
      "x*y*z^2 + y^4 + x^4",
      "x*y*z^2 + x^3*z + x*y^3",
      "x*y*z^2 + x^3*z + y^4",
      "x*y*z^2 + x^2*y*z + x*y^3",
      "x*y*z^2 + x^2*y*z + y^4",
      "x*y*z^2 + x*y^2*z + x^2*y*z",
      "x*y*z^2 + y^3*z + x^3*z",
      "y^2*z^2 + x^2*z^2 + x^2*y^2",
      "x*z^3 + x*y^3 + x^4",
      "x*z^3 + x*y^3 + x^3*y",
      "x*z^3 + y^4 + x^4",
      "x*z^3 + y^4 + x^3*y",
      "x*z^3 + x^3*z + y^4",
      "x*z^3 + y^3*z + x^3*y",
      "z^4 + y^4 + x^4",
  };
  return v;
}

const std::vector<std::string>& cubic_diagonal_families() {
  static const std::vector<std::string> v{
      "b1*x^2*z + x*y^2",
      "b1*x^2*z + y^3",
      "b1*x*y*z + x^3",
      "b1*y^2*z + x^2*z",
      "b1*x*y*z + b2*y^3 + x^3",
      "b1*x*z^2 + b2*x*y^2 + x^3",
      "b1*x*z^2 + b2*y^3 + x^3",
      "b1*x*z^2 + b2*y^3 + x^2*y",
      "b1*x*z^2 + b2*y^2*z + x^2*y",
      "b1*z^3 + b2*y^3 + x^3",
      "b1*z^3 + b2*x*y*z + b3*y^3 + x^3",
  };
  return v;
}

const std::vector<std::string>& quartic_diagonal_families() {
  static const std::vector<std::string> v{
      "b1*x^3*z + b2*y^4 + x^2*y^2",
      "b1*x^2*y*z + b2*x*y^3 + x^4",
      "b1*x^2*y*z + b2*y^4 + x^4",
      "b1*x*y^2*z + b2*x^3*z + y^4",
      "b1*y^3*z + b2*x^3*z + x^2*y^2",
      "b1*x^2*z^2 + b2*x^2*y^2 + x^4",
      "b1*x^2*z^2 + b2*x*y^3 + x^4",
      "b1*x^2*z^2 + b2*x*y^3 + x^3*y",
      "b1*x^2*z^2 + b2*y^4 + x^4",
      "b1*x^2*z^2 + b2*y^4 + x^3*y",
      "b1*x^2*z^2 + b2*y^4 + x^2*y^2",
      "b1*x^2*z^2 + b2*x*y^2*z + x^4",
      "b1*x^2*z^2 + b2*x*y^2*z + x^3*y",
      "b1*x^2*z^2 + b2*x*y^2*z + y^4",
      "b1*x^2*z^2 + b2*y^3*z + x^4",
      "b1*x^2*z^2 + b2*y^3*z + x^3*y",
      "b1*x^2*z^2 + b2*y^3*z + x^2*y^2",
      "b1*x*y*z^2 + b2*x*y^3 + x^4",
      "b1*x*y*z^2 + b2*x*y^3 + x^3*y",
      "b1*x*y*z^2 + b2*y^4 + x^4",
      "b1*x*y*z^2 + b2*x^3*z + x*y^3",
      "b1*x*y*z^2 + b2*x^3*z + y^4",
      "b1*x*y*z^2 + b2*y^3*z + x^3*z",
      "b1*y^2*z^2 + b2*x^2*z^2 + x^2*y^2",
      "b1*x*z^3 + b2*x*y^3 + x^4",
      "b1*x*z^3 + b2*x*y^3 + x^3*y",
      "b1*x*z^3 + b2*y^4 + x^4",
      "b1*x*z^3 + b2*y^4 + x^3*y",
      "b1*x*z^3 + b2*x^3*z + y^4",
      "b1*x*z^3 + b2*y^3*z + x^3*y",
      "b1*z^4 + b2*y^4 + x^4",
  };
  return v;
}

const std::vector<std::string>& cubic_critical() {
  static const std::vector<std::string> v{
      "y^2*z + x^2*z",
      "x^2*z + x*y^2",
      "z^3 + y^3 + x^3",
      "x*z^2 + y^2*z + x^2*y",
      "sqrt(2)*x*z^2 + y^3/sqrt(3) + x^2*y",
      "3*x*z^2 + sqrt(2)*y^3 + x^3",
  };
  return v;
}

const std::vector<std::string>& quartic_critical() {
  static const std::vector<std::string> v{
      "x^3*z + x*y^3",
      "x^3*z/sqrt(3) + x^2*y^2",
      "3*sqrt(8)*x*y^2*z + x^4",
      "sqrt(15)*x*y^2*z + x^3*y",
      "y^3*z + x^3*y",
      "y^3*z + x^3*z",
      "y^3*z/sqrt(3) + x^2*y^2",
      "sqrt(3)*x^2*z^2 + x^3*y",
      "sqrt(3)*x^2*z^2 + 2*y^3*z/sqrt(3) + x^2*y^2",
      "2*sqrt(6)*x^2*z^2 + 4*y^3*z + x^4",
      "sqrt(21)*x^2*z^2/2 + sqrt(3)*y^3*z + x^3*y",
      "3*x*y*z^2 + x^3*y",
      "3*x*y*z^2 + x*y^3",
      "3*sqrt(8)*x*y*z^2 + x^4",
      "3*sqrt(8)*x*y*z^2 + sqrt(8)*x*y^3 + x^4",
      "3*sqrt(8)*x*y*z^2 + y^4",
      "sqrt(32)*x*y*z^2 + 4*x^3*z/sqrt(3) + y^4",
      "sqrt(3)*x*y*z^2 + y^3*z + x^3*z",
      "2*sqrt(3)*x*y*z^2 + x*y^3 + x^3*y",
      "4*sqrt(3)*x*y*z^2 + y^4 + x^4",
      "sqrt(7)*x*y*z^2 + sqrt(2)*x^3*z/sqrt(3) + x*y^3",
      "sqrt(15)*x*y*z^2 + x^3*z",
      "x*z^3 + x^3*y",
      "x*z^3 + y^3*z + x^3*y",
      "2*x*z^3 + 2*x^3*z + y^4",
      "4*x*z^3 + 4*x*y^3 + x^4",
  };
  return v;
}

const std::vector<QuarticMatrixEntry>& quartic_moment_matrix() {
  static const std::vector<QuarticMatrixEntry> v{
      {"r", -1, -1,
       "36*a[4,0,0]^2 + 9*a[3,1,0]^2 + 9*a[3,0,1]^2 + 6*a[2,2,0]^2 + 3*a[2,1,1]^2 + 6*a[2,0,2]^2 + 9*a[1,3,0]^2 + 3*a[1,2,1]^2 + 3*a[1,1,2]^2 + 9*a[1,0,3]^2 + 36*a[0,4,0]^2 + 9*a[0,3,1]^2 + 6*a[0,2,2]^2 + 9*a[0,1,3]^2 + 36*a[0,0,4]^2"},
      {"r11", 0, 0,
       "-96*a[0,0,4]^2 - 24*a[0,1,3]^2 - 16*a[0,2,2]^2 - 24*a[0,3,1]^2 - 96*a[0,4,0]^2 - 6*a[1,0,3]^2 - 2*a[1,1,2]^2 - 2*a[1,2,1]^2 - 6*a[1,3,0]^2 + 8*a[2,0,2]^2 + 4*a[2,1,1]^2 + 8*a[2,2,0]^2 + 30*a[3,0,1]^2 + 30*a[3,1,0]^2 + 192*a[4,0,0]^2"},
      {"r12", 0, 1,
       "72*a[3,1,0]*a[4,0,0] + 36*a[2,2,0]*a[3,1,0] + 18*a[2,1,1]*a[3,0,1] + 36*a[1,3,0]*a[2,2,0] + 12*a[1,2,1]*a[2,1,1] + 12*a[1,1,2]*a[2,0,2] + 72*a[0,4,0]*a[1,3,0] + 18*a[0,3,1]*a[1,2,1] + 12*a[0,2,2]*a[1,1,2] + 18*a[0,1,3]*a[1,0,3]"},
      {"r13", 0, 2,
       "72*a[3,0,1]*a[4,0,0] + 18*a[2,1,1]*a[3,1,0] + 36*a[2,0,2]*a[3,0,1] + 12*a[1,2,1]*a[2,2,0] + 12*a[1,1,2]*a[2,1,1] + 36*a[1,0,3]*a[2,0,2] + 18*a[0,3,1]*a[1,3,0] + 12*a[0,2,2]*a[1,2,1] + 18*a[0,1,3]*a[1,1,2] + 72*a[0,0,4]*a[1,0,3]"},
      {"r22", 1, 1,
       "-96*a[4,0,0]^2 - 6*a[3,1,0]^2 - 24*a[3,0,1]^2 + 8*a[2,2,0]^2 - 2*a[2,1,1]^2 - 16*a[2,0,2]^2 + 30*a[1,3,0]^2 + 4*a[1,2,1]^2 - 2*a[1,1,2]^2 - 24*a[1,0,3]^2 + 192*a[0,4,0]^2 + 30*a[0,3,1]^2 + 8*a[0,2,2]^2 - 6*a[0,1,3]^2 - 96*a[0,0,4]^2"},
      {"r23", 1, 2,
       "18*a[3,0,1]*a[3,1,0] + 12*a[2,1,1]*a[2,2,0] + 12*a[2,0,2]*a[2,1,1] + 18*a[1,2,1]*a[1,3,0] + 12*a[1,1,2]*a[1,2,1] + 18*a[1,0,3]*a[1,1,2] + 72*a[0,3,1]*a[0,4,0] + 36*a[0,2,2]*a[0,3,1] + 36*a[0,1,3]*a[0,2,2] + 72*a[0,0,4]*a[0,1,3]"},
      {"r33", 2, 2,
       "-96*a[4,0,0]^2 - 24*a[3,1,0]^2 - 6*a[3,0,1]^2 - 16*a[2,2,0]^2 - 2*a[2,1,1]^2 + 8*a[2,0,2]^2 - 24*a[1,3,0]^2 - 2*a[1,2,1]^2 + 4*a[1,1,2]^2 + 30*a[1,0,3]^2 - 96*a[0,4,0]^2 - 6*a[0,3,1]^2 + 8*a[0,2,2]^2 + 30*a[0,1,3]^2 + 192*a[0,0,4]^2"},
  };
  return v;
}

}  // namespace momentforge::fixtures
