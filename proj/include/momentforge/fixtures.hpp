#pragma once

#include <string>
#include <vector>

namespace momentforge::fixtures {

// Published lists, in the text syntax of parse_poly (n = 3). Each list keeps
// the printed order.

const std::vector<std::string>& quadric_basis();  // M(2)
const std::vector<std::string>& cubic_basis();    // M(3)

const std::vector<std::string>& cubic_orbits_1();
const std::vector<std::string>& cubic_orbits_2();
const std::vector<std::string>& cubic_orbits_3();
const std::vector<std::string>& quartic_orbits_2();
const std::vector<std::string>& quartic_orbits_3();

const std::vector<std::string>& cubic_diagonal_families();
const std::vector<std::string>& quartic_diagonal_families();

const std::vector<std::string>& cubic_critical();
const std::vector<std::string>& quartic_critical();

/// Printed quartic moment matrix: r, then r11, r12, r13, r22, r23, r33, in
/// the a[i,j,k] coefficient names.
struct QuarticMatrixEntry {
  std::string name;
  int i;
  int j;
  std::string expression;
};
const std::vector<QuarticMatrixEntry>& quartic_moment_matrix();

}  // namespace momentforge::fixtures
