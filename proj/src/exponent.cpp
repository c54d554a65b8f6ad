#include "momentforge/exponent.hpp"

namespace momentforge {

std::string variable_name(int i, int n) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

std::string monomial_string(const ExponentVector& e) {
  std::string out;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(i, e.size());
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace momentforge
