#pragma once

#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace momentforge {

/// Multidegree (α₁,…,αₙ) of a monomial in n variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int n) : e_(static_cast<size_t>(n), 0) {}
  ExponentVector(std::initializer_list<int> e) : e_(e) {}
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {}

  int size() const { return static_cast<int>(e_.size()); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return e_; }

  /// Copy with exponent i shifted by delta (may go negative; caller checks).
  ExponentVector shifted(int i, int delta) const {
    ExponentVector r = *this;
    r.e_[static_cast<size_t>(i)] += delta;
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> e_;
};

/// THE canonical monomial order: ascending lexicographic on (αₙ, αₙ₋₁, …, α₁).
/// For n = 3, d = 3 this lists x³, x²y, xy², y³, x²z, xyz, y²z, xz², yz², z³.
struct CanonicalLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    for (int i = a.size() - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Display order is the reverse of the canonical order: the printed form of
/// a polynomial leads with its canonically largest monomial.
struct DisplayLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return CanonicalLess{}(b, a);
  }
};

/// Variable name: x, y, z for n <= 3, otherwise x1..xn.
std::string variable_name(int i, int n);

/// Human-readable monomial, e.g. "x^2*y"; "1" for the zero vector.
std::string monomial_string(const ExponentVector& e);

}  // namespace momentforge
