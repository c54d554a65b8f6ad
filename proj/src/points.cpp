#include "momentforge/points.hpp"

#include <cmath>

namespace momentforge {

double evaluate(const SparsePoly<double>& f, const Point3& p) {
  double total = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double t = c;
    for (int i = 0; i < 3; ++i) t *= std::pow(p[static_cast<size_t>(i)], e[i]);
    total += t;
  }
  return total;
}

std::vector<Point3> emit_points(const SparsePoly<double>& f, double box, int samples) {
  if (f.nvars() != 3) throw DimensionError("point sampling needs a ternary form");
  if (!(box > 0.0)) throw DomainError("box must be positive");
  if (samples < 2) throw DomainError("need at least two samples per axis");

  const double step = 2.0 * box / (samples - 1);
  const double near_origin = box * 1e-6;
  auto coord = [&](int k) { return -box + step * k; };
  std::vector<Point3> out;
  auto keep = [&](const Point3& p) {
    if (std::hypot(p[0], p[1], p[2]) > near_origin) out.push_back(p);
  };

  for (int axis = 0; axis < 3; ++axis) {
    const int u_axis = (axis + 1) % 3;
    const int v_axis = (axis + 2) % 3;
    for (int a = 0; a < samples; ++a) {
      for (int b = 0; b < samples; ++b) {
        Point3 p{};
        p[static_cast<size_t>(u_axis)] = coord(a);
        p[static_cast<size_t>(v_axis)] = coord(b);
        auto at = [&](double t) {
          p[static_cast<size_t>(axis)] = t;
          return evaluate(f, p);
        };
        double prev_t = coord(0);
        double prev = at(prev_t);
        // grid nodes themselves are reported once, from the first axis
        if (prev == 0.0 && axis == 0) { p[0] = prev_t; keep(p); }
        for (int k = 1; k < samples; ++k) {
          double t = coord(k);
          double cur = at(t);
          if (cur == 0.0) {
            if (axis == 0) { p[0] = t; keep(p); }
          } else if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) {
            double lo = prev_t, hi = t, flo = prev;
            for (int it = 0; it < 60 && hi - lo > 1e-14 * box; ++it) {
              double mid = 0.5 * (lo + hi);
              double fm = at(mid);
              if (fm == 0.0) { lo = hi = mid; break; }
              if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; } else { hi = mid; }
            }
            p[static_cast<size_t>(axis)] = 0.5 * (lo + hi);
            keep(p);
          }
          prev_t = t;
          prev = cur;
        }
      }
    }
  }
  return out;
}

}  // namespace momentforge
