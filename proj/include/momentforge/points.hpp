#pragma once

#include <array>
#include <vector>

#include "momentforge/sparse_poly.hpp"

namespace momentforge {

using Point3 = std::array<double, 3>;

/// Approximate real zeros of a ternary form inside [-box, box]^3, found by
/// bisecting sign changes along the lines of a samples^3 grid parallel to
/// each axis. Points closer to the origin than box * 1e-6 are dropped. May be
/// empty. Throws DimensionError unless n = 3, DomainError for box <= 0 or
/// samples < 2.
std::vector<Point3> emit_points(const SparsePoly<double>& f, double box, int samples);

double evaluate(const SparsePoly<double>& f, const Point3& p);

}  // namespace momentforge
