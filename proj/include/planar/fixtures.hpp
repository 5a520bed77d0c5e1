#pragma once

#include <cstddef>
#include <vector>

#include "planar/line.hpp"

namespace planar {

// Hand-checked family configurations used as test and demo fixtures. Every
// point of a fixture lies on every line of the same fixture.

// Dual family: (1+m e)x + (1-(m-1)e)y = 2+e for m = 1..count. In slope form
// this is y = -(1+(2m-1)e)x + (2+(2m-1)e); the common intersection passes
// through the special point (1, 1).
std::vector<Line2> dual_fixture_lines(std::size_t count, bool general = false);

// Incident points (1+a e, 1-a e) for a = 1..count.
std::vector<Point2> dual_fixture_points(std::size_t count);

// Double positive family: y = (k+(k-1)j)x + ((15-3k)+(9-3k)j) for k = 1..count,
// with line parameter (1, 6) and point parameter (3, 21).
std::vector<Line2> double_fixture_lines(std::size_t count);

// Intersection points (c+(3-c)j, 12+c+(9-c)j) for c = 1..count.
std::vector<Point2> double_fixture_points(std::size_t count);

} // namespace planar
