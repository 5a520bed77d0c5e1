#include "planar/fixtures.hpp"

namespace planar {

std::vector<Line2> dual_fixture_lines(std::size_t count, bool general) {
    std::vector<Line2> out;
    out.reserve(count);
    for (long m = 1; m <= static_cast<long>(count); ++m) {
        if (general)
            out.push_back(Line2::general_form(dual(1, m), dual(1, 1 - m), dual(2, 1)));
        else
            out.push_back(Line2::slope_form(dual(-1, 1 - 2 * m), dual(2, 2 * m - 1)));
    }
    return out;
}

std::vector<Point2> dual_fixture_points(std::size_t count) {
    std::vector<Point2> out;
    out.reserve(count);
    for (long a = 1; a <= static_cast<long>(count); ++a)
        out.push_back(make_point(dual(1, a), dual(1, -a)));
    return out;
}

std::vector<Line2> double_fixture_lines(std::size_t count) {
    std::vector<Line2> out;
    out.reserve(count);
    for (long k = 1; k <= static_cast<long>(count); ++k)
        out.push_back(Line2::slope_form(dbl(k, k - 1), dbl(15 - 3 * k, 9 - 3 * k)));
    return out;
}

std::vector<Point2> double_fixture_points(std::size_t count) {
    std::vector<Point2> out;
    out.reserve(count);
    for (long c = 1; c <= static_cast<long>(count); ++c)
        out.push_back(make_point(dbl(c, 3 - c), dbl(12 + c, 9 - c)));
    return out;
}

} // namespace planar
