#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "planar/line.hpp"
#include "planar/number.hpp"

namespace planar {

// All randomized inputs flow through mt19937_64 plus the helpers below.
// mt19937_64 output is pinned by the standard and the sampling here avoids
// std::uniform_int_distribution (implementation-defined), so a seed fully
// determines every generated input on every platform.
inline std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v;
    do {
        v = g();
    } while (v >= limit);
    return v % n;
}

inline std::int64_t rand_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_below(g, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Unbiased in-place permutation (std::shuffle leaves the draw order
// implementation-defined, so it is avoided).
template <typename T>
void shuffle_det(std::mt19937_64& g, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_below(g, i)]);
}

Rational rand_rational(std::mt19937_64& g, std::int64_t box, std::int64_t max_den);
PlanarNumber rand_planar(std::mt19937_64& g, System sys, std::int64_t box, std::int64_t max_den);

// n distinct invertible elements with integer coordinates in [-box, box].
std::vector<PlanarNumber> random_invertible_elements(std::mt19937_64& g, System sys, std::size_t n,
                                                     std::int64_t box);

// Random slope-form line with small rational coefficients.
Line2 rand_slope_line(std::mt19937_64& g, System sys, std::int64_t box, std::int64_t max_den);

// Slope pair drawn from a strategy mix that forces slope/intercept
// coincidences often enough to hit every intersection classification branch.
std::pair<Line2, Line2> random_slope_pair(std::mt19937_64& g, System sys);

// Slope-form line set engineered to contain several families, including
// same-real-line dual families, both double signs, and families overlapping
// in a member line, plus noise. Size stays in the low dozens.
std::vector<Line2> random_family_rich_lines(std::mt19937_64& g, System sys);

} // namespace planar
