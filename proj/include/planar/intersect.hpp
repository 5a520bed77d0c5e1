#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "planar/line.hpp"
#include "planar/linalg.hpp"

namespace planar {

enum class IntersectKind : std::uint8_t { Empty, Single, InfiniteLine, Identical };

std::string intersect_kind_name(IntersectKind k);

struct Intersection {
    IntersectKind kind = IntersectKind::Empty;
    std::optional<Point2> point; // Single
    std::optional<Line4> line;   // InfiniteLine, canonical

    bool operator==(const Intersection& o) const {
        return kind == o.kind && point == o.point && line == o.line;
    }
    bool operator!=(const Intersection& o) const { return !(*this == o); }
};

// Case analysis on the slope coefficients. Slope-slope pairs run the closed
// formulas; any other pair is routed to the rank oracle.
Intersection classify_intersection(const Line2& l1, const Line2& l2);

// Independent route: exact elimination on the stacked 4x5 split system,
// classified by solution dimension (none -> Empty, 0 -> Single,
// 1 -> InfiniteLine, >= 2 -> Identical).
Intersection r4_oracle(const Line2& l1, const Line2& l2);

} // namespace planar
