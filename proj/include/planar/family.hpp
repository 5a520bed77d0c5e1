#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar/intersect.hpp"
#include "planar/line.hpp"

namespace planar {

enum class FamilySign : std::uint8_t { Positive, Negative };

std::string family_sign_name(FamilySign s);

// A maximal group of slope-form lines with a common infinite intersection.
// Dual families carry the shared real line and the special point; double
// families carry a sign, the constant functional values of (a, b) (line
// parameter) and of the intersection coordinates (point parameter).
struct LineFamily {
    System system = System::Dual;
    std::vector<std::size_t> member_line_ids; // indices into the input list
    Line4 intersection;                       // common R^4 line, canonical

    std::optional<std::pair<Rational, Rational>> real_line;     // dual: (a1, b1)
    std::optional<std::pair<Rational, Rational>> special_point; // dual: (r1, r2)

    std::optional<FamilySign> sign;                              // double
    std::optional<std::pair<Rational, Rational>> line_parameter;  // double: (t1, t2)
    std::optional<std::pair<Rational, Rational>> point_parameter; // double: (s, s')

    // all imaginary intercepts equal (dual, r1=0) / all functional intercepts
    // equal (double, s=0); otherwise the slope relation constants are set
    bool constant_offset = false;
    std::optional<Rational> m;
    std::optional<Rational> m_prime; // double only
};

// All maximal families of at least min_size lines (clamped to >= 2, the
// smallest witnessable group). Non-slope and duplicate input lines are
// skipped or merged, with a note appended to warnings when provided.
std::vector<LineFamily> detect_families(const std::vector<Line2>& lines, std::size_t min_size,
                                        std::vector<std::string>* warnings = nullptr);

// Splits slope-form lines into the minimum number of parts in which all
// slope fiber keys are distinct: parts count equals the slope multiplicity.
// Dual uses per-fiber round-robin; double colors the bipartite multigraph on
// (DeltaPlus, DeltaMinus) slope keys with max-degree many colors.
std::vector<std::vector<Line2>> partition_multiplicity_one(const std::vector<Line2>& lines);

// The hyperplane containing every member 2-flat of a double family:
// y1 -+ y2 = t1 (x1 -+ x2) + t2 with the upper signs for POSITIVE families.
// UsageError for dual families (no analogous statement).
AffineFlat4 family_hyperplane(const LineFamily& f);

} // namespace planar
