#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar/family.hpp"
#include "planar/line.hpp"
#include "planar/number_set.hpp"

namespace planar {

// P = (A+A) x (AA) and L = { y = c(x-d) : c,d in A }. The witness points
// (d+b, cb) give |L||A| incidences, so I(P,L) >= |A|^3.
struct ElekesConfig {
    NumberSet a;        // all invertible
    NumberSet sums;     // A+A
    NumberSet products; // AA
    std::vector<Point2> points; // row-major over (sums, products) set order
    std::vector<Line2> lines;   // ordered by (c, d) set order
    std::vector<std::pair<std::size_t, std::size_t>> line_cd; // indices into a
    std::vector<std::uint64_t> line_incidences; // exact per-line counts
    std::uint64_t total_incidences = 0;
};

// Materializes the configuration and verifies the witness incidences.
// Throws UsageError when A has a non-invertible element or fewer than 2.
ElekesConfig build_elekes(const NumberSet& a);

// One special incidence with its exact dyadic statistics: the line count of
// the incidence line's group key, the witnessing family's size, the point
// count of the incidence point's functional-pair fiber, and the number of
// same-size-class families sharing the family's special point / point
// parameter.
struct SpecialIncidence {
    std::size_t point_id = 0;
    std::size_t line_id = 0;
    std::size_t family_id = 0;
    std::uint64_t n_group_lines = 0;
    std::uint64_t n_family_lines = 0;
    std::uint64_t n_fiber_points = 0;
    std::uint64_t n_same_point_families = 0;
};

struct SpecialIncidenceStats {
    System system = System::Dual;
    std::optional<FamilySign> sign; // double only
    std::size_t n = 0;              // |A|
    std::uint64_t n_special = 0;
    std::uint64_t n_standard = 0;
    std::vector<LineFamily> families; // detected among L (filtered by sign)
    std::vector<SpecialIncidence> specials;
    // count of special incidences per dyadic class quadruple
    // (floor log2 of each SpecialIncidence statistic, in field order)
    std::map<std::array<unsigned, 4>, std::uint64_t> histogram;
    // S, T, F of the classification: special points / point parameters,
    // real lines / line parameters, and participating family ids
    std::vector<std::pair<Rational, Rational>> s_points;
    std::vector<std::pair<Rational, Rational>> t_lines;
    std::vector<std::size_t> f_family_ids;
    // Exact-count analogs of the dyadic constraints; empty when all hold:
    // group fiber <= k^2, family size <= min(k, group fiber), point fiber <=
    // k_sum*k_prod, and (same-point families in class) * 2^m <= lines through
    // the special point <= n*k.
    std::vector<std::string> bound_violations;
};

// Labels every incidence special or standard. A special incidence needs a
// second co-family line through the point; for double numbers the point must
// lie in the family's infinite intersection (for dual numbers the two
// conditions coincide for distinct lines, and the first form is used).
// Double statistics cover one sign at a time, positive by default.
// The pair scan is capped at |A| <= cap (UsageError beyond).
SpecialIncidenceStats classify_incidences(const ElekesConfig& cfg,
                                          FamilySign double_sign = FamilySign::Positive,
                                          std::size_t cap = 32);

// Diagnostic log-ratio exponents (alpha', beta, gamma, delta) of one record:
// log of each statistic over log n, halved for the group-line count.
std::array<double, 4> incidence_exponents(const SpecialIncidenceStats& stats,
                                          const SpecialIncidence& rec);

} // namespace planar
