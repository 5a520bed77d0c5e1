#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planar/line.hpp"
#include "planar/number_set.hpp"
#include "planar/rational.hpp"

namespace planar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counts, or the first counterexample
};

bool all_pass(const std::vector<CheckResult>& checks);

// Pairwise classification against the R^4 rank oracle: `trials` random pairs
// per system plus every unordered pair (self-pairs included) of the pinned
// 729-line coefficient grid per system.
std::vector<CheckResult> verify_lemmas(std::uint64_t seed, std::uint64_t trials);

// The grid behind the exhaustive half of verify_lemmas: slopes over the 9x9
// values of {-2..2}/{1,2}, intercepts over {-1/2, 0, 1}.
std::vector<Line2> pinned_grid_lines(System sys);

// Elekes configurations over `sets` random invertible sets of size n per
// system: n^2 distinct lines, witnessed incidences, I >= n^3, and the
// special/standard partition with no dyadic bound violations.
std::vector<CheckResult> verify_elekes(std::uint64_t seed, std::size_t n, std::size_t sets);

// The full chain on one generated construction: ratio-fiber total, dyadic
// class membership, expansion identities, representative cover, wedge
// disjointness, pigeonhole, the energy lower bound, and the chain sum.
std::vector<CheckResult> verify_solymosi(ConstructionKind kind, std::uint64_t n,
                                         std::optional<Rational> alpha);

enum class VerifySuite : std::uint8_t { Lemmas, Elekes, Solymosi, All };

VerifySuite parse_suite(std::string_view name); // throws UsageError
std::string suite_name(VerifySuite s);

} // namespace planar
