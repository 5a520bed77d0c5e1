#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar/number_set.hpp"

namespace planar {

// Exact lower-bound exponent for max{|A+A|,|AA|} at multiplicity n^alpha.
// The case table is identical for both systems.
struct TheoremExponent {
    System system = System::Dual;
    Rational alpha;
    Rational exponent;
    std::string case_label; // the alpha range the exponent comes from
};

// Valid range is 0 <= alpha < kappa with kappa = (39 - sqrt(721))/20; the
// comparison is exact: kappa is the first root of q(a) = 9/4 - 39a/16 +
// 5a^2/8 crossing 1, so alpha < kappa iff q(alpha) > 1 on [0, 39/20).
bool below_kappa(const Rational& alpha);

// Cases: (4-2a)/3 on [0,1/8); 5/4 on [1/8,1/3); 3/2-5a/8 on [1/3,1/2);
// q(a) on [1/2,kappa). Out-of-range alpha is a UsageError.
TheoremExponent theorem_exponent(System sys, const Rational& alpha);

struct ExponentEstimate {
    ConstructionKind kind;
    std::optional<Rational> alpha;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> measurements; // (n, max size)
    std::vector<std::uint64_t> sumset_sizes;    // per measurement
    std::vector<std::uint64_t> productset_sizes;
    std::vector<double> seconds; // wall time per size, diagnostic only
    double slope = 0.0;                 // least-squares log-log fit
    double envelope = 0.0;              // construction upper envelope
    std::optional<Rational> theorem_reference; // when alpha lies below kappa
};

// Generates the construction per size, measures max{|A+A|,|AA|}, and fits
// the growth exponent. Sizes must be ascending with at least 3 entries;
// the two-set null-pair construction has no single-set sweep (UsageError).
ExponentEstimate exponent_sweep(ConstructionKind kind, std::optional<Rational> alpha,
                                const std::vector<std::uint64_t>& sizes);

} // namespace planar
