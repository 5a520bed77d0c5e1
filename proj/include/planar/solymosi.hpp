#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/number_set.hpp"

namespace planar {

// Keeps the majority sign of the primary functional (Re or DeltaPlus) and
// negates when that majority is negative, so every kept element has a
// positive functional value. Ties keep the positive half. Input must be
// invertible-pruned (UsageError otherwise).
NumberSet normalize_positive(const NumberSet& a);

// The energy / dyadic-class / wedge chain run on the normalized set.
// Point ids refer to P = A x A with id = i * |A| + j for (a_i, a_j).
struct WedgeReport {
    System system = System::Dual;
    std::size_t n = 0;          // |A| after normalization
    unsigned dyadic_class_m = 0;
    std::vector<Rational> lambda;                          // ascending
    std::vector<std::vector<std::size_t>> fiber_point_ids; // P on each ratio line
    std::vector<std::vector<std::size_t>> rep_point_ids;   // S_i per consecutive pair
    std::vector<std::uint64_t> expansion_sizes;            // |(P on l_i) + S_i|
    bool fibers_in_class = false;   // 2^m <= |fiber| < 2^(m+1) for every lambda
    bool expansion_exact = false;   // every expansion equals |fiber_i| * |S_i|
    bool reps_cover = false;        // |fiber_(i+1)| <= |S_i| * k^2 for every i
    bool wedges_disjoint = false;   // consecutive-pair real sumsets pairwise disjoint
    bool pigeonhole_ok = false;     // E <= |Lambda| * 2^(2m+2) * ceil(log2 n)
    bool energy_lower_ok = false;   // E * |AA| >= n^4
    bool chain_sum_ok = false;      // |A+A|^2 >= sum of |fiber_i| * |S_i|
    std::uint64_t sumset_size = 0;
    std::uint64_t productset_size = 0;
    std::uint64_t multiplicity_k = 0;
    Rational chain_ratio;           // |A+A|^2 * |AA| * k^2 / n^4
    double chain_ratio_approx = 0.0;
};

struct SolymosiResult {
    NumberSet normalized;
    EnergyReport energy;
    WedgeReport wedge;
};

// Runs the full chain: positivity normalization, energy report, dyadic class
// selection, ratio-line fibers, representative sets, exact expansion
// identities, wedge disjointness, and the closing inequalities.
// UsageError when the input has non-invertible elements or fewer than 2
// elements survive normalization.
SolymosiResult solymosi_pipeline(const NumberSet& a);

} // namespace planar
