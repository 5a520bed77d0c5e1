#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planar/number.hpp"

namespace planar {

// Deduplicated same-system set, stored in the deterministic lexicographic
// (re, im) order. Immutable after construction; all iteration order is pinned.
class NumberSet {
  public:
    NumberSet(System sys, std::vector<PlanarNumber> elements); // dedups + sorts
    explicit NumberSet(System sys) : system_(sys) {}

    System system() const { return system_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<PlanarNumber>& elements() const { return elems_; }
    bool contains(const PlanarNumber& x) const;

    bool operator==(const NumberSet& o) const {
        return system_ == o.system_ && elems_ == o.elems_;
    }

  private:
    System system_;
    std::vector<PlanarNumber> elems_;
};

struct MultiplicityProfile {
    std::uint64_t k = 0;
    // log k / log n; absent when n <= 1. Diagnostic decimals only.
    std::optional<double> alpha;
    std::optional<std::string> alpha_decimal50;
};

NumberSet sumset(const NumberSet& a);
NumberSet productset(const NumberSet& a);
NumberSet cross_sumset(const NumberSet& a, const NumberSet& b);     // A+B
NumberSet cross_productset(const NumberSet& a, const NumberSet& b); // A*B

// Max fiber size under re (dual) or under both DeltaPlus and DeltaMinus
// (double); only realized fiber keys matter.
MultiplicityProfile multiplicity(const NumberSet& a);

// Largest fiber count for one specific functional (helper for the double
// system, where multiplicity maxes over two fiber histograms).
std::uint64_t max_fiber(const NumberSet& a, Functional which);

NumberSet prune_noninvertible(const NumberSet& a);

// Greedy retention: walk elements in the set order, keep an element while
// every one of its fiber counts is below k. Idempotent, never increases
// multiplicity.
NumberSet prune_to_multiplicity(const NumberSet& a, std::uint64_t k);

struct PlanarLexLess {
    bool operator()(const PlanarNumber& a, const PlanarNumber& b) const { return lex_less(a, b); }
};

struct EnergyReport {
    // Sum over exact products t of (#ordered pairs with a*a'=t)^2; this is
    // E^x by the quadruple identity and is always computed.
    std::uint64_t energy = 0;
    // Literal O(n^4) quadruple count, present while |A| <= quad_cutoff.
    std::optional<std::uint64_t> energy_quadruple;
    // Exact product histogram behind the energy identity.
    std::map<PlanarNumber, std::uint64_t, PlanarLexLess> r_times_hist;
    // Quotient-parameter histogram: lambda = Re(a/a') or DeltaPlus(a/a').
    std::map<Rational, std::uint64_t> r_div_hist;
    // Dyadic class maximizing sum of r^2 over the class (ties -> smallest m).
    unsigned dyadic_class_m = 0;
    // Ascending lambda with 2^m <= r_div(lambda) < 2^(m+1).
    std::vector<Rational> lambda;
};

// Requires every element invertible (quotients are taken); UsageError otherwise.
EnergyReport energy_report(const NumberSet& a, std::size_t quad_cutoff = 64);

enum class ConstructionKind : std::uint8_t {
    UnitRealDual,      // {1 + m e : 1 <= m <= n}
    DualGrid,          // {a1 + a2 e : 1 <= a1 <= round(n^(1-alpha)), 1 <= a2 <= round(n^alpha)}
    DoubleNullPair,    // A = {m + m j}, B = {m' - m' j}; AB = {0}
    DoubleDiagonalGrid // {u + v j : u=(p+q)/2, v=(p-q)/2}; DeltaPlus = p, DeltaMinus = q
};

std::string construction_name(ConstructionKind k);
ConstructionKind parse_construction(std::string_view name);
bool construction_wants_alpha(ConstructionKind k);

struct Generated {
    NumberSet a;
    std::optional<NumberSet> b; // DoubleNullPair only
};

Generated generate(ConstructionKind kind, std::uint64_t n, std::optional<Rational> alpha);

} // namespace planar
