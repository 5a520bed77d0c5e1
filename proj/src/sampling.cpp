#include "planar/sampling.hpp"

#include <unordered_set>

#include "planar/errors.hpp"

namespace planar {

Rational rand_rational(std::mt19937_64& g, std::int64_t box, std::int64_t max_den) {
    long num = static_cast<long>(rand_int(g, -box, box));
    long den = static_cast<long>(rand_int(g, 1, max_den));
    return Rational(num, den);
}

PlanarNumber rand_planar(std::mt19937_64& g, System sys, std::int64_t box, std::int64_t max_den) {
    return {sys, rand_rational(g, box, max_den), rand_rational(g, box, max_den)};
}

std::vector<PlanarNumber> random_invertible_elements(std::mt19937_64& g, System sys, std::size_t n,
                                                     std::int64_t box) {
    std::vector<PlanarNumber> out;
    std::unordered_set<PlanarNumber, PlanarNumberHash> seen;
    std::size_t attempts = 0, cap = 10000 * (n + 1);
    while (out.size() < n) {
        if (++attempts > cap) throw UsageError("sampling box too small for requested set size");
        PlanarNumber cand{sys, static_cast<long>(rand_int(g, -box, box)),
                          static_cast<long>(rand_int(g, -box, box))};
        if (!is_invertible(cand)) continue;
        if (seen.insert(cand).second) out.push_back(cand);
    }
    return out;
}

Line2 rand_slope_line(std::mt19937_64& g, System sys, std::int64_t box, std::int64_t max_den) {
    PlanarNumber a = rand_planar(g, sys, box, max_den);
    PlanarNumber b = rand_planar(g, sys, box, max_den);
    return Line2::slope_form(std::move(a), std::move(b));
}

namespace {

// additive shift that keeps the grouping key of its system constant: dual
// preserves the real part, double preserves DeltaMinus (sign=+) or DeltaPlus
PlanarNumber fiber_shift(std::mt19937_64& g, System sys, bool plus) {
    long t = static_cast<long>(rand_int(g, -3, 3));
    if (sys == System::Dual) return dual(0, t);
    return plus ? dbl(t, t) : dbl(t, -t);
}

} // namespace

std::pair<Line2, Line2> random_slope_pair(std::mt19937_64& g, System sys) {
    PlanarNumber a = rand_planar(g, sys, 4, 2);
    PlanarNumber b = rand_planar(g, sys, 4, 2);
    PlanarNumber a2 = a, b2 = b;
    bool plus = rng_below(g, 2) == 0;
    switch (rng_below(g, 6)) {
    case 0: // independent
        a2 = rand_planar(g, sys, 4, 2);
        b2 = rand_planar(g, sys, 4, 2);
        break;
    case 1: // same slope: parallel or identical
        b2 = rand_planar(g, sys, 4, 2);
        break;
    case 2: // identical
        break;
    case 3: // same slope fiber, free intercept
        a2 = add(a, fiber_shift(g, sys, plus));
        b2 = rand_planar(g, sys, 4, 2);
        break;
    case 4: // slope and intercept shifted along one fiber: infinite candidates
        a2 = add(a, fiber_shift(g, sys, plus));
        b2 = add(b, fiber_shift(g, sys, plus));
        break;
    case 5: // collision-prone small integers
        a = PlanarNumber{sys, rand_int(g, -2, 2), rand_int(g, -2, 2)};
        b = PlanarNumber{sys, rand_int(g, -2, 2), rand_int(g, -2, 2)};
        a2 = PlanarNumber{sys, rand_int(g, -2, 2), rand_int(g, -2, 2)};
        b2 = PlanarNumber{sys, rand_int(g, -2, 2), rand_int(g, -2, 2)};
        break;
    }
    return {Line2::slope_form(std::move(a), std::move(b)),
            Line2::slope_form(std::move(a2), std::move(b2))};
}

namespace {

// slope/intercept pair from group value t and point-plane coordinates: dual
// group key is the real part, double splits between the two functionals
PlanarNumber from_group_and_point(System sys, bool plus, const Rational& t, const Rational& p) {
    if (sys == System::Dual) return {sys, t, p};
    Rational half(1, 2);
    if (plus) return {sys, (p + t) * half, (p - t) * half}; // DeltaMinus=t, DeltaPlus=p
    return {sys, (t + p) * half, (t - p) * half};           // DeltaPlus=t, DeltaMinus=p
}

void emit_family(std::mt19937_64& g, System sys, bool plus, const Rational& ta, const Rational& tb,
                 const Rational& s, const Rational& v, std::size_t size,
                 std::vector<Line2>& out) {
    // members are distinct point-plane abscissae pa with ordinate v - s*pa
    std::int64_t start = rand_int(g, -4, 4);
    for (std::size_t i = 0; i < size; ++i) {
        Rational pa(static_cast<long>(start) + static_cast<long>(i) * (sys == System::Dual ? 1 : 2));
        Rational pb = v - s * pa;
        out.push_back(Line2::slope_form(from_group_and_point(sys, plus, ta, pa),
                                        from_group_and_point(sys, plus, tb, pb)));
    }
}

} // namespace

std::vector<Line2> random_family_rich_lines(std::mt19937_64& g, System sys) {
    std::vector<Line2> out;
    std::size_t n_groups = 1 + rng_below(g, 2);
    for (std::size_t gi = 0; gi < n_groups; ++gi) {
        Rational ta = rand_rational(g, 3, 1), tb = rand_rational(g, 3, 1);
        bool plus = sys == System::Dual || rng_below(g, 2) == 0;
        // several families on one group key; sometimes all through one shared
        // point-plane point, which caps pairwise overlap at that single line
        bool share = rng_below(g, 2) == 0;
        Rational shared_pa = rand_rational(g, 3, 1), shared_pb = rand_rational(g, 3, 1);
        std::size_t n_fam = 2 + rng_below(g, 2);
        for (std::size_t fi = 0; fi < n_fam; ++fi) {
            Rational s = rand_rational(g, 2, 2);
            Rational v = share ? shared_pb + s * shared_pa : rand_rational(g, 4, 1);
            emit_family(g, sys, plus, ta, tb, s, v, 3 + rng_below(g, 3), out);
        }
        if (sys == System::Double && rng_below(g, 2) == 0) {
            // an opposite-sign family through the last emitted line
            const Line2& pivot = out.back();
            bool nplus = !plus;
            Functional gf = nplus ? Functional::DeltaMinus : Functional::DeltaPlus;
            Functional pf = nplus ? Functional::DeltaPlus : Functional::DeltaMinus;
            Rational nta = functional(pivot.a(), gf), ntb = functional(pivot.b(), gf);
            Rational pa = functional(pivot.a(), pf), pb = functional(pivot.b(), pf);
            Rational s = rand_rational(g, 2, 2);
            emit_family(g, sys, nplus, nta, ntb, s, pb + s * pa, 3, out);
        }
    }
    for (std::size_t i = 0; i < 3; ++i) out.push_back(rand_slope_line(g, sys, 5, 2));
    shuffle_det(g, out);
    return out;
}

} // namespace planar
