#include "planar/solymosi.hpp"

#include <gmpxx.h>
#include <set>
#include <utility>
#include <vector>

#include "planar/errors.hpp"

namespace planar {

namespace {

using RealPoint = std::pair<Rational, Rational>;

struct PointLexLess {
    bool operator()(const std::pair<PlanarNumber, PlanarNumber>& a,
                    const std::pair<PlanarNumber, PlanarNumber>& b) const {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    }
};

} // namespace

NumberSet normalize_positive(const NumberSet& a) {
    std::vector<PlanarNumber> plus, minus;
    for (const PlanarNumber& x : a.elements()) {
        if (!is_invertible(x))
            throw UsageError("positivity needs invertible elements; prune first");
        (primary_functional(x).sign() > 0 ? plus : minus).push_back(x);
    }
    if (minus.size() <= plus.size()) return NumberSet(a.system(), std::move(plus));
    for (PlanarNumber& x : minus) x = -x;
    return NumberSet(a.system(), std::move(minus));
}

SolymosiResult solymosi_pipeline(const NumberSet& a) {
    NumberSet norm = normalize_positive(a);
    if (norm.size() < 2) throw UsageError("fewer than 2 elements survive normalization");

    EnergyReport energy = energy_report(norm);
    WedgeReport w;
    w.system = norm.system();
    w.n = norm.size();
    w.dyadic_class_m = energy.dyadic_class_m;
    w.lambda = energy.lambda;

    const auto& el = norm.elements();
    const std::size_t n = el.size();
    std::vector<Rational> pf(n);
    for (std::size_t i = 0; i < n; ++i) pf[i] = primary_functional(el[i]);

    // P on the ratio line for lambda: pf(x) == lambda * pf(y); the fiber size
    // must reproduce the quotient histogram and sit in the selected class
    w.fibers_in_class = true;
    const std::uint64_t class_lo = std::uint64_t(1) << w.dyadic_class_m;
    for (const Rational& lam : w.lambda) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (pf[i] == lam * pf[j]) ids.push_back(i * n + j);
        std::uint64_t r = ids.size();
        if (r != energy.r_div_hist.at(lam) || r < class_lo || r >= 2 * class_lo)
            w.fibers_in_class = false;
        w.fiber_point_ids.push_back(std::move(ids));
    }

    w.sumset_size = sumset(norm).size();
    w.productset_size = productset(norm).size();
    w.multiplicity_k = multiplicity(norm).k;

    auto proj = [&](std::size_t id) -> RealPoint { return {pf[id / n], pf[id % n]}; };

    // S_i keeps one point per distinct projection on line i+1; sums against
    // the full fiber i expand with no collisions
    w.expansion_exact = true;
    w.reps_cover = true;
    mpz_class chain_sum = 0;
    for (std::size_t i = 0; i + 1 < w.lambda.size(); ++i) {
        const auto& next = w.fiber_point_ids[i + 1];
        std::vector<std::size_t> reps;
        std::set<RealPoint> seen;
        for (std::size_t id : next)
            if (seen.insert(proj(id)).second) reps.push_back(id);
        if (next.size() > reps.size() * w.multiplicity_k * w.multiplicity_k)
            w.reps_cover = false;

        std::set<std::pair<PlanarNumber, PlanarNumber>, PointLexLess> expanded;
        for (std::size_t pid : w.fiber_point_ids[i])
            for (std::size_t sid : reps)
                expanded.insert({add(el[pid / n], el[sid / n]), add(el[pid % n], el[sid % n])});
        w.expansion_sizes.push_back(expanded.size());
        if (expanded.size() != w.fiber_point_ids[i].size() * reps.size())
            w.expansion_exact = false;
        chain_sum += mpz_class(static_cast<unsigned long>(w.fiber_point_ids[i].size())) *
                     static_cast<unsigned long>(reps.size());
        w.rep_point_ids.push_back(std::move(reps));
    }

    // consecutive-pair real sumsets land strictly between their ratio lines,
    // so they never meet across pairs
    std::vector<std::set<RealPoint>> wedges;
    for (std::size_t i = 0; i + 1 < w.lambda.size(); ++i) {
        std::set<RealPoint> left, right, sum;
        for (std::size_t id : w.fiber_point_ids[i]) left.insert(proj(id));
        for (std::size_t id : w.fiber_point_ids[i + 1]) right.insert(proj(id));
        for (const RealPoint& p : left)
            for (const RealPoint& q : right) sum.insert({p.first + q.first, p.second + q.second});
        wedges.push_back(std::move(sum));
    }
    w.wedges_disjoint = true;
    for (std::size_t i = 0; i < wedges.size(); ++i)
        for (std::size_t j = i + 1; j < wedges.size(); ++j)
            for (const RealPoint& p : wedges[i])
                if (wedges[j].count(p)) w.wedges_disjoint = false;

    // closing inequalities in integer arithmetic
    unsigned log2n_up = 0;
    while ((std::uint64_t(1) << log2n_up) < n) ++log2n_up;
    mpz_class e(static_cast<unsigned long>(energy.energy));
    mpz_class budget = mpz_class(static_cast<unsigned long>(w.lambda.size()))
                       << (2 * w.dyadic_class_m + 2);
    w.pigeonhole_ok = e <= budget * log2n_up;
    mpz_class n4(static_cast<unsigned long>(n));
    n4 = n4 * n4 * n4 * n4;
    w.energy_lower_ok = e * static_cast<unsigned long>(w.productset_size) >= n4;
    mpz_class sum_sq = mpz_class(static_cast<unsigned long>(w.sumset_size)) *
                       static_cast<unsigned long>(w.sumset_size);
    w.chain_sum_ok = sum_sq >= chain_sum;

    Rational num = Rational(static_cast<long>(w.sumset_size)) *
                   Rational(static_cast<long>(w.sumset_size)) *
                   Rational(static_cast<long>(w.productset_size)) *
                   Rational(static_cast<long>(w.multiplicity_k)) *
                   Rational(static_cast<long>(w.multiplicity_k));
    Rational den = Rational(static_cast<long>(n)) * Rational(static_cast<long>(n)) *
                   Rational(static_cast<long>(n)) * Rational(static_cast<long>(n));
    w.chain_ratio = num / den;
    w.chain_ratio_approx = w.chain_ratio.approx();

    return {std::move(norm), std::move(energy), std::move(w)};
}

} // namespace planar
