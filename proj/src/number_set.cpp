#include "planar/number_set.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "planar/errors.hpp"

namespace planar {

NumberSet::NumberSet(System sys, std::vector<PlanarNumber> elements)
    : system_(sys), elems_(std::move(elements)) {
    for (const PlanarNumber& x : elems_)
        if (x.system != sys)
            throw UsageError("set element " + to_string(x) + " does not match the set system");
    std::sort(elems_.begin(), elems_.end(), lex_less);
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool NumberSet::contains(const PlanarNumber& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x, lex_less);
}

namespace {

using PairOp = PlanarNumber (*)(const PlanarNumber&, const PlanarNumber&);

NumberSet pairwise(const NumberSet& a, PairOp op) {
    const auto& e = a.elements();
    std::unordered_set<PlanarNumber, PlanarNumberHash> seen;
    seen.reserve(e.size() * 2);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) // both ops are commutative
            seen.insert(op(e[i], e[j]));
    return NumberSet(a.system(), std::vector<PlanarNumber>(seen.begin(), seen.end()));
}

NumberSet pairwise_cross(const NumberSet& a, const NumberSet& b, PairOp op) {
    if (a.system() != b.system()) throw UsageError("cross set operation over mixed systems");
    std::unordered_set<PlanarNumber, PlanarNumberHash> seen;
    seen.reserve(a.size() + b.size());
    for (const PlanarNumber& x : a.elements())
        for (const PlanarNumber& y : b.elements())
            seen.insert(op(x, y));
    return NumberSet(a.system(), std::vector<PlanarNumber>(seen.begin(), seen.end()));
}

} // namespace

NumberSet sumset(const NumberSet& a) { return pairwise(a, &add); }
NumberSet productset(const NumberSet& a) { return pairwise(a, &mul); }
NumberSet cross_sumset(const NumberSet& a, const NumberSet& b) { return pairwise_cross(a, b, &add); }
NumberSet cross_productset(const NumberSet& a, const NumberSet& b) { return pairwise_cross(a, b, &mul); }

std::uint64_t max_fiber(const NumberSet& a, Functional which) {
    std::unordered_map<Rational, std::uint64_t, RationalHash> hist;
    hist.reserve(a.size());
    std::uint64_t best = 0;
    for (const PlanarNumber& x : a.elements()) best = std::max(best, ++hist[functional(x, which)]);
    return best;
}

MultiplicityProfile multiplicity(const NumberSet& a) {
    MultiplicityProfile out;
    if (a.empty()) return out;
    if (a.system() == System::Dual) {
        out.k = max_fiber(a, Functional::Re);
    } else {
        out.k = std::max(max_fiber(a, Functional::DeltaPlus), max_fiber(a, Functional::DeltaMinus));
    }
    if (a.size() > 1) {
        out.alpha = log_ratio(out.k, a.size());
        out.alpha_decimal50 = log_ratio_decimal50(out.k, a.size());
    }
    return out;
}

NumberSet prune_noninvertible(const NumberSet& a) {
    std::vector<PlanarNumber> kept;
    kept.reserve(a.size());
    for (const PlanarNumber& x : a.elements())
        if (is_invertible(x)) kept.push_back(x);
    return NumberSet(a.system(), std::move(kept));
}

NumberSet prune_to_multiplicity(const NumberSet& a, std::uint64_t k) {
    if (k < 1) throw UsageError("prune_to_multiplicity requires k >= 1");
    std::unordered_map<Rational, std::uint64_t, RationalHash> plus, minus;
    std::vector<PlanarNumber> kept;
    kept.reserve(a.size());
    const bool is_dual = a.system() == System::Dual;
    for (const PlanarNumber& x : a.elements()) {
        if (is_dual) {
            std::uint64_t& c = plus[x.re];
            if (c < k) {
                ++c;
                kept.push_back(x);
            }
        } else {
            std::uint64_t& cp = plus[functional(x, Functional::DeltaPlus)];
            std::uint64_t& cm = minus[functional(x, Functional::DeltaMinus)];
            if (cp < k && cm < k) {
                ++cp;
                ++cm;
                kept.push_back(x);
            }
        }
    }
    return NumberSet(a.system(), std::move(kept));
}

EnergyReport energy_report(const NumberSet& a, std::size_t quad_cutoff) {
    const auto& e = a.elements();
    for (const PlanarNumber& x : e)
        if (!is_invertible(x))
            throw UsageError("energy_report requires an invertible-pruned set; found " + to_string(x));

    EnergyReport rep;
    const bool is_dual = a.system() == System::Dual;
    const Functional f = is_dual ? Functional::Re : Functional::DeltaPlus;

    std::vector<PlanarNumber> prod(e.size() * e.size(), zero(a.system()));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) {
            PlanarNumber p = mul(e[i], e[j]);
            ++rep.r_times_hist[p];
            prod[i * e.size() + j] = std::move(p);
        }
    for (const auto& [t, c] : rep.r_times_hist) rep.energy += c * c;

    if (e.size() <= quad_cutoff) {
        std::uint64_t quads = 0;
        for (const PlanarNumber& p : prod)
            for (const PlanarNumber& q : prod)
                if (p == q) ++quads;
        rep.energy_quadruple = quads;
    }

    for (const PlanarNumber& x : e) {
        for (const PlanarNumber& y : e) ++rep.r_div_hist[functional(div(x, y), f)];
    }

    // Dyadic classes on r_div counts: class m holds 2^m <= r < 2^(m+1).
    std::map<unsigned, std::uint64_t> class_score;
    for (const auto& [lam, r] : rep.r_div_hist) {
        unsigned m = 0;
        while ((r >> (m + 1)) != 0) ++m;
        class_score[m] += r * r;
    }
    unsigned best_m = 0;
    std::uint64_t best = 0;
    for (const auto& [m, score] : class_score) {
        if (score > best) { // strict: ties resolve to the smallest m
            best = score;
            best_m = m;
        }
    }
    rep.dyadic_class_m = best_m;
    for (const auto& [lam, r] : rep.r_div_hist) {
        unsigned m = 0;
        while ((r >> (m + 1)) != 0) ++m;
        if (m == best_m) rep.lambda.push_back(lam); // std::map iterates ascending
    }
    return rep;
}

std::string construction_name(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::UnitRealDual: return "unit-real-dual";
    case ConstructionKind::DualGrid: return "dual-grid";
    case ConstructionKind::DoubleNullPair: return "double-null-pair";
    case ConstructionKind::DoubleDiagonalGrid: return "double-diagonal-grid";
    }
    throw UsageError("unknown construction kind");
}

ConstructionKind parse_construction(std::string_view name) {
    if (name == "unit-real-dual") return ConstructionKind::UnitRealDual;
    if (name == "dual-grid") return ConstructionKind::DualGrid;
    if (name == "double-null-pair") return ConstructionKind::DoubleNullPair;
    if (name == "double-diagonal-grid") return ConstructionKind::DoubleDiagonalGrid;
    throw UsageError("unknown construction: '" + std::string(name) + "'");
}

bool construction_wants_alpha(ConstructionKind k) {
    return k == ConstructionKind::DualGrid || k == ConstructionKind::DoubleDiagonalGrid;
}

Generated generate(ConstructionKind kind, std::uint64_t n, std::optional<Rational> alpha) {
    if (n < 1) throw UsageError("construction size must be >= 1");
    if (construction_wants_alpha(kind)) {
        if (!alpha) throw UsageError(construction_name(kind) + " requires --alpha");
        if (alpha->sign() < 0 || *alpha > Rational(1))
            throw UsageError("alpha must lie in [0, 1]");
    } else if (alpha) {
        throw UsageError(construction_name(kind) + " does not take alpha");
    }

    switch (kind) {
    case ConstructionKind::UnitRealDual: {
        std::vector<PlanarNumber> v;
        v.reserve(n);
        for (std::uint64_t m = 1; m <= n; ++m) v.push_back(dual(1, static_cast<long>(m)));
        return {NumberSet(System::Dual, std::move(v)), std::nullopt};
    }
    case ConstructionKind::DualGrid: {
        std::uint64_t p = rounded_power(n, Rational(1) - *alpha);
        std::uint64_t q = rounded_power(n, *alpha);
        std::vector<PlanarNumber> v;
        v.reserve(p * q);
        for (std::uint64_t a1 = 1; a1 <= p; ++a1)
            for (std::uint64_t a2 = 1; a2 <= q; ++a2)
                v.push_back(dual(static_cast<long>(a1), static_cast<long>(a2)));
        return {NumberSet(System::Dual, std::move(v)), std::nullopt};
    }
    case ConstructionKind::DoubleNullPair: {
        std::vector<PlanarNumber> va, vb;
        va.reserve(n);
        vb.reserve(n);
        for (std::uint64_t m = 1; m <= n; ++m) {
            va.push_back(dbl(static_cast<long>(m), static_cast<long>(m)));
            vb.push_back(dbl(static_cast<long>(m), -static_cast<long>(m)));
        }
        return {NumberSet(System::Double, std::move(va)), NumberSet(System::Double, std::move(vb))};
    }
    case ConstructionKind::DoubleDiagonalGrid: {
        std::uint64_t p = rounded_power(n, Rational(1) - *alpha);
        std::uint64_t q = rounded_power(n, *alpha);
        std::vector<PlanarNumber> v;
        v.reserve(p * q);
        for (std::uint64_t i = 1; i <= p; ++i)
            for (std::uint64_t j = 1; j <= q; ++j) {
                Rational u = Rational(static_cast<long>(i + j), 2);
                Rational w = (Rational(static_cast<long>(i)) - Rational(static_cast<long>(j))) / 2;
                v.push_back(dbl(std::move(u), std::move(w)));
            }
        return {NumberSet(System::Double, std::move(v)), std::nullopt};
    }
    }
    throw UsageError("unknown construction kind");
}

} // namespace planar
