#include "planar/verify.hpp"

#include <limits>
#include <random>
#include <unordered_set>

#include "planar/elekes.hpp"
#include "planar/errors.hpp"
#include "planar/intersect.hpp"
#include "planar/sampling.hpp"
#include "planar/solymosi.hpp"

namespace planar {

namespace {

std::string sys_name(System s) { return s == System::Dual ? "dual" : "double"; }

std::uint64_t seed_for(std::uint64_t seed, System sys) {
    return sys == System::Dual ? seed : seed ^ 0x9e3779b97f4a7c15ull;
}

} // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<Line2> pinned_grid_lines(System sys) {
    std::vector<Rational> slopes;
    for (int num = -4; num <= 4; ++num) slopes.emplace_back(num, 2);
    const std::vector<Rational> intercepts = {Rational(-1, 2), Rational(0), Rational(1)};

    std::vector<Line2> out;
    out.reserve(slopes.size() * slopes.size() * intercepts.size() * intercepts.size());
    for (const Rational& are : slopes)
        for (const Rational& aim : slopes)
            for (const Rational& bre : intercepts)
                for (const Rational& bim : intercepts)
                    out.push_back(Line2::slope_form({sys, are, aim}, {sys, bre, bim}));
    return out;
}

std::vector<CheckResult> verify_lemmas(std::uint64_t seed, std::uint64_t trials) {
    std::vector<CheckResult> out;
    for (System sys : {System::Dual, System::Double}) {
        std::mt19937_64 g(seed_for(seed, sys));
        std::uint64_t agree = 0;
        std::string bad;
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto [l1, l2] = random_slope_pair(g, sys);
            if (classify_intersection(l1, l2) == r4_oracle(l1, l2)) {
                ++agree;
            } else if (bad.empty()) {
                bad = "; first mismatch: " + l1.str() + " vs " + l2.str();
            }
        }
        out.push_back({sys_name(sys) + " random-pair agreement", agree == trials,
                       std::to_string(agree) + "/" + std::to_string(trials) + " pairs" + bad});
    }
    for (System sys : {System::Dual, System::Double}) {
        const std::vector<Line2> grid = pinned_grid_lines(sys);
        std::uint64_t agree = 0, total = 0;
        std::string bad;
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = i; j < grid.size(); ++j) {
                ++total;
                if (classify_intersection(grid[i], grid[j]) == r4_oracle(grid[i], grid[j])) {
                    ++agree;
                } else if (bad.empty()) {
                    bad = "; first mismatch: " + grid[i].str() + " vs " + grid[j].str();
                }
            }
        out.push_back({sys_name(sys) + " grid agreement", agree == total,
                       std::to_string(agree) + "/" + std::to_string(total) + " pairs" + bad});
    }
    return out;
}

std::vector<CheckResult> verify_elekes(std::uint64_t seed, std::size_t n, std::size_t sets) {
    std::vector<CheckResult> out;
    for (System sys : {System::Dual, System::Double}) {
        std::mt19937_64 g(seed_for(seed, sys));
        bool lines_ok = true, lower_ok = true, partition_ok = true, bounds_ok = true;
        std::uint64_t min_total = std::numeric_limits<std::uint64_t>::max();
        std::string bad;
        for (std::size_t s = 0; s < sets; ++s) {
            NumberSet a(sys, random_invertible_elements(g, sys, n, 50));
            ElekesConfig cfg = build_elekes(a); // witness incidences checked inside
            std::unordered_set<Line2, Line2Hash> distinct(cfg.lines.begin(), cfg.lines.end());
            if (cfg.lines.size() != n * n || distinct.size() != n * n) lines_ok = false;
            min_total = std::min(min_total, cfg.total_incidences);
            if (cfg.total_incidences < static_cast<std::uint64_t>(n) * n * n) lower_ok = false;
            SpecialIncidenceStats st = classify_incidences(cfg);
            if (st.n_special + st.n_standard != cfg.total_incidences) partition_ok = false;
            if (!st.bound_violations.empty()) {
                bounds_ok = false;
                if (bad.empty()) bad = "; first: " + st.bound_violations.front();
            }
        }
        const std::string tag = sys_name(sys) + " ";
        const std::string runs = std::to_string(sets) + " sets, ";
        out.push_back({tag + "line count", lines_ok,
                       runs + std::to_string(n * n) + " distinct lines each"});
        out.push_back({tag + "incidence lower bound", lower_ok,
                       runs + "min I = " + std::to_string(min_total) +
                           " >= " + std::to_string(n * n * n)});
        out.push_back({tag + "incidence partition", partition_ok,
                       runs + "special + standard = I on each"});
        out.push_back({tag + "dyadic bounds", bounds_ok, runs + "no violations" + bad});
    }
    return out;
}

std::vector<CheckResult> verify_solymosi(ConstructionKind kind, std::uint64_t n,
                                         std::optional<Rational> alpha) {
    Generated gen = generate(kind, n, alpha);
    SolymosiResult res = solymosi_pipeline(gen.a);
    const WedgeReport& w = res.wedge;
    const std::uint64_t nn = static_cast<std::uint64_t>(w.n) * w.n;

    std::uint64_t fiber_total = 0;
    for (const auto& [lam, r] : res.energy.r_div_hist) fiber_total += r;

    std::vector<CheckResult> out;
    out.push_back({"ratio fiber total", fiber_total == nn,
                   std::to_string(fiber_total) + " = " + std::to_string(w.n) + "^2"});
    out.push_back({"dyadic class membership", w.fibers_in_class,
                   "m = " + std::to_string(w.dyadic_class_m) +
                       ", |Lambda| = " + std::to_string(w.lambda.size())});
    out.push_back({"expansion identity", w.expansion_exact,
                   std::to_string(w.expansion_sizes.size()) + " consecutive pairs exact"});
    out.push_back({"representative cover", w.reps_cover,
                   "k = " + std::to_string(w.multiplicity_k)});
    out.push_back({"wedge disjointness", w.wedges_disjoint, "pairwise disjoint real sumsets"});
    out.push_back({"dyadic pigeonhole", w.pigeonhole_ok,
                   "E = " + std::to_string(res.energy.energy)});
    out.push_back({"energy lower bound", w.energy_lower_ok,
                   "E * |AA| >= n^4 with |AA| = " + std::to_string(w.productset_size)});
    out.push_back({"chain sum", w.chain_sum_ok,
                   "|A+A|^2 covers the chain, ratio = " + w.chain_ratio.str()});
    return out;
}

VerifySuite parse_suite(std::string_view name) {
    if (name == "lemmas") return VerifySuite::Lemmas;
    if (name == "elekes") return VerifySuite::Elekes;
    if (name == "solymosi") return VerifySuite::Solymosi;
    if (name == "all") return VerifySuite::All;
    throw UsageError("unknown verify suite; use lemmas|elekes|solymosi|all");
}

std::string suite_name(VerifySuite s) {
    switch (s) {
        case VerifySuite::Lemmas: return "lemmas";
        case VerifySuite::Elekes: return "elekes";
        case VerifySuite::Solymosi: return "solymosi";
        case VerifySuite::All: return "all";
    }
    return "";
}

} // namespace planar
