#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "planar/elekes.hpp"
#include "planar/errors.hpp"
#include "planar/exponents.hpp"
#include "planar/intersect.hpp"
#include "planar/sampling.hpp"
#include "planar/solymosi.hpp"

using namespace planar;

namespace {

std::vector<std::uint64_t> fiber_sizes(const WedgeReport& w) {
    std::vector<std::uint64_t> out;
    for (const auto& f : w.fiber_point_ids) out.push_back(f.size());
    return out;
}

std::vector<std::uint64_t> rep_sizes(const WedgeReport& w) {
    std::vector<std::uint64_t> out;
    for (const auto& s : w.rep_point_ids) out.push_back(s.size());
    return out;
}

void check_chain_flags(const WedgeReport& w) {
    CHECK(w.fibers_in_class);
    CHECK(w.expansion_exact);
    CHECK(w.reps_cover);
    CHECK(w.wedges_disjoint);
    CHECK(w.pigeonhole_ok);
    CHECK(w.energy_lower_ok);
    CHECK(w.chain_sum_ok);
}

// every reported special incidence must be reproducible from its parts
void check_special_records(const SpecialIncidenceStats& st, const ElekesConfig& cfg) {
    const bool is_dual = st.system == System::Dual;
    Functional pf = Functional::Re;
    if (!is_dual)
        pf = *st.sign == FamilySign::Positive ? Functional::DeltaPlus : Functional::DeltaMinus;
    for (const SpecialIncidence& rec : st.specials) {
        const Point2& p = cfg.points[rec.point_id];
        const Line2& l = cfg.lines[rec.line_id];
        CHECK(incident(p, l));
        REQUIRE(rec.family_id < st.families.size());
        const LineFamily& f = st.families[rec.family_id];
        const auto& ids = f.member_line_ids;
        CHECK(std::find(ids.begin(), ids.end(), rec.line_id) != ids.end());
        CHECK(f.intersection.contains(point_coords(p)));

        const auto& key = is_dual ? *f.special_point : *f.point_parameter;
        CHECK(functional(p.x, pf) == key.first);
        CHECK(functional(p.y, pf) == key.second);

        Intersection o = r4_oracle(cfg.lines[ids[0]], cfg.lines[ids[1]]);
        REQUIRE(o.kind == IntersectKind::InfiniteLine);
        CHECK(*o.line == f.intersection);

        CHECK(rec.n_group_lines >= 1);
        CHECK(rec.n_family_lines == ids.size());
        CHECK(rec.n_fiber_points >= 1);
        CHECK(rec.n_same_point_families >= 1);
    }
    std::uint64_t hist_total = 0;
    for (const auto& [q, c] : st.histogram) hist_total += c;
    CHECK(hist_total == st.n_special);
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("elekes config on a two-element real dual set") {
    NumberSet a(System::Dual, {dual(1, 0), dual(2, 0)});
    ElekesConfig cfg = build_elekes(a);

    CHECK(cfg.sums.size() == 3);
    CHECK(cfg.products.size() == 3);
    CHECK(cfg.points.size() == 9);
    CHECK(cfg.lines.size() == 4);
    REQUIRE(cfg.line_incidences.size() == 4);
    for (std::uint64_t c : cfg.line_incidences) CHECK(c == 2);
    CHECK(cfg.total_incidences == 8);
    CHECK(count_incidences(cfg.points, cfg.lines) == 8);

    // line k is y = c(x - d) for the recorded (c, d) index pair
    for (std::size_t k = 0; k < cfg.lines.size(); ++k) {
        const PlanarNumber& c = a.elements()[cfg.line_cd[k].first];
        const PlanarNumber& d = a.elements()[cfg.line_cd[k].second];
        CHECK(cfg.lines[k] == Line2::slope_form(c, neg(mul(c, d))));
    }

    // four distinct real lines, no shared group key, hence no families
    SpecialIncidenceStats st = classify_incidences(cfg);
    CHECK(st.families.empty());
    CHECK(st.n_special == 0);
    CHECK(st.n_standard == 8);
    CHECK(st.bound_violations.empty());
}

TEST_CASE("elekes config on the unit real dual set") {
    Generated gen = generate(ConstructionKind::UnitRealDual, 6, std::nullopt);
    ElekesConfig cfg = build_elekes(gen.a);

    CHECK(cfg.lines.size() == 36);
    CHECK(cfg.points.size() == 121);
    // per (c, d) the admissible sum parameters drop by |Re-gap|:
    // sum over the 6x6 grid is 36*11 - 70
    CHECK(cfg.total_incidences == 326);
    CHECK(count_incidences(cfg.points, cfg.lines) == 326);
    CHECK(cfg.total_incidences >= 6ull * 6 * 6);

    SpecialIncidenceStats st = classify_incidences(cfg);
    CHECK(st.system == System::Dual);
    CHECK(!st.sign.has_value());
    CHECK(st.n == 6);
    CHECK(st.n_special + st.n_standard == 326);
    CHECK(st.n_special > 0);
    CHECK(st.bound_violations.empty());
    CHECK(!st.families.empty());
    check_special_records(st, cfg);

    // all 36 lines share the single real line (1, -1)
    REQUIRE(st.t_lines.size() == 1);
    CHECK(st.t_lines[0].first == Rational(1));
    CHECK(st.t_lines[0].second == Rational(-1));
    CHECK(!st.s_points.empty());
    CHECK(!st.f_family_ids.empty());
    CHECK(st.f_family_ids.size() <= st.families.size());

    REQUIRE(!st.specials.empty());
    const SpecialIncidence& rec = st.specials.front();
    CHECK(rec.n_group_lines == 36);    // one group, saturating the k^2 cap
    CHECK(rec.n_fiber_points == 121);  // one real point fiber
    std::array<double, 4> ex = incidence_exponents(st, rec);
    CHECK(ex[0] == doctest::Approx(1.0));
    CHECK(ex[1] >= 0.0);
    CHECK(ex[2] == doctest::Approx(std::log(121.0) / std::log(6.0)));
    CHECK(ex[3] >= 0.0);
}

TEST_CASE("elekes input validation") {
    CHECK_THROWS_AS(build_elekes(NumberSet(System::Dual, {dual(3, 1)})), UsageError);
    CHECK_THROWS_AS(build_elekes(NumberSet(System::Dual, {dual(0, 3), dual(1, 0)})), UsageError);
    CHECK_THROWS_AS(build_elekes(NumberSet(System::Double, {dbl(2, 2), dbl(1, 0)})), UsageError);

    Generated gen = generate(ConstructionKind::UnitRealDual, 6, std::nullopt);
    ElekesConfig cfg = build_elekes(gen.a);
    CHECK_THROWS_AS(classify_incidences(cfg, FamilySign::Positive, 5), UsageError);
}

TEST_CASE("random configs meet the line and incidence counts") {
    for (System sys : {System::Dual, System::Double}) {
        std::mt19937_64 g(sys == System::Dual ? 7101 : 7102);
        for (int trial = 0; trial < 5; ++trial) {
            NumberSet a(sys, random_invertible_elements(g, sys, 5, 40));
            REQUIRE(a.size() == 5);
            ElekesConfig cfg = build_elekes(a);

            CHECK(cfg.lines.size() == 25);
            std::unordered_set<Line2, Line2Hash> distinct(cfg.lines.begin(), cfg.lines.end());
            CHECK(distinct.size() == 25);
            for (std::uint64_t c : cfg.line_incidences) CHECK(c >= 5);
            CHECK(cfg.total_incidences >= 125);
            CHECK(count_incidences(cfg.points, cfg.lines) == cfg.total_incidences);

            SpecialIncidenceStats st = classify_incidences(cfg);
            CHECK(st.n_special + st.n_standard == cfg.total_incidences);
            CHECK(st.bound_violations.empty());
            check_special_records(st, cfg);
        }
    }
}

TEST_CASE("generic dual config has no special incidences") {
    // distinct real parts keep every group at a single slope
    std::mt19937_64 g(8181);
    std::vector<PlanarNumber> elems;
    for (int i = 1; i <= 6; ++i) elems.push_back(dual(i, rand_int(g, -20, 20)));
    ElekesConfig cfg = build_elekes(NumberSet(System::Dual, std::move(elems)));

    SpecialIncidenceStats st = classify_incidences(cfg);
    CHECK(st.families.empty());
    CHECK(st.n_special == 0);
    CHECK(st.n_standard == cfg.total_incidences);

    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.lines.size(); ++j)
            CHECK(r4_oracle(cfg.lines[i], cfg.lines[j]).kind != IntersectKind::InfiniteLine);
}

TEST_CASE("double specials with matched minus parts") {
    // two elements share DeltaMinus = 1, so the lines y = c(x-c) and
    // y = c'(x-c') are co-family and meet P at (c+c', cc')
    NumberSet a(System::Double, {dbl(2, 1), dbl(3, 2), dbl(5, 1), dbl(7, 4)});
    ElekesConfig cfg = build_elekes(a);

    SpecialIncidenceStats st = classify_incidences(cfg);
    REQUIRE(st.sign.has_value());
    CHECK(*st.sign == FamilySign::Positive);
    CHECK(st.families.size() == 6);
    CHECK(st.n_special >= 2);
    CHECK(st.n_special + st.n_standard == cfg.total_incidences);
    CHECK(st.bound_violations.empty());
    check_special_records(st, cfg);

    // point parameter (8, 15) of the pair c = 2+j, c' = 3+2j shows up in S
    bool found = false;
    for (const auto& s : st.s_points)
        found = found || (s.first == Rational(8) && s.second == Rational(15));
    CHECK(found);

    // all DeltaPlus values are distinct, so no negative families exist
    SpecialIncidenceStats neg = classify_incidences(cfg, FamilySign::Negative);
    CHECK(neg.families.empty());
    CHECK(neg.n_special == 0);
}

TEST_CASE("negative-sign double specials") {
    // repeated DeltaPlus = 1 gives negative families only
    NumberSet a(System::Double, {dbl(2, -1), dbl(3, -2), dbl(5, -1)});
    ElekesConfig cfg = build_elekes(a);

    SpecialIncidenceStats neg = classify_incidences(cfg, FamilySign::Negative);
    REQUIRE(neg.sign.has_value());
    CHECK(*neg.sign == FamilySign::Negative);
    CHECK(!neg.families.empty());
    CHECK(neg.n_special >= 2);
    CHECK(neg.n_special + neg.n_standard == cfg.total_incidences);
    CHECK(neg.bound_violations.empty());
    check_special_records(neg, cfg);

    SpecialIncidenceStats pos = classify_incidences(cfg);
    CHECK(pos.families.empty());
    CHECK(pos.n_special == 0);
}

TEST_CASE("positivity normalization") {
    NumberSet a(System::Dual, {dual(-1, 1), dual(-2, 3), dual(-3, 1), dual(4, 2)});
    NumberSet na = normalize_positive(a);
    std::vector<PlanarNumber> expect = {dual(1, -1), dual(2, -3), dual(3, -1)};
    CHECK(na.elements() == expect);

    NumberSet b(System::Double, {dbl(0, 2), dbl(-3, 1), dbl(-4, 1)});
    NumberSet nb = normalize_positive(b);
    std::vector<PlanarNumber> expect_b = {dbl(3, -1), dbl(4, -1)};
    CHECK(nb.elements() == expect_b);

    // ties keep the positive half; a one-element survivor cannot start a chain
    NumberSet tie(System::Dual, {dual(2, 1), dual(-3, 1)});
    NumberSet nt = normalize_positive(tie);
    std::vector<PlanarNumber> expect_t = {dual(2, 1)};
    CHECK(nt.elements() == expect_t);
    CHECK_THROWS_AS(solymosi_pipeline(tie), UsageError);

    CHECK_THROWS_AS(normalize_positive(NumberSet(System::Dual, {dual(0, 1), dual(1, 1)})),
                    UsageError);

    Generated gen = generate(ConstructionKind::UnitRealDual, 4, std::nullopt);
    CHECK(normalize_positive(gen.a).elements() == gen.a.elements());
}

TEST_CASE("solymosi chain on a geometric dual set") {
    std::vector<PlanarNumber> elems;
    for (int i = 0; i < 8; ++i) elems.push_back(dual(1 << i, 1));
    SolymosiResult res = solymosi_pipeline(NumberSet(System::Dual, std::move(elems)));

    CHECK(res.normalized.size() == 8);
    CHECK(res.energy.energy == 120);
    REQUIRE(res.energy.energy_quadruple.has_value());
    CHECK(*res.energy.energy_quadruple == 120);

    const WedgeReport& w = res.wedge;
    CHECK(w.system == System::Dual);
    CHECK(w.n == 8);
    CHECK(w.dyadic_class_m == 2);

    std::vector<Rational> lam = {Rational(1, 16), Rational(1, 8), Rational(1, 4),
                                 Rational(1, 2),  Rational(2),    Rational(4),
                                 Rational(8),     Rational(16)};
    CHECK(w.lambda == lam);
    CHECK(fiber_sizes(w) == std::vector<std::uint64_t>{4, 5, 6, 7, 7, 6, 5, 4});
    CHECK(rep_sizes(w) == std::vector<std::uint64_t>{5, 6, 7, 7, 6, 5, 4});
    CHECK(w.expansion_sizes == std::vector<std::uint64_t>{20, 30, 42, 49, 42, 30, 20});
    check_chain_flags(w);

    CHECK(w.sumset_size == 36);
    CHECK(w.productset_size == 36);
    CHECK(w.multiplicity_k == 1);
    CHECK(w.chain_ratio == Rational(729, 64));
    CHECK(w.chain_ratio_approx == doctest::Approx(729.0 / 64.0));
}

TEST_CASE("solymosi chain on the dual grid") {
    Generated gen = generate(ConstructionKind::DualGrid, 16, Rational(1, 2));
    SolymosiResult res = solymosi_pipeline(gen.a);

    const WedgeReport& w = res.wedge;
    CHECK(w.n == 16);
    CHECK(w.dyadic_class_m == 6);
    CHECK(w.lambda == std::vector<Rational>{Rational(1)});
    CHECK(fiber_sizes(w) == std::vector<std::uint64_t>{64});
    CHECK(w.rep_point_ids.empty());
    CHECK(w.expansion_sizes.empty());
    check_chain_flags(w);
    CHECK(w.sumset_size == 49);
    CHECK(w.multiplicity_k == 4);
}

TEST_CASE("solymosi chain on a double geometric set") {
    // functional coordinates (2^i, 1): the DeltaMinus fiber is the whole set
    std::vector<PlanarNumber> elems;
    for (int i = 0; i < 6; ++i)
        elems.push_back(dbl(Rational((1 << i) + 1, 2), Rational((1 << i) - 1, 2)));
    SolymosiResult res = solymosi_pipeline(NumberSet(System::Double, std::move(elems)));

    CHECK(res.normalized.size() == 6);
    CHECK(res.energy.energy == 146);

    const WedgeReport& w = res.wedge;
    CHECK(w.system == System::Double);
    CHECK(w.dyadic_class_m == 2);
    std::vector<Rational> lam = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2),
                                 Rational(4)};
    CHECK(w.lambda == lam);
    CHECK(fiber_sizes(w) == std::vector<std::uint64_t>{4, 5, 6, 5, 4});
    CHECK(w.expansion_sizes == std::vector<std::uint64_t>{20, 30, 30, 20});
    check_chain_flags(w);

    CHECK(w.sumset_size == 21);
    CHECK(w.productset_size == 11);
    CHECK(w.multiplicity_k == 6);
    CHECK(w.chain_ratio == Rational(539, 4));
}

TEST_CASE("random sets satisfy the chain invariants") {
    for (System sys : {System::Dual, System::Double}) {
        std::mt19937_64 g(sys == System::Dual ? 9901 : 9902);
        for (int trial = 0; trial < 8; ++trial) {
            NumberSet a(sys, random_invertible_elements(g, sys, 4 + trial, 25));
            REQUIRE(normalize_positive(a).size() >= 2);
            SolymosiResult res = solymosi_pipeline(a);

            const WedgeReport& w = res.wedge;
            CHECK(w.lambda.size() == w.fiber_point_ids.size());
            CHECK(w.rep_point_ids.size() + 1 == w.lambda.size());
            CHECK(w.expansion_sizes.size() == w.rep_point_ids.size());
            check_chain_flags(w);

            // the run is a pure function of the input set
            SolymosiResult again = solymosi_pipeline(a);
            CHECK(again.wedge.lambda == w.lambda);
            CHECK(again.wedge.expansion_sizes == w.expansion_sizes);
            CHECK(again.wedge.chain_ratio == w.chain_ratio);
        }
    }
}

TEST_CASE("theorem exponent table") {
    TheoremExponent t0 = theorem_exponent(System::Dual, Rational(0));
    CHECK(t0.exponent == Rational(4, 3));
    CHECK(t0.case_label == "alpha<1/8");
    CHECK(t0.system == System::Dual);

    CHECK(theorem_exponent(System::Dual, Rational(1, 10)).exponent == Rational(19, 15));
    CHECK(theorem_exponent(System::Double, Rational(1, 8)).exponent == Rational(5, 4));
    CHECK(theorem_exponent(System::Dual, Rational(1, 4)).exponent == Rational(5, 4));
    CHECK(theorem_exponent(System::Double, Rational(1, 8)).case_label == "1/8<=alpha<1/3");

    TheoremExponent t3 = theorem_exponent(System::Dual, Rational(1, 3));
    CHECK(t3.exponent == Rational(31, 24));
    CHECK(t3.case_label == "1/3<=alpha<1/2");
    CHECK(theorem_exponent(System::Double, Rational(2, 5)).exponent == Rational(5, 4));

    TheoremExponent t4 = theorem_exponent(System::Dual, Rational(1, 2));
    CHECK(t4.exponent == Rational(19, 16));
    CHECK(t4.case_label == "1/2<=alpha<kappa");

    TheoremExponent t5 = theorem_exponent(System::Double, Rational(11, 20));
    CHECK(t5.exponent == Rational(3515, 3200));
    CHECK(t5.exponent == Rational(703, 640));

    CHECK(theorem_exponent(System::Dual, Rational(3, 5)).exponent == Rational(81, 80));

    CHECK(below_kappa(Rational(0)));
    CHECK(below_kappa(Rational(3, 5)));
    CHECK(!below_kappa(Rational(61, 100)));
    CHECK(!below_kappa(Rational(-1)));
    CHECK(!below_kappa(Rational(39, 20)));
    CHECK(!below_kappa(Rational(2)));

    CHECK_THROWS_AS(theorem_exponent(System::Dual, Rational(-1, 10)), UsageError);
    CHECK_THROWS_AS(theorem_exponent(System::Dual, Rational(61, 100)), UsageError);
    CHECK_THROWS_AS(theorem_exponent(System::Double, Rational(39, 20)), UsageError);
    CHECK_THROWS_AS(theorem_exponent(System::Double, Rational(2)), UsageError);
}

TEST_CASE("exponent sweeps") {
    ExponentEstimate unit = exponent_sweep(ConstructionKind::UnitRealDual, std::nullopt,
                                           {8, 16, 32});
    using Meas = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    CHECK(unit.measurements == Meas{{8, 15}, {16, 31}, {32, 63}});
    CHECK(unit.sumset_sizes == std::vector<std::uint64_t>{15, 31, 63});
    CHECK(unit.productset_sizes == std::vector<std::uint64_t>{15, 31, 63});
    CHECK(unit.seconds.size() == 3);
    CHECK(unit.slope > 0.9);
    CHECK(unit.slope < 1.1);
    CHECK(unit.envelope == doctest::Approx(1.0));
    CHECK(!unit.theorem_reference.has_value());

    ExponentEstimate grid = exponent_sweep(ConstructionKind::DualGrid, Rational(1, 2),
                                           {16, 64, 256});
    REQUIRE(grid.measurements.size() == 3);
    CHECK(grid.measurements[0].first == 16);
    CHECK(grid.measurements[2].first == 256);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(grid.measurements[i].second ==
              std::max(grid.sumset_sizes[i], grid.productset_sizes[i]));
    CHECK(grid.slope > 1.0);
    CHECK(grid.slope < 2.05);
    CHECK(grid.envelope == doctest::Approx(2.0));
    REQUIRE(grid.theorem_reference.has_value());
    CHECK(*grid.theorem_reference == Rational(19, 16));

    ExponentEstimate diag = exponent_sweep(ConstructionKind::DoubleDiagonalGrid, Rational(1, 2),
                                           {9, 25, 49});
    REQUIRE(diag.measurements.size() == 3);
    CHECK(diag.measurements[0].first == 9);
    CHECK(diag.envelope == doctest::Approx(2.0));
    REQUIRE(diag.theorem_reference.has_value());
    CHECK(*diag.theorem_reference == Rational(19, 16));

    CHECK_THROWS_AS(exponent_sweep(ConstructionKind::DoubleNullPair, std::nullopt, {8, 16, 32}),
                    UsageError);
    CHECK_THROWS_AS(exponent_sweep(ConstructionKind::UnitRealDual, std::nullopt, {8, 16}),
                    UsageError);
    CHECK_THROWS_AS(exponent_sweep(ConstructionKind::UnitRealDual, std::nullopt, {16, 8, 32}),
                    UsageError);
    CHECK_THROWS_AS(exponent_sweep(ConstructionKind::UnitRealDual, std::nullopt, {8, 8, 16}),
                    UsageError);
    CHECK_THROWS_AS(exponent_sweep(ConstructionKind::DualGrid, std::nullopt, {16, 64, 256}),
                    UsageError);
}

} // TEST_SUITE
