#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "planar/errors.hpp"
#include "planar/family.hpp"
#include "planar/fixtures.hpp"
#include "planar/number_set.hpp"
#include "planar/sampling.hpp"

using namespace planar;

namespace {

std::size_t shared_members(const LineFamily& f, const LineFamily& g) {
    std::vector<std::size_t> common;
    std::set_intersection(f.member_line_ids.begin(), f.member_line_ids.end(),
                          g.member_line_ids.begin(), g.member_line_ids.end(),
                          std::back_inserter(common));
    return common.size();
}

// slope multiplicity as the partition must realize it
std::size_t line_multiplicity(const std::vector<Line2>& lines) {
    std::map<Rational, std::size_t> h1, h2;
    std::size_t k = 0;
    for (const Line2& l : lines) {
        if (l.system() == System::Dual) {
            k = std::max(k, ++h1[l.a().re]);
        } else {
            k = std::max(k, ++h1[l.a().re + l.a().im]);
            k = std::max(k, ++h2[l.a().re - l.a().im]);
        }
    }
    return k;
}

} // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("dual fixture detects as one family with pinned parameters") {
    std::vector<Line2> lines = dual_fixture_lines(10);
    std::vector<LineFamily> fams = detect_families(lines, 2);
    REQUIRE(fams.size() == 1);
    const LineFamily& f = fams[0];
    CHECK(f.system == System::Dual);
    CHECK(f.member_line_ids.size() == 10);
    CHECK(*f.real_line == std::pair(Rational(-1), Rational(2)));
    CHECK(*f.special_point == std::pair(Rational(1), Rational(1)));
    CHECK_FALSE(f.constant_offset);
    CHECK(*f.m == Rational());
    CHECK(f.intersection.base == Vec4{Rational(1), Rational(), Rational(1), Rational()});
    CHECK(f.intersection.dir == Vec4{Rational(), Rational(1), Rational(), Rational(-1)});
    // the fixture points all sit on the common intersection
    for (const Point2& p : dual_fixture_points(10)) CHECK(f.intersection.contains(point_coords(p)));
    CHECK_FALSE(f.sign.has_value());
    CHECK_THROWS_AS(family_hyperplane(f), UsageError);
}

TEST_CASE("general-form inputs are skipped with a warning") {
    std::vector<std::string> warn;
    CHECK(detect_families(dual_fixture_lines(6, true), 2, &warn).empty());
    CHECK(warn.size() == 6);
}

TEST_CASE("double fixture detects as one positive family with pinned parameters") {
    std::vector<Line2> lines = double_fixture_lines(10);
    lines.push_back(Line2::slope_form(dbl(0, -1), dbl(15, 9))); // the k=0 member
    std::vector<LineFamily> fams = detect_families(lines, 3);
    REQUIRE(fams.size() == 1);
    const LineFamily& f = fams[0];
    CHECK(f.system == System::Double);
    CHECK(*f.sign == FamilySign::Positive);
    CHECK(f.member_line_ids.size() == 11);
    CHECK(*f.line_parameter == std::pair(Rational(1), Rational(6)));
    CHECK(*f.point_parameter == std::pair(Rational(3), Rational(21)));
    CHECK(*f.m == Rational(5));
    CHECK(*f.m_prime == Rational(2));
    CHECK(f.intersection.base == Vec4{Rational(), Rational(3), Rational(12), Rational(9)});
    CHECK(f.intersection.dir == Vec4{Rational(1), Rational(-1), Rational(1), Rational(-1)});
    for (const Point2& p : double_fixture_points(10))
        CHECK(f.intersection.contains(point_coords(p)));
}

TEST_CASE("constant-offset structures") {
    std::vector<Line2> dual_lines;
    for (long t = 1; t <= 4; ++t)
        dual_lines.push_back(Line2::slope_form(dual(1, t), dual(0, 5)));
    std::vector<LineFamily> df = detect_families(dual_lines, 2);
    REQUIRE(df.size() == 1);
    CHECK(df[0].constant_offset); // all imaginary intercepts equal
    CHECK_FALSE(df[0].m.has_value());
    CHECK(*df[0].special_point == std::pair(Rational(), Rational()));

    std::vector<Line2> dbl_lines;
    for (long m = 1; m <= 3; ++m)
        dbl_lines.push_back(Line2::slope_form(dbl(m, m), dbl(2, 2)));
    std::vector<LineFamily> sf = detect_families(dbl_lines, 2);
    REQUIRE(sf.size() == 1);
    CHECK(*sf[0].sign == FamilySign::Positive);
    CHECK(sf[0].constant_offset);
    CHECK(*sf[0].point_parameter == std::pair(Rational(), Rational(4)));
}

TEST_CASE("generic lines form no family") {
    std::vector<Line2> lines;
    for (long i = 1; i <= 8; ++i)
        lines.push_back(Line2::slope_form(dual(i, i * i), dual(i + 1, 2 * i)));
    CHECK(detect_families(lines, 2).empty());
    // confirmed by the oracle: no pair is an infinite intersection
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            CHECK(r4_oracle(lines[i], lines[j]).kind != IntersectKind::InfiniteLine);
}

TEST_CASE("detected families obey the pairwise lemma bounds") {
    std::mt19937_64 g(424242);
    for (int trial = 0; trial < 100; ++trial) {
        System sys = trial % 2 ? System::Dual : System::Double;
        std::vector<Line2> lines = random_family_rich_lines(g, sys);
        std::vector<LineFamily> fams = detect_families(lines, 2);
        CHECK(!fams.empty()); // the generator always seeds families

        for (const LineFamily& f : fams) {
            REQUIRE(f.member_line_ids.size() >= 2);
            // every member pair realizes the family's infinite intersection
            for (std::size_t i = 0; i < f.member_line_ids.size(); ++i)
                for (std::size_t j = i + 1; j < f.member_line_ids.size(); ++j) {
                    Intersection r =
                        r4_oracle(lines[f.member_line_ids[i]], lines[f.member_line_ids[j]]);
                    REQUIRE(r.kind == IntersectKind::InfiniteLine);
                    CHECK(*r.line == f.intersection);
                }
            // member 2-flats contain the intersection line; non-members fail
            // (duplicate lines are reported under their first occurrence)
            std::set<std::size_t> member_set(f.member_line_ids.begin(), f.member_line_ids.end());
            std::unordered_map<Line2, std::size_t, Line2Hash> rep;
            for (std::size_t id = 0; id < lines.size(); ++id) rep.emplace(lines[id], id);
            for (std::size_t id = 0; id < lines.size(); ++id) {
                if (lines[id].form() != LineForm::Slope) continue;
                bool holds = line_to_flat(lines[id]).contains_line(f.intersection);
                CHECK(holds == (member_set.count(rep.at(lines[id])) > 0));
            }
            // double families live inside their hyperplane
            if (f.system == System::Double) {
                AffineFlat4 h = family_hyperplane(f);
                CHECK(h.dim() == 3);
                for (std::size_t id : f.member_line_ids)
                    CHECK(h.contains_flat(line_to_flat(lines[id])));
            }
        }

        for (std::size_t i = 0; i < fams.size(); ++i)
            for (std::size_t j = i + 1; j < fams.size(); ++j) {
                const LineFamily &f = fams[i], &h = fams[j];
                std::size_t common = shared_members(f, h);
                if (f.system == System::Dual) {
                    if (*f.real_line != *h.real_line) continue;
                    // same real line: disjoint unless the special points differ
                    CHECK(common <= (*f.special_point == *h.special_point ? 0u : 1u));
                } else if (*f.sign == *h.sign) {
                    if (*f.line_parameter != *h.line_parameter)
                        CHECK(common == 0);
                    else if (f.point_parameter->first == h.point_parameter->first)
                        CHECK(common == 0);
                    else
                        CHECK(common <= 1);
                } else {
                    CHECK(common <= 1); // opposite signs share at most one line
                }
            }

        // same-sign same-line-parameter families share one hyperplane
        for (const LineFamily& f : fams)
            for (const LineFamily& h : fams) {
                if (f.system != System::Double || *f.sign != *h.sign) continue;
                bool same_t = *f.line_parameter == *h.line_parameter;
                CHECK((family_hyperplane(f) == family_hyperplane(h)) == same_t);
            }
    }
}

TEST_CASE("detection is deterministic") {
    std::mt19937_64 g1(7), g2(7);
    std::vector<Line2> a = random_family_rich_lines(g1, System::Double);
    std::vector<Line2> b = random_family_rich_lines(g2, System::Double);
    std::vector<LineFamily> fa = detect_families(a, 2), fb = detect_families(b, 2);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
        CHECK(fa[i].member_line_ids == fb[i].member_line_ids);
        CHECK(fa[i].intersection == fb[i].intersection);
    }
}

TEST_CASE("duplicate lines merge into one member") {
    std::vector<Line2> lines = dual_fixture_lines(4);
    lines.push_back(lines[1]);
    std::vector<std::string> warn;
    std::vector<LineFamily> fams = detect_families(lines, 2, &warn);
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].member_line_ids == std::vector<std::size_t>{0, 1, 2, 3});
    REQUIRE(warn.size() == 1);
    CHECK(warn[0].find("duplicates") != std::string::npos);
}

TEST_CASE("partition_multiplicity_one: pinned cases") {
    // multiplicity-1 input comes back as a single unchanged part
    std::vector<Line2> distinct;
    for (long i = 1; i <= 5; ++i) distinct.push_back(Line2::slope_form(dual(i, 1), dual(0, i)));
    auto parts = partition_multiplicity_one(distinct);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == distinct);

    // 3 lines sharing the real slope plus one loner give 3 parts
    std::vector<Line2> mixed;
    for (long k = 0; k < 3; ++k) mixed.push_back(Line2::slope_form(dual(1, k), dual(0, 0)));
    mixed.push_back(Line2::slope_form(dual(2, 0), dual(0, 0)));
    parts = partition_multiplicity_one(mixed);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].size() == 2);
    CHECK(parts[1].size() == 1);
    CHECK(parts[2].size() == 1);

    CHECK(partition_multiplicity_one({}).empty());
    CHECK_THROWS_AS(partition_multiplicity_one({Line2::vertical_form(dual(1, 0))}), UsageError);
}

TEST_CASE("partition_multiplicity_one: grid line set verified by the oracle") {
    NumberSet a = generate(ConstructionKind::DualGrid, 16, Rational(1, 2)).a;
    std::vector<Line2> lines;
    for (const PlanarNumber& c : a.elements())
        for (const PlanarNumber& d : a.elements())
            lines.push_back(Line2::slope_form(c, neg(mul(c, d))));
    auto parts = partition_multiplicity_one(lines);
    CHECK(parts.size() == line_multiplicity(lines));
    std::size_t total = 0;
    for (const auto& part : parts) {
        total += part.size();
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j) {
                IntersectKind k = r4_oracle(part[i], part[j]).kind;
                CHECK(k != IntersectKind::InfiniteLine);
                CHECK(k != IntersectKind::Identical);
            }
    }
    CHECK(total == lines.size());
}

TEST_CASE("partition_multiplicity_one: double fibers stay distinct") {
    std::mt19937_64 g(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Line2> lines;
        std::size_t n = 5 + rng_below(g, 20);
        for (std::size_t i = 0; i < n; ++i)
            lines.push_back(Line2::slope_form(
                PlanarNumber{System::Double, rand_int(g, -2, 2), rand_int(g, -2, 2)},
                rand_planar(g, System::Double, 4, 1)));
        auto parts = partition_multiplicity_one(lines);
        CHECK(parts.size() == line_multiplicity(lines));
        std::size_t total = 0;
        for (const auto& part : parts) {
            total += part.size();
            std::set<Rational> plus, minus;
            for (const Line2& l : part) {
                CHECK(plus.insert(l.a().re + l.a().im).second);
                CHECK(minus.insert(l.a().re - l.a().im).second);
            }
        }
        CHECK(total == lines.size());
    }
}

TEST_CASE("family_hyperplane: pinned equation and containment") {
    std::vector<LineFamily> fams = detect_families(double_fixture_lines(5), 2);
    REQUIRE(fams.size() == 1);
    AffineFlat4 h = family_hyperplane(fams[0]);
    // y1 - y2 = (x1 - x2) + 6
    AffineFlat4 expect = *solve_affine({{Rational(-1), Rational(1), Rational(1), Rational(-1), Rational(6)}});
    CHECK(h == expect);
    for (const Line2& l : double_fixture_lines(5)) CHECK(h.contains_flat(line_to_flat(l)));
    CHECK_FALSE(h.contains_point({Rational(), Rational(), Rational(1), Rational()}));
}

TEST_SUITE_END();
