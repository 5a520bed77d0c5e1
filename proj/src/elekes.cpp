#include "planar/elekes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "planar/errors.hpp"

namespace planar {

namespace {

unsigned floor_log2(std::uint64_t c) {
    return static_cast<unsigned>(std::bit_width(c) - 1); // c >= 1 always here
}

} // namespace

ElekesConfig build_elekes(const NumberSet& a) {
    if (a.size() < 2) throw UsageError("config needs at least 2 elements");
    for (const PlanarNumber& x : a.elements())
        if (!is_invertible(x))
            throw UsageError("config needs invertible elements only; prune first");

    ElekesConfig cfg{a, sumset(a), productset(a), {}, {}, {}, {}, 0};

    cfg.points.reserve(cfg.sums.size() * cfg.products.size());
    for (const PlanarNumber& x : cfg.sums.elements())
        for (const PlanarNumber& y : cfg.products.elements()) cfg.points.push_back({x, y});

    const auto& elems = a.elements();
    for (std::size_t ci = 0; ci < elems.size(); ++ci)
        for (std::size_t di = 0; di < elems.size(); ++di) {
            cfg.lines.push_back(Line2::slope_form(elems[ci], neg(mul(elems[ci], elems[di]))));
            cfg.line_cd.emplace_back(ci, di);
        }

    // witness check: (d+b, cb) sits on y = c(x-d) for every b
    for (std::size_t li = 0; li < cfg.lines.size(); ++li) {
        const PlanarNumber& c = elems[cfg.line_cd[li].first];
        const PlanarNumber& d = elems[cfg.line_cd[li].second];
        for (const PlanarNumber& b : elems)
            if (!incident(make_point(add(d, b), mul(c, b)), cfg.lines[li]))
                throw std::logic_error("witness incidence failed");
    }

    // exact incidence count: y = ax + b lands in AA or misses
    std::unordered_map<PlanarNumber, std::size_t, PlanarNumberHash> product_ids;
    for (std::size_t i = 0; i < cfg.products.size(); ++i)
        product_ids.emplace(cfg.products.elements()[i], i);
    for (const Line2& l : cfg.lines) {
        std::uint64_t count = 0;
        for (const PlanarNumber& x : cfg.sums.elements())
            if (product_ids.count(add(mul(l.a(), x), l.b()))) ++count;
        cfg.line_incidences.push_back(count);
        cfg.total_incidences += count;
    }
    return cfg;
}

SpecialIncidenceStats classify_incidences(const ElekesConfig& cfg, FamilySign double_sign,
                                          std::size_t cap) {
    const std::size_t n = cfg.a.size();
    if (n > cap)
        throw UsageError("set size " + std::to_string(n) + " exceeds the classification cap " +
                         std::to_string(cap));

    SpecialIncidenceStats st;
    st.system = cfg.a.system();
    st.n = n;
    const bool dbl = st.system == System::Double;
    if (dbl) st.sign = double_sign;

    // functionals: group key matches family detection, point key its opposite
    Functional gf = Functional::Re, pf = Functional::Re;
    if (dbl) {
        gf = double_sign == FamilySign::Positive ? Functional::DeltaMinus : Functional::DeltaPlus;
        pf = double_sign == FamilySign::Positive ? Functional::DeltaPlus : Functional::DeltaMinus;
    }

    for (LineFamily& f : detect_families(cfg.lines, 2))
        if (!dbl || *f.sign == double_sign) st.families.push_back(std::move(f));

    std::vector<std::vector<std::size_t>> fams_of_line(cfg.lines.size());
    for (std::size_t fi = 0; fi < st.families.size(); ++fi)
        for (std::size_t li : st.families[fi].member_line_ids) fams_of_line[li].push_back(fi);

    using Key = std::pair<Rational, Rational>;
    auto line_key = [&](const Line2& l) -> Key {
        return {functional(l.a(), gf), functional(l.b(), gf)};
    };
    auto point_key = [&](const Point2& p) -> Key {
        return {functional(p.x, pf), functional(p.y, pf)};
    };
    auto family_key = [&](const LineFamily& f) -> Key {
        return dbl ? *f.point_parameter : *f.special_point;
    };

    std::map<Key, std::uint64_t> group_lines, fiber_points;
    for (const Line2& l : cfg.lines) ++group_lines[line_key(l)];
    for (const Point2& p : cfg.points) ++fiber_points[point_key(p)];

    // families in the same size class sharing a special point / point
    // parameter, and the lines whose group relation passes through it
    std::map<std::pair<Key, unsigned>, std::uint64_t> same_point_families;
    std::map<Key, std::uint64_t> lines_through;
    for (const LineFamily& f : st.families)
        ++same_point_families[{family_key(f), floor_log2(f.member_line_ids.size())}];
    for (const auto& [fam_and_class, count] : same_point_families) {
        const Key& s = fam_and_class.first;
        auto [it, fresh] = lines_through.emplace(s, 0);
        if (!fresh) continue;
        for (const Line2& l : cfg.lines)
            if (functional(l.b(), pf) == s.second - s.first * functional(l.a(), pf))
                ++it->second;
    }

    const std::uint64_t k = multiplicity(cfg.a).k;
    const std::uint64_t k_sum = max_fiber(cfg.sums, pf);
    const std::uint64_t k_prod = max_fiber(cfg.products, pf);
    auto violate = [&](const std::string& msg) { st.bound_violations.push_back(msg); };
    if (k_sum > n * k) violate("sumset fiber exceeds n*k");
    if (k_prod > n * k) violate("productset fiber exceeds n*k");

    std::unordered_map<PlanarNumber, std::size_t, PlanarNumberHash> product_ids;
    for (std::size_t i = 0; i < cfg.products.size(); ++i)
        product_ids.emplace(cfg.products.elements()[i], i);

    std::set<Key> s_set, t_set;
    std::set<std::size_t> f_set;

    for (std::size_t li = 0; li < cfg.lines.size(); ++li) {
        const Line2& l = cfg.lines[li];
        for (std::size_t xi = 0; xi < cfg.sums.size(); ++xi) {
            const PlanarNumber& x = cfg.sums.elements()[xi];
            auto yit = product_ids.find(add(mul(l.a(), x), l.b()));
            if (yit == product_ids.end()) continue;
            std::size_t point_id = xi * cfg.products.size() + yit->second;
            const Point2& p = cfg.points[point_id];

            std::size_t fam = st.families.size();
            for (std::size_t fi : fams_of_line[li]) {
                const LineFamily& f = st.families[fi];
                if (dbl) {
                    if (f.intersection.contains(point_coords(p))) fam = fi;
                } else {
                    for (std::size_t other : f.member_line_ids)
                        if (other != li && incident(p, cfg.lines[other])) {
                            fam = fi;
                            break;
                        }
                }
                if (fam != st.families.size()) break;
            }
            if (fam == st.families.size()) {
                ++st.n_standard;
                continue;
            }

            const LineFamily& f = st.families[fam];
            SpecialIncidence rec;
            rec.point_id = point_id;
            rec.line_id = li;
            rec.family_id = fam;
            rec.n_group_lines = group_lines.at(line_key(l));
            rec.n_family_lines = f.member_line_ids.size();
            rec.n_fiber_points = fiber_points.at(point_key(p));
            unsigned fam_class = floor_log2(rec.n_family_lines);
            rec.n_same_point_families = same_point_families.at({family_key(f), fam_class});

            if (family_key(f) != point_key(p))
                violate("family special point differs from the incidence point projection");
            if (rec.n_group_lines > k * k) violate("group fiber exceeds k^2");
            if (rec.n_family_lines > k || rec.n_family_lines > rec.n_group_lines)
                violate("family size exceeds k or its group fiber");
            if (rec.n_fiber_points > k_sum * k_prod) violate("point fiber exceeds k_sum*k_prod");
            std::uint64_t through = lines_through.at(family_key(f));
            if (rec.n_same_point_families << fam_class > through || through > n * k)
                violate("same-point family count exceeds the line budget");

            ++st.n_special;
            ++st.histogram[{floor_log2(rec.n_group_lines), fam_class,
                            floor_log2(rec.n_fiber_points),
                            floor_log2(rec.n_same_point_families)}];
            s_set.insert(family_key(f));
            t_set.insert(dbl ? *f.line_parameter : line_key(l));
            f_set.insert(fam);
            st.specials.push_back(rec);
        }
    }

    if (st.n_special + st.n_standard != cfg.total_incidences)
        throw std::logic_error("incidence partition mismatch");

    st.s_points.assign(s_set.begin(), s_set.end());
    st.t_lines.assign(t_set.begin(), t_set.end());
    st.f_family_ids.assign(f_set.begin(), f_set.end());
    return st;
}

std::array<double, 4> incidence_exponents(const SpecialIncidenceStats& stats,
                                          const SpecialIncidence& rec) {
    std::uint64_t n = stats.n;
    return {log_ratio(rec.n_group_lines, n * n), log_ratio(rec.n_family_lines, n),
            log_ratio(rec.n_fiber_points, n), log_ratio(rec.n_same_point_families, n)};
}

} // namespace planar
