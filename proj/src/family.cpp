#include "planar/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "planar/errors.hpp"

namespace planar {

std::string family_sign_name(FamilySign s) {
    return s == FamilySign::Positive ? "positive" : "negative";
}

namespace {

using Key = std::pair<Rational, Rational>;

// slope reps: input indices of the first occurrence of each distinct slope line
std::vector<std::size_t> slope_reps(const std::vector<Line2>& lines,
                                    std::vector<std::string>* warnings) {
    std::vector<std::size_t> reps;
    std::unordered_map<Line2, std::size_t, Line2Hash> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].form() != LineForm::Slope) {
            if (warnings)
                warnings->push_back("line " + std::to_string(i) +
                                    " is not in slope form; skipped");
            continue;
        }
        auto [it, fresh] = seen.emplace(lines[i], i);
        if (!fresh) {
            if (warnings)
                warnings->push_back("line " + std::to_string(i) + " duplicates line " +
                                    std::to_string(it->second) + "; merged");
            continue;
        }
        reps.push_back(i);
    }
    return reps;
}

void detect_dual(const std::vector<Line2>& lines, const std::vector<std::size_t>& reps,
                 std::size_t min_size, std::vector<LineFamily>& out) {
    std::map<Key, std::vector<std::size_t>> groups; // by the real line (a1, b1)
    for (std::size_t id : reps)
        groups[{lines[id].a().re, lines[id].b().re}].push_back(id);

    for (const auto& [rl, ids] : groups) {
        if (ids.size() < min_size) continue;
        // members are points (a2, b2); a family is a maximal subset on a
        // common non-vertical line b2 = u - r1 a2, keyed by (r1, u)
        std::map<Key, std::set<std::size_t>> buckets;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const Rational &ai = lines[ids[i]].a().im, &bi = lines[ids[i]].b().im;
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                const Rational &aj = lines[ids[j]].a().im, &bj = lines[ids[j]].b().im;
                if (ai == aj) continue; // parallel in the imaginary direction
                Rational r1 = (bj - bi) / (ai - aj);
                Rational u = bi + r1 * ai;
                auto& members = buckets[{std::move(r1), std::move(u)}];
                members.insert(ids[i]);
                members.insert(ids[j]);
            }
        }
        for (const auto& [key, members] : buckets) {
            if (members.size() < min_size) continue;
            const auto& [r1, u] = key;
            LineFamily f;
            f.system = System::Dual;
            f.member_line_ids.assign(members.begin(), members.end());
            f.real_line = rl;
            Rational r2 = rl.first * r1 + rl.second;
            f.special_point = {r1, r2};
            f.intersection = canonical_line4({r1, Rational(), r2, u},
                                             {Rational(), Rational(1), Rational(), rl.first});
            if (r1.is_zero())
                f.constant_offset = true; // all b2 equal u
            else
                f.m = u / r1; // every member has b2 = r1 (m - a2)
            out.push_back(std::move(f));
        }
    }
}

void detect_double(const std::vector<Line2>& lines, const std::vector<std::size_t>& reps,
                   std::size_t min_size, FamilySign sign, std::vector<LineFamily>& out) {
    // the grouping functional is constant across a family; the opposite
    // functional of (a, b) places members as points in a plane
    Functional group_f = sign == FamilySign::Positive ? Functional::DeltaMinus
                                                      : Functional::DeltaPlus;
    Functional point_f = sign == FamilySign::Positive ? Functional::DeltaPlus
                                                      : Functional::DeltaMinus;
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t id : reps)
        groups[{functional(lines[id].a(), group_f), functional(lines[id].b(), group_f)}]
            .push_back(id);

    for (const auto& [tpar, ids] : groups) {
        if (ids.size() < min_size) continue;
        std::map<Key, std::set<std::size_t>> buckets; // keyed by (s, s')
        for (std::size_t i = 0; i < ids.size(); ++i) {
            Rational pa_i = functional(lines[ids[i]].a(), point_f);
            Rational pb_i = functional(lines[ids[i]].b(), point_f);
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                Rational pa_j = functional(lines[ids[j]].a(), point_f);
                if (pa_i == pa_j) continue; // equal slopes: parallel, never infinite
                Rational pb_j = functional(lines[ids[j]].b(), point_f);
                Rational s = (pb_j - pb_i) / (pa_i - pa_j);
                Rational v = pb_i + s * pa_i;
                auto& members = buckets[{std::move(s), std::move(v)}];
                members.insert(ids[i]);
                members.insert(ids[j]);
            }
        }
        for (const auto& [key, members] : buckets) {
            if (members.size() < min_size) continue;
            const auto& [s, v] = key;
            LineFamily f;
            f.system = System::Double;
            f.member_line_ids.assign(members.begin(), members.end());
            f.sign = sign;
            f.line_parameter = tpar;
            f.point_parameter = {s, v};
            const PlanarNumber& a = lines[f.member_line_ids.front()].a();
            const PlanarNumber& b = lines[f.member_line_ids.front()].b();
            if (s.is_zero()) {
                f.constant_offset = true;
            } else {
                // member-independent slope relation constants
                f.m = a.re + b.re / s;
                f.m_prime = a.im + b.im / s;
            }
            const Rational& t1 = tpar.first;
            if (sign == FamilySign::Positive)
                f.intersection =
                    canonical_line4({Rational(), s, a.im * s + b.re, a.re * s + b.im},
                                    {Rational(1), Rational(-1), t1, Rational() - t1});
            else
                f.intersection =
                    canonical_line4({Rational(), Rational() - s, b.re - a.im * s, b.im - a.re * s},
                                    {Rational(1), Rational(1), t1, t1});
            out.push_back(std::move(f));
        }
    }
}

} // namespace

std::vector<LineFamily> detect_families(const std::vector<Line2>& lines, std::size_t min_size,
                                        std::vector<std::string>* warnings) {
    min_size = std::max<std::size_t>(min_size, 2);
    std::vector<std::size_t> reps = slope_reps(lines, warnings);
    std::vector<LineFamily> out;
    if (reps.empty()) return out;
    for (std::size_t id : reps)
        if (lines[id].system() != lines[reps.front()].system())
            throw UsageError("mixed-system line list");
    if (lines[reps.front()].system() == System::Dual) {
        detect_dual(lines, reps, min_size, out);
    } else {
        detect_double(lines, reps, min_size, FamilySign::Positive, out);
        detect_double(lines, reps, min_size, FamilySign::Negative, out);
    }
    std::sort(out.begin(), out.end(), [](const LineFamily& x, const LineFamily& y) {
        return x.member_line_ids < y.member_line_ids;
    });
    return out;
}

namespace {

std::vector<std::vector<Line2>> partition_dual(const std::vector<Line2>& lines) {
    std::map<Rational, std::size_t> used; // lines seen so far per a1 fiber
    std::size_t k = 0;
    for (const Line2& l : lines) k = std::max(k, ++used[l.a().re]);
    std::vector<std::vector<Line2>> parts(k);
    for (auto& [key, count] : used) count = 0;
    for (const Line2& l : lines) parts[used[l.a().re]++].push_back(l);
    return parts;
}

// Kőnig edge coloring: lines are edges between their DeltaPlus slope value
// and their DeltaMinus slope value; max degree many colors suffice.
std::vector<std::vector<Line2>> partition_double(const std::vector<Line2>& lines) {
    std::map<Rational, std::size_t> uidx, vidx;
    std::vector<std::size_t> eu(lines.size()), ev(lines.size());
    for (std::size_t e = 0; e < lines.size(); ++e) {
        const PlanarNumber& a = lines[e].a();
        eu[e] = uidx.emplace(a.re + a.im, uidx.size()).first->second;
        ev[e] = vidx.emplace(a.re - a.im, vidx.size()).first->second;
    }
    std::vector<std::size_t> deg_u(uidx.size(), 0), deg_v(vidx.size(), 0);
    std::size_t k = 0;
    for (std::size_t e = 0; e < lines.size(); ++e) {
        k = std::max(k, ++deg_u[eu[e]]);
        k = std::max(k, ++deg_v[ev[e]]);
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    // at_u[u][c] = edge currently colored c at u (kNone when free)
    std::vector<std::vector<std::size_t>> at_u(uidx.size(), std::vector<std::size_t>(k, kNone));
    std::vector<std::vector<std::size_t>> at_v(vidx.size(), std::vector<std::size_t>(k, kNone));
    std::vector<std::size_t> color(lines.size(), kNone);

    for (std::size_t e = 0; e < lines.size(); ++e) {
        std::size_t alpha = kNone, beta = kNone, both = kNone;
        for (std::size_t c = 0; c < k && both == kNone; ++c) {
            bool fu = at_u[eu[e]][c] == kNone, fv = at_v[ev[e]][c] == kNone;
            if (fu && fv) both = c;
            if (fu && alpha == kNone) alpha = c;
            if (fv && beta == kNone) beta = c;
        }
        std::size_t c = both;
        if (c == kNone) {
            // swap alpha/beta along the alternating path from ev[e]; it can
            // never reach eu[e] (it would have to arrive on an alpha edge,
            // but alpha is free there), so alpha frees up at ev[e]
            std::vector<std::size_t> path;
            std::size_t want = alpha, vert = ev[e];
            bool on_v = true;
            while (true) {
                std::size_t x = on_v ? at_v[vert][want] : at_u[vert][want];
                if (x == kNone) break;
                path.push_back(x);
                vert = on_v ? eu[x] : ev[x];
                on_v = !on_v;
                want = want == alpha ? beta : alpha;
            }
            for (std::size_t x : path) {
                std::size_t old = color[x], now = old == alpha ? beta : alpha;
                at_u[eu[x]][old] = kNone;
                at_v[ev[x]][old] = kNone;
                color[x] = now;
            }
            for (std::size_t x : path) {
                at_u[eu[x]][color[x]] = x;
                at_v[ev[x]][color[x]] = x;
            }
            c = alpha;
        }
        color[e] = c;
        at_u[eu[e]][c] = e;
        at_v[ev[e]][c] = e;
    }

    std::vector<std::vector<Line2>> parts(k);
    for (std::size_t e = 0; e < lines.size(); ++e) parts[color[e]].push_back(lines[e]);
    return parts;
}

} // namespace

std::vector<std::vector<Line2>> partition_multiplicity_one(const std::vector<Line2>& lines) {
    if (lines.empty()) return {};
    System sys = lines.front().system();
    for (const Line2& l : lines) {
        if (l.form() != LineForm::Slope)
            throw UsageError("multiplicity partition expects slope-form lines");
        if (l.system() != sys) throw UsageError("mixed-system line list");
    }
    return sys == System::Dual ? partition_dual(lines) : partition_double(lines);
}

AffineFlat4 family_hyperplane(const LineFamily& f) {
    if (f.system != System::Double)
        throw UsageError("family hyperplane is defined for double families only");
    const Rational& t1 = f.line_parameter->first;
    const Rational& t2 = f.line_parameter->second;
    std::vector<std::vector<Rational>> row;
    if (*f.sign == FamilySign::Positive)
        row = {{Rational() - t1, t1, Rational(1), Rational(-1), t2}};
    else
        row = {{Rational() - t1, Rational() - t1, Rational(1), Rational(1), t2}};
    return *solve_affine(std::move(row));
}

} // namespace planar
