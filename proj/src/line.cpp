#include "planar/line.hpp"

#include <set>
#include <unordered_set>
#include <utility>

#include "planar/errors.hpp"

namespace planar {

Point2 make_point(PlanarNumber x, PlanarNumber y) {
    if (x.system != y.system) throw UsageError("point coordinates from different systems");
    return {std::move(x), std::move(y)};
}

Vec4 point_coords(const Point2& p) { return {p.x.re, p.x.im, p.y.re, p.y.im}; }

namespace {

PlanarNumber real_scale(const PlanarNumber& x, const Rational& s) {
    return {x.system, s * x.re, s * x.im};
}

bool planar_zero(const PlanarNumber& x) { return x.re.is_zero() && x.im.is_zero(); }

} // namespace

Line2::Line2(System sys, LineForm f, PlanarNumber a, PlanarNumber b, PlanarNumber c)
    : system_(sys), form_(f), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    PlanarNumber ta = zero(sys), tb = zero(sys), tc = zero(sys);
    switch (form_) {
    case LineForm::Slope: // y = ax + b  ->  ax - y = -b
        ta = a_;
        tb = PlanarNumber{sys, Rational(-1), Rational()};
        tc = neg(b_);
        break;
    case LineForm::Vertical: // x = b
        ta = one(sys);
        tc = b_;
        break;
    case LineForm::General:
        ta = a_;
        tb = b_;
        tc = c_;
        break;
    }
    if (planar_zero(ta) && planar_zero(tb)) throw UsageError("line needs a nonzero coefficient");

    if (is_invertible(ta)) {
        PlanarNumber u = inverse(ta);
        triple_ = {one(sys), mul(u, tb), mul(u, tc)};
    } else if (is_invertible(tb)) {
        PlanarNumber u = inverse(tb);
        triple_ = {mul(u, ta), one(sys), mul(u, tc)};
    } else {
        // no invertible coefficient: only a real scaling preserves the pattern;
        // pin the lex-least nonzero coefficient's leading entry to 1
        const PlanarNumber& t =
            planar_zero(ta) ? tb : (planar_zero(tb) || lex_less(ta, tb) ? ta : tb);
        Rational lead = t.re.is_zero() ? t.im : t.re;
        Rational s = Rational(1) / lead;
        triple_ = {real_scale(ta, s), real_scale(tb, s), real_scale(tc, s)};
    }

    std::vector<std::vector<Rational>> coeff = split_rows();
    for (auto& row : coeff) row.pop_back();
    degenerate_ = rref(coeff, 4) < 2;
}

Line2 Line2::slope_form(PlanarNumber a, PlanarNumber b) {
    if (a.system != b.system) throw UsageError("line coefficients from different systems");
    System sys = a.system;
    return Line2(sys, LineForm::Slope, std::move(a), std::move(b), zero(sys));
}

Line2 Line2::vertical_form(PlanarNumber b) {
    System sys = b.system;
    return Line2(sys, LineForm::Vertical, zero(sys), std::move(b), zero(sys));
}

Line2 Line2::general_form(PlanarNumber a, PlanarNumber b, PlanarNumber c) {
    if (a.system != b.system || a.system != c.system)
        throw UsageError("line coefficients from different systems");
    System sys = a.system;
    return Line2(sys, LineForm::General, std::move(a), std::move(b), std::move(c));
}

const PlanarNumber& Line2::a() const {
    if (form_ == LineForm::Vertical) throw UsageError("vertical line has no slope coefficient");
    return a_;
}

const PlanarNumber& Line2::b() const { return b_; }

const PlanarNumber& Line2::c() const {
    if (form_ != LineForm::General) throw UsageError("only general form carries c");
    return c_;
}

std::vector<std::vector<Rational>> Line2::split_rows() const {
    const PlanarNumber& a = triple_[0];
    const PlanarNumber& b = triple_[1];
    const PlanarNumber& c = triple_[2];
    if (system_ == System::Dual)
        return {{a.re, Rational(), b.re, Rational(), c.re},
                {a.im, a.re, b.im, b.re, c.im}};
    return {{a.re, a.im, b.re, b.im, c.re},
            {a.im, a.re, b.im, b.re, c.im}};
}

std::string Line2::str() const {
    switch (form_) {
    case LineForm::Slope: return "y = (" + to_string(a_) + ")x + (" + to_string(b_) + ")";
    case LineForm::Vertical: return "x = " + to_string(b_);
    case LineForm::General:
        return "(" + to_string(a_) + ")x + (" + to_string(b_) + ")y = " + to_string(c_);
    }
    return {};
}

std::size_t Line2Hash::operator()(const Line2& l) const {
    std::size_t h = static_cast<std::size_t>(l.system()) + 1;
    PlanarNumberHash ph;
    for (const PlanarNumber& t : l.general_triple()) h = hash_mix(h, ph(t));
    return h;
}

bool incident(const Point2& p, const Line2& l) {
    if (p.x.system != l.system()) throw UsageError("point and line from different systems");
    const auto& t = l.general_triple();
    return add(mul(t[0], p.x), mul(t[1], p.y)) == t[2];
}

std::uint64_t count_incidences(const std::vector<Point2>& points, const std::vector<Line2>& lines,
                               std::vector<std::string>* warnings) {
    std::vector<Point2> ps;
    std::unordered_set<Point2, Point2Hash> seen_p;
    for (const Point2& p : points)
        if (seen_p.insert(p).second) ps.push_back(p);
    std::vector<Line2> ls;
    std::unordered_set<Line2, Line2Hash> seen_l;
    for (const Line2& l : lines)
        if (seen_l.insert(l).second) ls.push_back(l);
    if (warnings) {
        if (ps.size() < points.size())
            warnings->push_back("merged " + std::to_string(points.size() - ps.size()) +
                                " duplicate points");
        if (ls.size() < lines.size())
            warnings->push_back("merged " + std::to_string(lines.size() - ls.size()) +
                                " duplicate lines");
    }
    std::uint64_t total = 0;
    for (const Line2& l : ls)
        for (const Point2& p : ps)
            if (incident(p, l)) ++total;
    return total;
}

AffineFlat4 line_to_flat(const Line2& l) {
    std::optional<AffineFlat4> f = solve_affine(l.split_rows());
    if (!f) throw UsageError("line has an empty solution set: " + l.str());
    return *std::move(f);
}

RealLine RealLine::make(Rational a, Rational b, Rational c) {
    if (a.is_zero() && b.is_zero()) throw UsageError("real line needs a nonzero coefficient");
    Rational s = Rational(1) / (a.is_zero() ? b : a);
    return {a * s, b * s, c * s};
}

RealLine RealLine::from_slope(const Rational& p, const Rational& q) {
    return make(p, Rational(-1), Rational() - q);
}

std::uint64_t rich_points(const std::vector<RealLine>& lines, std::uint64_t r) {
    if (r < 2) throw UsageError("rich point threshold must be >= 2");
    std::set<std::array<Rational, 3>> canon;
    for (const RealLine& l : lines) canon.insert({l.a, l.b, l.c});
    std::vector<RealLine> ls;
    ls.reserve(canon.size());
    for (const auto& t : canon) ls.push_back({t[0], t[1], t[2]});

    std::set<std::pair<Rational, Rational>> pts;
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            Rational det = ls[i].a * ls[j].b - ls[j].a * ls[i].b;
            if (det.is_zero()) continue;
            Rational x = (ls[i].c * ls[j].b - ls[j].c * ls[i].b) / det;
            Rational y = (ls[i].a * ls[j].c - ls[j].a * ls[i].c) / det;
            pts.insert({std::move(x), std::move(y)});
        }

    std::uint64_t total = 0;
    for (const auto& [x, y] : pts) {
        std::uint64_t deg = 0;
        for (const RealLine& l : ls)
            if (l.contains(x, y)) ++deg;
        if (deg >= r) ++total;
    }
    return total;
}

} // namespace planar
