#include "planar/intersect.hpp"

#include <utility>

#include "planar/errors.hpp"

namespace planar {

std::string intersect_kind_name(IntersectKind k) {
    switch (k) {
    case IntersectKind::Empty: return "empty";
    case IntersectKind::Single: return "single";
    case IntersectKind::InfiniteLine: return "infinite-line";
    case IntersectKind::Identical: return "identical";
    }
    return "?";
}

namespace {

Intersection single_at(PlanarNumber x, const PlanarNumber& a, const PlanarNumber& b) {
    PlanarNumber y = add(mul(a, x), b);
    Intersection r;
    r.kind = IntersectKind::Single;
    r.point = make_point(std::move(x), std::move(y));
    return r;
}

Intersection infinite(Vec4 base, Vec4 dir) {
    Intersection r;
    r.kind = IntersectKind::InfiniteLine;
    r.line = canonical_line4(base, dir);
    return r;
}

Intersection classify_dual(const PlanarNumber& a, const PlanarNumber& b, const PlanarNumber& a2,
                           const PlanarNumber& b2) {
    if (a.re != a2.re) {
        // single point: x1 = (b'1-b1)/(a1-a'1), then back-substitute for x2
        Rational x1 = (b2.re - b.re) / (a.re - a2.re);
        Rational x2 = (b2.im - b.im - x1 * (a.im - a2.im)) / (a.re - a2.re);
        return single_at(dual(std::move(x1), std::move(x2)), a, b);
    }
    if (b.re != b2.re) return {IntersectKind::Empty, std::nullopt, std::nullopt};
    if (a.im == a2.im) {
        if (b.im == b2.im) return {IntersectKind::Identical, std::nullopt, std::nullopt};
        return {IntersectKind::Empty, std::nullopt, std::nullopt};
    }
    // infinite: every common point has x1 = (b'2-b2)/(a2-a'2), x2 free
    Rational x1 = (b2.im - b.im) / (a.im - a2.im);
    Vec4 base = {x1, Rational(), a.re * x1 + b.re, a.im * x1 + b.im};
    Vec4 dir = {Rational(), Rational(1), Rational(), a.re};
    return infinite(std::move(base), std::move(dir));
}

Intersection classify_double(const PlanarNumber& a, const PlanarNumber& b, const PlanarNumber& a2,
                             const PlanarNumber& b2) {
    PlanarNumber e = sub(a, a2);  // (a-a')x = b'-b
    PlanarNumber f = sub(b2, b);
    if (e.re.is_zero() && e.im.is_zero()) {
        if (f.re.is_zero() && f.im.is_zero())
            return {IntersectKind::Identical, std::nullopt, std::nullopt};
        return {IntersectKind::Empty, std::nullopt, std::nullopt};
    }
    if (is_invertible(e)) return single_at(div(f, e), a, b);

    // e lies on one null branch: e1 = s e2 with s = +-1 and e1 != 0
    bool plus = e.re == e.im;
    Rational sf = plus ? f.im : Rational() - f.im;
    if (f.re != sf) return {IntersectKind::Empty, std::nullopt, std::nullopt};
    Rational s = f.re / e.re; // common value of x1 + x2 (plus) or x1 - x2 (minus)
    if (plus) {
        Vec4 base = {Rational(), s, a.im * s + b.re, a.re * s + b.im};
        Vec4 dir = {Rational(1), Rational(-1), a.re - a.im, a.im - a.re};
        return infinite(std::move(base), std::move(dir));
    }
    Vec4 base = {Rational(), Rational() - s, b.re - a.im * s, b.im - a.re * s};
    Vec4 dir = {Rational(1), Rational(1), a.re + a.im, a.re + a.im};
    return infinite(std::move(base), std::move(dir));
}

} // namespace

Intersection classify_intersection(const Line2& l1, const Line2& l2) {
    if (l1.system() != l2.system()) throw UsageError("lines from different systems");
    if (l1.form() != LineForm::Slope || l2.form() != LineForm::Slope) return r4_oracle(l1, l2);
    if (l1.system() == System::Dual) return classify_dual(l1.a(), l1.b(), l2.a(), l2.b());
    return classify_double(l1.a(), l1.b(), l2.a(), l2.b());
}

Intersection r4_oracle(const Line2& l1, const Line2& l2) {
    if (l1.system() != l2.system()) throw UsageError("lines from different systems");
    std::vector<std::vector<Rational>> rows = l1.split_rows();
    for (auto& row : l2.split_rows()) rows.push_back(std::move(row));
    std::optional<AffineFlat4> sol = solve_affine(std::move(rows));
    if (!sol) return {IntersectKind::Empty, std::nullopt, std::nullopt};
    switch (sol->dim()) {
    case 0: {
        const Vec4& p = sol->base();
        Intersection r;
        r.kind = IntersectKind::Single;
        r.point = make_point(PlanarNumber{l1.system(), p[0], p[1]},
                             PlanarNumber{l1.system(), p[2], p[3]});
        return r;
    }
    case 1: {
        Intersection r;
        r.kind = IntersectKind::InfiniteLine;
        r.line = canonical_line4(sol->base(), sol->dirs()[0]);
        return r;
    }
    default: return {IntersectKind::Identical, std::nullopt, std::nullopt};
    }
}

} // namespace planar
