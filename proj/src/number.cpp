#include "planar/number.hpp"

#include "planar/errors.hpp"

namespace planar {

std::string system_name(System s) { return s == System::Dual ? "dual" : "double"; }

System parse_system(std::string_view name) {
    if (name == "dual") return System::Dual;
    if (name == "double") return System::Double;
    throw UsageError("unknown number system: '" + std::string(name) + "'");
}

namespace {

void require_same_system(const PlanarNumber& a, const PlanarNumber& b) {
    if (a.system != b.system)
        throw UsageError("mixed number systems: " + to_string(a) + " vs " + to_string(b));
}

} // namespace

PlanarNumber add(const PlanarNumber& a, const PlanarNumber& b) {
    require_same_system(a, b);
    return {a.system, a.re + b.re, a.im + b.im};
}

PlanarNumber sub(const PlanarNumber& a, const PlanarNumber& b) {
    require_same_system(a, b);
    return {a.system, a.re - b.re, a.im - b.im};
}

PlanarNumber mul(const PlanarNumber& a, const PlanarNumber& b) {
    require_same_system(a, b);
    if (a.system == System::Dual)
        return {a.system, a.re * b.re, a.re * b.im + a.im * b.re};
    return {a.system, a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
}

PlanarNumber neg(const PlanarNumber& a) { return {a.system, -a.re, -a.im}; }

bool is_invertible(const PlanarNumber& a) {
    if (a.system == System::Dual) return !a.re.is_zero();
    return a.re * a.re != a.im * a.im;
}

PlanarNumber inverse(const PlanarNumber& a) {
    if (!is_invertible(a)) throw NonInvertibleError("non-invertible element: " + to_string(a));
    if (a.system == System::Dual) {
        Rational d = a.re * a.re;
        return {a.system, a.re / d, -a.im / d};
    }
    Rational d = a.re * a.re - a.im * a.im;
    return {a.system, a.re / d, -a.im / d};
}

PlanarNumber div(const PlanarNumber& a, const PlanarNumber& b) {
    require_same_system(a, b);
    return mul(a, inverse(b));
}

Rational functional(const PlanarNumber& a, Functional which) {
    switch (which) {
    case Functional::Re:
        if (a.system != System::Dual) throw UsageError("Re functional is defined on dual numbers only");
        return a.re;
    case Functional::DeltaPlus:
        if (a.system != System::Double) throw UsageError("DeltaPlus is defined on double numbers only");
        return a.re + a.im;
    case Functional::DeltaMinus:
        if (a.system != System::Double) throw UsageError("DeltaMinus is defined on double numbers only");
        return a.re - a.im;
    }
    throw UsageError("unknown functional");
}

Rational primary_functional(const PlanarNumber& a) {
    return a.system == System::Dual ? a.re : a.re + a.im;
}

bool lex_less(const PlanarNumber& a, const PlanarNumber& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

Mat2 to_matrix(const PlanarNumber& a) {
    if (a.system == System::Dual) return {a.re, a.im, 0, a.re};
    return {a.re, a.im, a.im, a.re};
}

std::string to_string(const PlanarNumber& a) {
    std::string out = a.re.str();
    out += a.im.sign() < 0 ? '-' : '+';
    out += (a.im.sign() < 0 ? -a.im : a.im).str();
    out += system_suffix(a.system);
    return out;
}

PlanarNumber parse_planar(std::string_view text) {
    auto bad = [&] { throw UsageError("malformed planar number: '" + std::string(text) + "'"); };
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (e - b < 4) bad(); // shortest is like "0+0e"
    std::string_view body = text.substr(b, e - b);

    System sys;
    switch (body.back()) {
    case 'e': sys = System::Dual; break;
    case 'j': sys = System::Double; break;
    default: bad();
    }
    body.remove_suffix(1);

    // First sign past position 0 splits re from im; rational tokens contain
    // only digits and '/' after their optional leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) bad();

    Rational re = parse_rational(body.substr(0, split));
    bool neg_im = body[split] == '-';
    std::string_view im_tok = body.substr(split + 1);
    if (im_tok.empty()) bad();
    Rational im = parse_rational(im_tok);
    if (neg_im) im = -im;
    return {sys, std::move(re), std::move(im)};
}

} // namespace planar
