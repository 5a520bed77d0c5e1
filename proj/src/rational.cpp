#include "planar/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdlib>

#include "planar/errors.hpp"

namespace planar {

Rational::Rational(long num, long den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::size_t Rational::hash() const {
    const __mpz_struct* num = v_.get_num_mpz_t();
    const __mpz_struct* den = v_.get_den_mpz_t();
    std::size_t h = 0x811c9dc5u;
    h = hash_mix(h, static_cast<std::size_t>(num->_mp_size));
    int limbs = std::abs(num->_mp_size);
    for (int i = 0; i < limbs; ++i) h = hash_mix(h, static_cast<std::size_t>(mpz_getlimbn(num, i)));
    limbs = std::abs(den->_mp_size);
    for (int i = 0; i < limbs; ++i) h = hash_mix(h, static_cast<std::size_t>(mpz_getlimbn(den, i)));
    return h;
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw UsageError("malformed rational: '" + std::string(text) + "'"); };
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = n;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) bad();
    std::string_view body = text.substr(i, end - i);

    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    bool neg = false;
    if (body.front() == '-' || body.front() == '+') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!digits_only(num) || !digits_only(den)) bad();

    mpq_class v(std::string(num) + "/" + std::string(den));
    if (v.get_den() == 0) bad();
    v.canonicalize();
    if (neg) v = -v;
    return Rational(std::move(v));
}

namespace {

// 256 bits comfortably covers 50 significant decimal digits.
constexpr mpfr_prec_t kAlphaPrec = 256;

} // namespace

double log_ratio(std::uint64_t k, std::uint64_t n) {
    mpfr_t lk, ln;
    mpfr_init2(lk, kAlphaPrec);
    mpfr_init2(ln, kAlphaPrec);
    mpfr_set_ui(lk, k, MPFR_RNDN);
    mpfr_set_ui(ln, n, MPFR_RNDN);
    mpfr_log(lk, lk, MPFR_RNDN);
    mpfr_log(ln, ln, MPFR_RNDN);
    mpfr_div(lk, lk, ln, MPFR_RNDN);
    double out = mpfr_get_d(lk, MPFR_RNDN);
    mpfr_clear(lk);
    mpfr_clear(ln);
    return out;
}

std::string log_ratio_decimal50(std::uint64_t k, std::uint64_t n) {
    mpfr_t lk, ln;
    mpfr_init2(lk, kAlphaPrec);
    mpfr_init2(ln, kAlphaPrec);
    mpfr_set_ui(lk, k, MPFR_RNDN);
    mpfr_set_ui(ln, n, MPFR_RNDN);
    mpfr_log(lk, lk, MPFR_RNDN);
    mpfr_log(ln, ln, MPFR_RNDN);
    mpfr_div(lk, lk, ln, MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.50Rg", lk);
    mpfr_clear(lk);
    mpfr_clear(ln);
    return buf;
}

std::uint64_t rounded_power(std::uint64_t n, const Rational& e) {
    mpfr_t x, p;
    mpfr_init2(x, kAlphaPrec);
    mpfr_init2(p, kAlphaPrec);
    mpfr_set_ui(x, n, MPFR_RNDN);
    mpfr_set_q(p, e.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_pow(x, x, p, MPFR_RNDN);
    mpfr_rint(x, x, MPFR_RNDN);
    std::uint64_t out = mpfr_get_ui(x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(p);
    return out < 1 ? 1 : out;
}

} // namespace planar
