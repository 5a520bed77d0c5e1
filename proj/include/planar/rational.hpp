#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace planar {

// Exact rational scalar. GMP keeps the canonical form (lowest terms, positive
// denominator) across every operation, so equality and hashing are structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, scalars mix freely
    Rational(long num, long den);

    // Wraps an already-canonical GMP value.
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o); // throws UsageError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    // Diagnostic only; never feeds back into exact computation.
    double approx() const { return v_.get_d(); }

    std::size_t hash() const;

  private:
    mpq_class v_;
};

// Parses "p", "-p", "p/q" (q > 0 after canonicalization). Throws UsageError.
Rational parse_rational(std::string_view text);

// log(k)/log(n) evaluated by MPFR. Diagnostic values for alpha reporting;
// the decimal form carries 50 significant digits.
double log_ratio(std::uint64_t k, std::uint64_t n);
std::string log_ratio_decimal50(std::uint64_t k, std::uint64_t n);

// Nearest integer to n^e (ties to even), clamped to >= 1. Exact-input MPFR
// evaluation at 256 bits; used only to pick construction side lengths.
std::uint64_t rounded_power(std::uint64_t n, const Rational& e);

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return r.hash(); }
};

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace planar
