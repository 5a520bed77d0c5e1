#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "planar/rational.hpp"

namespace planar {

// Dual: im*im = 0. Double: im*im = 1 (split-complex).
enum class System : std::uint8_t { Dual, Double };

inline char system_suffix(System s) { return s == System::Dual ? 'e' : 'j'; }
std::string system_name(System s);
System parse_system(std::string_view name); // "dual" | "double"

enum class Functional : std::uint8_t { Re, DeltaPlus, DeltaMinus };

struct PlanarNumber {
    System system;
    Rational re, im;

    bool operator==(const PlanarNumber& o) const {
        return system == o.system && re == o.re && im == o.im;
    }
    bool operator!=(const PlanarNumber& o) const { return !(*this == o); }
};

inline PlanarNumber dual(Rational re, Rational im) { return {System::Dual, std::move(re), std::move(im)}; }
inline PlanarNumber dbl(Rational re, Rational im) { return {System::Double, std::move(re), std::move(im)}; }
inline PlanarNumber zero(System s) { return {s, 0, 0}; }
inline PlanarNumber one(System s) { return {s, 1, 0}; }

PlanarNumber add(const PlanarNumber& a, const PlanarNumber& b);
PlanarNumber sub(const PlanarNumber& a, const PlanarNumber& b);
PlanarNumber mul(const PlanarNumber& a, const PlanarNumber& b);
PlanarNumber neg(const PlanarNumber& a);
bool is_invertible(const PlanarNumber& a);
PlanarNumber inverse(const PlanarNumber& a);                    // throws NonInvertibleError
PlanarNumber div(const PlanarNumber& a, const PlanarNumber& b); // mul(a, inverse(b))

inline PlanarNumber operator+(const PlanarNumber& a, const PlanarNumber& b) { return add(a, b); }
inline PlanarNumber operator-(const PlanarNumber& a, const PlanarNumber& b) { return sub(a, b); }
inline PlanarNumber operator*(const PlanarNumber& a, const PlanarNumber& b) { return mul(a, b); }
inline PlanarNumber operator-(const PlanarNumber& a) { return neg(a); }

// Re for Dual; DeltaPlus/DeltaMinus for Double. Mismatch is a UsageError.
Rational functional(const PlanarNumber& a, Functional which);

// The system's canonical scalar fiber key: Re (Dual) or DeltaPlus (Double).
Rational primary_functional(const PlanarNumber& a);

// Deterministic order: lexicographic on (re, im) over reduced rationals.
bool lex_less(const PlanarNumber& a, const PlanarNumber& b);

struct PlanarNumberHash {
    std::size_t operator()(const PlanarNumber& a) const {
        return hash_mix(a.re.hash(), a.im.hash());
    }
};

struct Mat2 {
    Rational m00, m01, m10, m11;

    bool operator==(const Mat2& o) const {
        return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11;
    }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
};

// Dual a -> [[a1,a2],[0,a1]]; Double a -> [[a1,a2],[a2,a1]]. Addition and
// multiplication of these images mirror the planar operations exactly, which
// makes the matrix ring an independent oracle for the arithmetic.
Mat2 to_matrix(const PlanarNumber& a);

// "re+imE" with rationals as p/q (integer shorthand when q=1), E in {e,j},
// e.g. "3+7e", "1/2-3/2j". Parsing accepts the same grammar.
std::string to_string(const PlanarNumber& a);
PlanarNumber parse_planar(std::string_view text); // throws UsageError

} // namespace planar
