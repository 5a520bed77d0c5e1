#include <doctest.h>

#include <random>

#include "planar/errors.hpp"
#include "planar/number.hpp"
#include "planar/sampling.hpp"

using namespace planar;

TEST_SUITE_BEGIN("numbers");

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational(" 12 ") == Rational(12));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("a/b"), UsageError);
    CHECK_THROWS_AS(parse_rational("1.5"), UsageError);

    std::mt19937_64 g(11);
    for (int i = 0; i < 500; ++i) {
        Rational r = rand_rational(g, 1000, 60);
        CHECK(parse_rational(r.str()) == r);
    }
}

TEST_CASE("rational order and arithmetic") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
}

TEST_CASE("log ratio diagnostics") {
    CHECK(log_ratio(8, 64) == doctest::Approx(0.5));
    CHECK(log_ratio(64, 64) == doctest::Approx(1.0));
    CHECK(log_ratio_decimal50(8, 64).substr(0, 3) == "0.5");
    // 50 significant digits of log(3)/log(10), spot-checked prefix
    CHECK(log_ratio_decimal50(3, 10).substr(0, 12) == "0.4771212547");
    CHECK(rounded_power(64, Rational(1, 2)) == 8);
    CHECK(rounded_power(1024, Rational(3, 4)) == 181); // 181.019...
    CHECK(rounded_power(64, Rational(0)) == 1);
}

TEST_CASE("planar addition and multiplication frozen examples") {
    // dual: (1+2e)+(3+4e) = 4+6e, (1+2e)*(3+4e) = 3+10e
    CHECK(add(dual(1, 2), dual(3, 4)) == dual(4, 6));
    CHECK(mul(dual(1, 2), dual(3, 4)) == dual(3, 10));
    // double: (1+1j)+(-1+1j) = 0+2j, (1+1j)*(1-1j) = 0 (null product)
    CHECK(add(dbl(1, 1), dbl(-1, 1)) == dbl(0, 2));
    CHECK(mul(dbl(1, 1), dbl(1, -1)) == dbl(0, 0));
    // identities
    CHECK(add(dual(5, -7), zero(System::Dual)) == dual(5, -7));
    CHECK(mul(dbl(5, -7), one(System::Double)) == dbl(5, -7));
    CHECK_THROWS_AS(add(dual(1, 0), dbl(1, 0)), UsageError);
    CHECK_THROWS_AS(mul(dual(1, 0), dbl(1, 0)), UsageError);
}

TEST_CASE("matrix images have the advertised shape") {
    Mat2 md = to_matrix(dual(1, 2));
    CHECK(md == Mat2{1, 2, 0, 1});
    Mat2 ms = to_matrix(dbl(1, 2));
    CHECK(ms == Mat2{1, 2, 2, 1});
    CHECK(to_matrix(zero(System::Dual)) == Mat2{0, 0, 0, 0});
}

// The 2x2 matrix ring knows nothing about e or j; generic matrix arithmetic
// over the images is an independent oracle for add and mul.
TEST_CASE("matrix homomorphism oracle, 1e5 random pairs per system") {
    std::mt19937_64 g(20240205);
    for (System sys : {System::Dual, System::Double}) {
        for (int i = 0; i < 100000; ++i) {
            PlanarNumber a = rand_planar(g, sys, 20, 6);
            PlanarNumber b = rand_planar(g, sys, 20, 6);
            REQUIRE(to_matrix(mul(a, b)) == to_matrix(a) * to_matrix(b));
            REQUIRE(to_matrix(add(a, b)) == to_matrix(a) + to_matrix(b));
        }
    }
}

TEST_CASE("invertibility and inverses") {
    CHECK_FALSE(is_invertible(dual(0, 5)));
    CHECK_FALSE(is_invertible(dbl(3, 3)));
    CHECK_FALSE(is_invertible(dbl(3, -3)));
    CHECK(is_invertible(dual(2, 6)));
    CHECK(is_invertible(dbl(2, 1)));

    CHECK(inverse(dual(2, 6)) == dual({1, 2}, {-3, 2}));
    CHECK(inverse(dbl(2, 1)) == dbl({2, 3}, {-1, 3}));
    CHECK(inverse(one(System::Dual)) == one(System::Dual));
    CHECK_THROWS_AS(inverse(dual(0, 5)), NonInvertibleError);
    CHECK_THROWS_AS(div(dbl(1, 0), dbl(2, 2)), NonInvertibleError);

    std::mt19937_64 g(7);
    for (System sys : {System::Dual, System::Double}) {
        int done = 0;
        while (done < 2000) {
            PlanarNumber a = rand_planar(g, sys, 30, 8);
            if (!is_invertible(a)) continue;
            ++done;
            PlanarNumber inv = inverse(a);
            REQUIRE(mul(a, inv) == one(sys));
            REQUIRE(inverse(inv) == a);
        }
    }
}

TEST_CASE("functionals: values, additivity, multiplicativity") {
    CHECK(functional(dual(3, 7), Functional::Re) == Rational(3));
    CHECK(functional(dbl(2, 5), Functional::DeltaPlus) == Rational(7));
    CHECK(functional(dbl(2, 5), Functional::DeltaMinus) == Rational(-3));
    CHECK_THROWS_AS(functional(dual(1, 1), Functional::DeltaPlus), UsageError);
    CHECK_THROWS_AS(functional(dbl(1, 1), Functional::Re), UsageError);

    std::mt19937_64 g(99);
    for (int i = 0; i < 5000; ++i) {
        PlanarNumber a = rand_planar(g, System::Dual, 25, 5);
        PlanarNumber b = rand_planar(g, System::Dual, 25, 5);
        REQUIRE(functional(mul(a, b), Functional::Re) ==
                functional(a, Functional::Re) * functional(b, Functional::Re));
        REQUIRE(functional(add(a, b), Functional::Re) ==
                functional(a, Functional::Re) + functional(b, Functional::Re));
    }
    for (int i = 0; i < 5000; ++i) {
        PlanarNumber a = rand_planar(g, System::Double, 25, 5);
        PlanarNumber b = rand_planar(g, System::Double, 25, 5);
        for (Functional f : {Functional::DeltaPlus, Functional::DeltaMinus}) {
            REQUIRE(functional(mul(a, b), f) == functional(a, f) * functional(b, f));
            REQUIRE(functional(add(a, b), f) == functional(a, f) + functional(b, f));
            if (is_invertible(b))
                REQUIRE(functional(div(a, b), f) == functional(a, f) * functional(inverse(b), f));
        }
    }
}

TEST_CASE("non-invertibility difference criterion") {
    std::mt19937_64 g(4242);
    for (int i = 0; i < 20000; ++i) {
        PlanarNumber a = rand_planar(g, System::Dual, 6, 3);
        PlanarNumber b = rand_planar(g, System::Dual, 6, 3);
        REQUIRE(!is_invertible(sub(a, b)) == (a.re == b.re));
    }
    for (int i = 0; i < 20000; ++i) {
        PlanarNumber a = rand_planar(g, System::Double, 6, 3);
        PlanarNumber b = rand_planar(g, System::Double, 6, 3);
        bool same_plus = functional(a, Functional::DeltaPlus) == functional(b, Functional::DeltaPlus);
        bool same_minus = functional(a, Functional::DeltaMinus) == functional(b, Functional::DeltaMinus);
        REQUIRE(!is_invertible(sub(a, b)) == (same_plus || same_minus));
    }
}

TEST_CASE("planar serialization") {
    CHECK(to_string(dual(3, 7)) == "3+7e");
    CHECK(to_string(dual({1, 2}, {-3, 2})) == "1/2-3/2e");
    CHECK(to_string(dbl(0, 0)) == "0+0j");
    CHECK(to_string(dbl({-1, 3}, {2, 5})) == "-1/3+2/5j");

    CHECK(parse_planar("3+7e") == dual(3, 7));
    CHECK(parse_planar("1/2-3/2e") == dual({1, 2}, {-3, 2}));
    CHECK(parse_planar("1/2+-3/2e") == dual({1, 2}, {-3, 2}));
    CHECK(parse_planar("-1/3+2/5j") == dbl({-1, 3}, {2, 5}));
    CHECK(parse_planar(" 0+0j ") == dbl(0, 0));
    CHECK_THROWS_AS(parse_planar("3+7"), UsageError);
    CHECK_THROWS_AS(parse_planar("3e"), UsageError);
    CHECK_THROWS_AS(parse_planar("e"), UsageError);
    CHECK_THROWS_AS(parse_planar("1+2k"), UsageError);

    std::mt19937_64 g(31337);
    for (int i = 0; i < 2000; ++i) {
        for (System sys : {System::Dual, System::Double}) {
            PlanarNumber a = rand_planar(g, sys, 500, 40);
            CHECK(parse_planar(to_string(a)) == a);
        }
    }
}

TEST_CASE("deterministic lexicographic order") {
    CHECK(lex_less(dual(1, 5), dual(2, -100)));
    CHECK(lex_less(dual(1, -1), dual(1, 0)));
    CHECK_FALSE(lex_less(dual(1, 0), dual(1, 0)));
}

TEST_SUITE_END();
