#include "planar/exponents.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "planar/errors.hpp"

namespace planar {

namespace {

Rational quadratic_case(const Rational& a) {
    return Rational(9, 4) - Rational(39, 16) * a + Rational(5, 8) * a * a;
}

} // namespace

bool below_kappa(const Rational& alpha) {
    return alpha >= Rational() && alpha < Rational(39, 20) && quadratic_case(alpha) > Rational(1);
}

TheoremExponent theorem_exponent(System sys, const Rational& alpha) {
    if (alpha < Rational()) throw UsageError("alpha must be nonnegative");
    if (!below_kappa(alpha)) throw UsageError("alpha reaches kappa = (39 - sqrt(721))/20");
    TheoremExponent t{sys, alpha, Rational(), ""};
    if (alpha < Rational(1, 8)) {
        t.exponent = (Rational(4) - Rational(2) * alpha) / Rational(3);
        t.case_label = "alpha<1/8";
    } else if (alpha < Rational(1, 3)) {
        t.exponent = Rational(5, 4);
        t.case_label = "1/8<=alpha<1/3";
    } else if (alpha < Rational(1, 2)) {
        t.exponent = Rational(3, 2) - Rational(5, 8) * alpha;
        t.case_label = "1/3<=alpha<1/2";
    } else {
        t.exponent = quadratic_case(alpha);
        t.case_label = "1/2<=alpha<kappa";
    }
    return t;
}

ExponentEstimate exponent_sweep(ConstructionKind kind, std::optional<Rational> alpha,
                                const std::vector<std::uint64_t>& sizes) {
    if (kind == ConstructionKind::DoubleNullPair)
        throw UsageError("the null-pair construction builds two sets; no single-set sweep");
    if (sizes.size() < 3) throw UsageError("sweep needs at least 3 sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
        throw UsageError("sweep sizes must be strictly ascending");

    ExponentEstimate est;
    est.kind = kind;
    est.alpha = alpha;
    for (std::uint64_t n : sizes) {
        const auto start = std::chrono::steady_clock::now();
        NumberSet a = generate(kind, n, alpha).a; // validates the alpha parameter
        std::uint64_t sums = sumset(a).size();
        std::uint64_t prods = productset(a).size();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        est.measurements.emplace_back(a.size(), std::max(sums, prods));
        est.sumset_sizes.push_back(sums);
        est.productset_sizes.push_back(prods);
        est.seconds.push_back(took.count());
    }

    // least squares on (ln n, ln max); sizes differ so the variance is nonzero
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, v] : est.measurements) {
        double x = std::log(double(n)), y = std::log(double(v));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double count = double(est.measurements.size());
    double var = count * sxx - sx * sx;
    if (var == 0.0) throw UsageError("construction sizes collapsed after rounding");
    est.slope = (count * sxy - sx * sy) / var;

    switch (kind) {
    case ConstructionKind::UnitRealDual:
        est.envelope = 1.0; // both sizes are exactly 2n-1
        break;
    case ConstructionKind::DualGrid:
        est.envelope = 3.0 - 2.0 * alpha->approx(); // product box height 2n, width n^(2-2a)
        break;
    case ConstructionKind::DoubleDiagonalGrid:
        est.envelope = 2.0; // products stay inside a full functional grid
        break;
    case ConstructionKind::DoubleNullPair:
        break; // unreachable
    }
    if (alpha && below_kappa(*alpha)) {
        System sys = kind == ConstructionKind::DoubleDiagonalGrid ? System::Double : System::Dual;
        est.theorem_reference = theorem_exponent(sys, *alpha).exponent;
    }
    return est;
}

} // namespace planar
