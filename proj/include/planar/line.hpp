#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planar/linalg.hpp"
#include "planar/number.hpp"

namespace planar {

struct Point2 {
    PlanarNumber x;
    PlanarNumber y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

Point2 make_point(PlanarNumber x, PlanarNumber y); // checks system consistency

struct Point2Hash {
    std::size_t operator()(const Point2& p) const {
        return hash_mix(PlanarNumberHash{}(p.x), PlanarNumberHash{}(p.y));
    }
};

// (x1, x2, y1, y2) split coordinates of a point.
Vec4 point_coords(const Point2& p);

enum class LineForm : std::uint8_t { Slope, Vertical, General };

// A line in the plane over one system: y=ax+b, x=b, or ax+by=c. Equality and
// hashing go through the canonical general triple, so the same solution-set
// presentation in different forms compares equal. For non-invertible (a,b)
// pairs the canonical form is fixed by a real scaling only, which is exact for
// single-branch coefficients; rank-deficient presentations are flagged
// degenerate and the oracle stays authoritative for their pairwise geometry.
class Line2 {
public:
    static Line2 slope_form(PlanarNumber a, PlanarNumber b);
    static Line2 vertical_form(PlanarNumber b);
    static Line2 general_form(PlanarNumber a, PlanarNumber b, PlanarNumber c);

    System system() const { return system_; }
    LineForm form() const { return form_; }

    const PlanarNumber& a() const; // Slope or General
    const PlanarNumber& b() const; // intercept (Slope), x-value (Vertical), or General b
    const PlanarNumber& c() const; // General only

    // canonical (a, b, c) with a*x + b*y = c
    const std::array<PlanarNumber, 3>& general_triple() const { return triple_; }

    // true when the two split equations are linearly dependent, i.e. the
    // solution set is not a 2-flat (dual: a1=b1=0)
    bool degenerate() const { return degenerate_; }

    // the 2 split rows (5-wide, rhs last) in (x1, x2, y1, y2)
    std::vector<std::vector<Rational>> split_rows() const;

    std::string str() const;

    bool operator==(const Line2& o) const {
        return system_ == o.system_ && triple_ == o.triple_;
    }
    bool operator!=(const Line2& o) const { return !(*this == o); }

private:
    Line2(System sys, LineForm f, PlanarNumber a, PlanarNumber b, PlanarNumber c);

    System system_;
    LineForm form_;
    PlanarNumber a_, b_, c_;                // as given for the stored form
    std::array<PlanarNumber, 3> triple_;    // canonical general form
    bool degenerate_ = false;
};

struct Line2Hash {
    std::size_t operator()(const Line2& l) const;
};

bool incident(const Point2& p, const Line2& l);

// Exact incidence count after merging duplicate points and lines; merges are
// reported through warnings when provided.
std::uint64_t count_incidences(const std::vector<Point2>& points, const std::vector<Line2>& lines,
                               std::vector<std::string>* warnings = nullptr);

// The line's solution set as a flat in R^4 (2-flat for non-degenerate lines).
// UsageError when the solution set is empty.
AffineFlat4 line_to_flat(const Line2& l);

// A real-plane line ax+by=c with rational coefficients, canonicalized so the
// first nonzero of (a, b) is 1.
struct RealLine {
    Rational a, b, c;

    static RealLine make(Rational a, Rational b, Rational c);
    static RealLine from_slope(const Rational& p, const Rational& q); // y = px + q

    bool contains(const Rational& x, const Rational& y) const { return a * x + b * y == c; }
    bool operator==(const RealLine& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Number of points hit by at least r of the (deduplicated) lines; r >= 2.
std::uint64_t rich_points(const std::vector<RealLine>& lines, std::uint64_t r);

} // namespace planar
