#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "planar/rational.hpp"

namespace planar {

// Exact linear algebra over Q for the split coordinates (x1, x2, y1, y2).

using Vec4 = std::array<Rational, 4>;

bool is_zero(const Vec4& v);
Vec4 add(const Vec4& a, const Vec4& b);
Vec4 sub(const Vec4& a, const Vec4& b);
Vec4 scale(const Rational& c, const Vec4& v);
// 4 when v is zero.
std::size_t first_nonzero_index(const Vec4& v);

// In-place Gauss-Jordan over the first pivot_cols columns; trailing columns
// ride along as right-hand sides. Rows end ordered by pivot column, zero rows
// last. Returns the rank.
std::size_t rref(std::vector<std::vector<Rational>>& rows, std::size_t pivot_cols);

// A canonical 1-flat: dir's first nonzero entry is 1 and base is reduced to 0
// at that index, so equal lines compare equal componentwise.
struct Line4 {
    Vec4 base;
    Vec4 dir;

    bool operator==(const Line4& o) const { return base == o.base && dir == o.dir; }
    bool operator!=(const Line4& o) const { return !(*this == o); }

    bool contains(const Vec4& p) const;
};

Line4 canonical_line4(const Vec4& base, const Vec4& dir);

// Affine subspace of R^4 in canonical form: directions are the unique reduced
// row-echelon basis of the span, base has zero entries in all pivot columns.
class AffineFlat4 {
public:
    AffineFlat4(Vec4 base, std::vector<Vec4> dirs);

    std::size_t dim() const { return dirs_.size(); }
    const Vec4& base() const { return base_; }
    const std::vector<Vec4>& dirs() const { return dirs_; }

    bool contains_point(const Vec4& p) const;
    bool contains_direction(const Vec4& v) const;
    bool contains_line(const Line4& l) const;
    bool contains_flat(const AffineFlat4& f) const;

    bool operator==(const AffineFlat4& o) const {
        return base_ == o.base_ && dirs_ == o.dirs_;
    }
    bool operator!=(const AffineFlat4& o) const { return !(*this == o); }

private:
    Vec4 base_;
    std::vector<Vec4> dirs_;
};

// Solution set of a linear system in 4 unknowns; rows are 5-wide (coefficients
// then right-hand side). nullopt when inconsistent.
std::optional<AffineFlat4> solve_affine(std::vector<std::vector<Rational>> rows);

} // namespace planar
