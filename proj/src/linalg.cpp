#include "planar/linalg.hpp"

#include <utility>

#include "planar/errors.hpp"

namespace planar {

bool is_zero(const Vec4& v) {
    for (const Rational& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec4 add(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 sub(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 scale(const Rational& c, const Vec4& v) {
    return {c * v[0], c * v[1], c * v[2], c * v[3]};
}

std::size_t first_nonzero_index(const Vec4& v) {
    for (std::size_t i = 0; i < 4; ++i)
        if (!v[i].is_zero()) return i;
    return 4;
}

std::size_t rref(std::vector<std::vector<Rational>>& rows, std::size_t pivot_cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < pivot_cols && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][col];
        for (Rational& c : rows[rank]) c = c * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (std::size_t j = 0; j < rows[r].size(); ++j)
                rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool Line4::contains(const Vec4& p) const {
    Vec4 d = sub(p, base);
    std::size_t i = first_nonzero_index(dir);
    if (i == 4) return is_zero(d);
    return d == scale(d[i], dir);
}

Line4 canonical_line4(const Vec4& base, const Vec4& dir) {
    std::size_t i = first_nonzero_index(dir);
    if (i == 4) throw UsageError("line direction must be nonzero");
    Vec4 d = scale(Rational(1) / dir[i], dir);
    Vec4 b = sub(base, scale(base[i], d));
    return {b, d};
}

AffineFlat4::AffineFlat4(Vec4 base, std::vector<Vec4> dirs) : base_(std::move(base)) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(dirs.size());
    for (const Vec4& d : dirs) rows.push_back({d[0], d[1], d[2], d[3]});
    std::size_t rank = rref(rows, 4);
    dirs_.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r)
        dirs_.push_back({rows[r][0], rows[r][1], rows[r][2], rows[r][3]});
    // zero the base at every pivot column so the representative is unique
    for (const Vec4& d : dirs_) {
        std::size_t p = first_nonzero_index(d);
        base_ = sub(base_, scale(base_[p], d));
    }
}

bool AffineFlat4::contains_direction(const Vec4& v) const {
    Vec4 r = v;
    for (const Vec4& d : dirs_) {
        std::size_t p = first_nonzero_index(d);
        r = sub(r, scale(r[p], d));
    }
    return is_zero(r);
}

bool AffineFlat4::contains_point(const Vec4& p) const { return contains_direction(sub(p, base_)); }

bool AffineFlat4::contains_line(const Line4& l) const {
    return contains_point(l.base) && contains_direction(l.dir);
}

bool AffineFlat4::contains_flat(const AffineFlat4& f) const {
    if (!contains_point(f.base())) return false;
    for (const Vec4& d : f.dirs())
        if (!contains_direction(d)) return false;
    return true;
}

std::optional<AffineFlat4> solve_affine(std::vector<std::vector<Rational>> rows) {
    for (const auto& row : rows)
        if (row.size() != 5) throw UsageError("affine solver expects 5-wide rows");
    std::size_t rank = rref(rows, 4);
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][4].is_zero()) return std::nullopt;

    std::array<bool, 4> is_pivot = {false, false, false, false};
    std::array<std::size_t, 4> pivot_row = {0, 0, 0, 0};
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (!rows[r][c].is_zero()) {
                is_pivot[c] = true;
                pivot_row[c] = r;
                break;
            }

    Vec4 base{};
    for (std::size_t c = 0; c < 4; ++c)
        if (is_pivot[c]) base[c] = rows[pivot_row[c]][4];

    std::vector<Vec4> dirs;
    for (std::size_t f = 0; f < 4; ++f) {
        if (is_pivot[f]) continue;
        Vec4 d{};
        d[f] = Rational(1);
        for (std::size_t c = 0; c < 4; ++c)
            if (is_pivot[c]) d[c] = Rational() - rows[pivot_row[c]][f];
        dirs.push_back(std::move(d));
    }
    return AffineFlat4(std::move(base), std::move(dirs));
}

} // namespace planar
