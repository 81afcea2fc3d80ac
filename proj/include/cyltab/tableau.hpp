#pragma once

#include <map>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace cyltab {

using Word = std::vector<int>;
using Weight = std::map<int, int>;    // letter -> count, zero counts omitted
using Monomial = std::map<int, int>;  // variable index -> exponent

// Row r stores the entries of columns inner_r+1 .. outer_r, left to right.
struct CylTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    CylParams params() const { return shape.params(); }
    int k() const { return shape.k(); }
    const CylPartition& outer() const { return shape.outer; }
    const CylPartition& inner() const { return shape.inner; }
    int size() const { return shape.size(); }

    int at(Box b) const { return rows[b.row][b.col - shape.inner.window[b.row] - 1]; }
    int at(Point p) const { return at(project(p, params())); }
    bool operator==(const CylTableau&) const = default;
};

namespace detail {

// Checks both monotonicity conditions; returns nothing on success.
inline void check_semistandard(const CylTableau& t) {
    const int k = t.k();
    for (int r = 0; r < k; ++r) {
        const auto& row = t.rows[r];
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] > row[j])
                throw Error(Errc::RowNotWeaklyIncreasing, {}, r,
                            t.inner().window[r] + static_cast<int>(j) + 1);
    }
    // Strictness between plane rows x and x+1 suffices: the rows between two
    // cells of one column are themselves inside the shape.
    for (int x = 0; x < k; ++x) {
        int lo = std::max(t.inner().at(x), t.inner().at(x + 1)) + 1;
        int hi = std::min(t.outer().at(x), t.outer().at(x + 1));
        for (int y = lo; y <= hi; ++y)
            if (t.at(Point{x, y}) >= t.at(Point{x + 1, y}))
                throw Error(Errc::ColumnNotStrictlyIncreasing, {}, x, y);
    }
}

}  // namespace detail

inline CylTableau tableau_validate(const SkewShape& shape, std::vector<std::vector<int>> rows) {
    require_same_params(shape.outer, shape.inner);
    if (!partition_contains(shape.inner, shape.outer))
        throw Error(Errc::PreconditionViolated, "inner not contained in outer");
    if (static_cast<int>(rows.size()) != shape.k()) throw Error(Errc::RowLengthMismatch, "row count");
    for (int r = 0; r < shape.k(); ++r)
        if (static_cast<int>(rows[r].size()) != shape.row_length(r))
            throw Error(Errc::RowLengthMismatch, {}, r, 0);
    CylTableau t{shape, std::move(rows)};
    detail::check_semistandard(t);
    return t;
}

inline CylTableau empty_tableau(const CylPartition& lam) {
    return {{lam, lam}, std::vector<std::vector<int>>(lam.k())};
}

inline Weight weight(const CylTableau& t) {
    Weight w;
    for (const auto& row : t.rows)
        for (int a : row) ++w[a];
    return w;
}

// Weight as the sequence (wt(1), wt(2), ..., wt(max)).
inline std::vector<int> weight_vector(const CylTableau& t) {
    Weight w = weight(t);
    std::vector<int> v(w.empty() ? 0 : std::max(0, w.rbegin()->first), 0);
    for (auto [a, c] : w)
        if (a >= 1) v[a - 1] = c;
    return v;
}

inline Monomial weight_monomial(const CylTableau& t) { return weight(t); }

inline bool is_standard(const CylTableau& t) {
    Weight w = weight(t);
    int m = t.size();
    if (static_cast<int>(w.size()) != m) return false;
    int expect = 1;
    for (auto [a, c] : w) {
        if (a != expect || c != 1) return false;
        ++expect;
    }
    return true;
}

inline int max_letter(const CylTableau& t) {
    int m = 0;
    for (const auto& row : t.rows)
        for (int a : row) m = std::max(m, a);
    return m;
}

// Rotation by 180 degrees plus the order reversal a -> bound+1-a.
inline CylTableau flip_tableau(const CylTableau& t, int alphabet_bound) {
    if (alphabet_bound < max_letter(t))
        throw Error(Errc::PreconditionViolated, "alphabet bound below largest entry");
    const CylParams prm = t.params();
    CylTableau out;
    out.shape = {flip_partition(t.inner()), flip_partition(t.outer())};
    out.rows.assign(t.k(), {});
    for (int r = 0; r < t.k(); ++r) out.rows[r].assign(out.shape.row_length(r), 0);
    for (const Box& b : skew_boxes(t.shape)) {
        Box f = flip_box(b, prm);
        out.rows[f.row][f.col - out.inner().window[f.row] - 1] = alphabet_bound + 1 - t.at(b);
    }
    return out;
}

// Reading order: plane row k (the repeated row 0), then k-1, ..., 1.
inline Word tableau_word(const CylTableau& t) {
    Word w;
    w.insert(w.end(), t.rows[0].begin(), t.rows[0].end());
    for (int r = t.k() - 1; r >= 1; --r) w.insert(w.end(), t.rows[r].begin(), t.rows[r].end());
    return w;
}

}  // namespace cyltab
