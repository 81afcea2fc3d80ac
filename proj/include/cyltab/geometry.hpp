#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <vector>

#include "error.hpp"

namespace cyltab {

// Floor division and non-negative remainder for possibly negative numerators.
inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

struct CylParams {
    int k = 1;
    int n = 2;

    int period() const { return n - k; }
    bool operator==(const CylParams&) const = default;
};

inline CylParams make_params(int k, int n) {
    if (k < 1 || n <= k) throw Error(Errc::BadParams, "need 1 <= k < n");
    return {k, n};
}

// A point of the integer plane: x is the plane row (downward), y the column.
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

// Canonical box: row in [0,k), column unbounded.
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

inline Box project(Point p, CylParams prm) {
    int m = floor_div(p.x, prm.k);
    return {p.x - m * prm.k, p.y + m * prm.period()};
}

inline Point lift(Box b, int plane_row, CylParams prm) {
    int d = b.row - plane_row;
    if (floor_mod(d, prm.k) != 0)
        throw Error(Errc::PreconditionViolated, "plane row not congruent to box row mod k");
    int m = d / prm.k;
    return {plane_row, b.col + m * prm.period()};
}

// One window of a cylindric partition; every other value is derived.
struct CylPartition {
    CylParams params;
    std::vector<int> window;

    int k() const { return params.k; }
    int at(int m) const {
        return window[floor_mod(m, params.k)] - floor_div(m, params.k) * params.period();
    }
    bool contains(Point p) const { return p.y <= at(p.x); }
    bool contains(Box b) const { return b.col <= window[b.row]; }
    int size_over(const CylPartition& inner) const {
        int s = 0;
        for (int i = 0; i < k(); ++i) s += window[i] - inner.window[i];
        return s;
    }
    bool operator==(const CylPartition&) const = default;
    auto operator<=>(const CylPartition& o) const { return window <=> o.window; }
};

// Shared check for windows that may come from intermediate states.
inline bool window_is_valid(const std::vector<int>& w, CylParams prm) {
    if (static_cast<int>(w.size()) != prm.k) return false;
    for (int i = 0; i + 1 < prm.k; ++i)
        if (w[i] < w[i + 1]) return false;
    return w[prm.k - 1] >= w[0] - prm.period();
}

inline CylPartition partition_validate(const std::vector<int>& window, CylParams prm) {
    if (static_cast<int>(window.size()) != prm.k)
        throw Error(Errc::SchemaError, "window length must equal k");
    for (int i = 0; i + 1 < prm.k; ++i)
        if (window[i] < window[i + 1]) throw Error(Errc::WindowNotDecreasing, {}, -1, 0, i);
    if (window[prm.k - 1] < window[0] - prm.period()) throw Error(Errc::WrapViolated);
    return {prm, window};
}

inline void require_same_params(const CylPartition& a, const CylPartition& b) {
    if (!(a.params == b.params)) throw Error(Errc::ParamsMismatch);
}

inline bool partition_contains(const CylPartition& mu, const CylPartition& lam) {
    require_same_params(mu, lam);
    for (int i = 0; i < mu.k(); ++i)
        if (mu.window[i] > lam.window[i]) return false;
    return true;
}

struct SkewShape {
    CylPartition outer;
    CylPartition inner;

    CylParams params() const { return outer.params; }
    int k() const { return outer.k(); }
    int row_length(int r) const { return outer.window[r] - inner.window[r]; }
    int size() const { return outer.size_over(inner); }
    bool contains(Point p) const { return outer.contains(p) && !inner.contains(p); }
    bool contains(Box b) const { return outer.contains(b) && !inner.contains(b); }
    bool operator==(const SkewShape&) const = default;
};

inline SkewShape make_shape(const CylPartition& outer, const CylPartition& inner) {
    if (!partition_contains(inner, outer))
        throw Error(Errc::PreconditionViolated, "inner not contained in outer");
    return {outer, inner};
}

// Boxes in row-major order (row ascending, column ascending).
inline std::vector<Box> skew_boxes(const SkewShape& s) {
    std::vector<Box> out;
    for (int r = 0; r < s.k(); ++r)
        for (int c = s.inner.window[r] + 1; c <= s.outer.window[r]; ++c) out.push_back({r, c});
    return out;
}

inline bool is_horizontal_strip(const SkewShape& s) {
    const int k = s.k();
    for (int i = 0; i < k; ++i) {
        if (s.outer.at(i) < s.inner.at(i)) return false;
        if (s.inner.at(i) < s.outer.at(i + 1)) return false;
    }
    return true;
}

inline CylPartition flip_partition(const CylPartition& lam) {
    CylPartition out{lam.params, std::vector<int>(lam.k())};
    for (int m = 0; m < lam.k(); ++m) out.window[m] = -1 - lam.at(-m);
    return out;
}

inline Box flip_box(Box b, CylParams prm) { return project({-b.row, -b.col}, prm); }

inline CylPartition cyl_embed(const std::vector<int>& parts, CylParams prm) {
    if (static_cast<int>(parts.size()) > prm.k) throw Error(Errc::TooManyParts);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1] || parts[i + 1] < 0)
            throw Error(Errc::PreconditionViolated, "regular partition must be weakly decreasing and nonnegative");
    if (!parts.empty() && parts.back() < 0)
        throw Error(Errc::PreconditionViolated, "regular partition must be nonnegative");
    if (!parts.empty() && parts.front() > prm.period()) throw Error(Errc::PartTooWide);
    std::vector<int> w(prm.k, 0);
    std::copy(parts.begin(), parts.end(), w.begin());
    return {prm, w};
}

}  // namespace cyltab
