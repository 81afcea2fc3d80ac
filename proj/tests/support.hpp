#pragma once

// Builders for the tables used in tests, plus brute-force oracles that share
// no code with the library beyond the data types and the validator.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "cyltab/crsk.hpp"
#include "cyltab/enumeration.hpp"

namespace testing_support {

using namespace cyltab;

inline CylPartition part(int k, int n, std::vector<int> w) { return partition_validate(w, make_params(k, n)); }

inline CylTableau tab(int k, int n, std::vector<int> inner, std::vector<int> outer, std::vector<std::vector<int>> rows) {
    auto prm = make_params(k, n);
    return tableau_validate({partition_validate(outer, prm), partition_validate(inner, prm)}, std::move(rows));
}

// Rows given as (inner, entries); the outer shape follows from the row lengths.
inline CylTableau tab_rows(int k, int n, std::vector<std::pair<int, std::vector<int>>> rows) {
    std::vector<int> inner, outer;
    std::vector<std::vector<int>> entries;
    for (auto& [mu, e] : rows) {
        inner.push_back(mu);
        outer.push_back(mu + static_cast<int>(e.size()));
        entries.push_back(e);
    }
    return tab(k, n, inner, outer, entries);
}

// Canonical representative by walking the shift orbit one step at a time.
inline Box orbit_project(Point p, int k, int n) {
    while (p.x < 0) p = {p.x + k, p.y - (n - k)};
    while (p.x >= k) p = {p.x - k, p.y + (n - k)};
    return {p.x, p.y};
}

// All normalized windows (first entry 0) for the given parameters.
inline std::vector<CylPartition> normalized_windows(int k, int n) {
    std::vector<CylPartition> out;
    const int period = n - k;
    std::vector<int> w(k, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            out.push_back({make_params(k, n), w});
            return;
        }
        for (int v = w[i - 1]; v >= -period; --v) {
            w[i] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

// Every window with lo <= entries <= hi that is a valid partition.
inline std::vector<CylPartition> windows_in_box(int k, int n, int lo, int hi) {
    std::vector<CylPartition> out;
    const auto prm = make_params(k, n);
    std::vector<int> w(k, lo);
    for (;;) {
        if (window_is_valid(w, prm)) out.push_back({prm, w});
        int i = k - 1;
        while (i >= 0 && w[i] == hi) w[i--] = lo;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

// Outer shapes containing mu with at most `max_boxes` extra boxes.
inline std::vector<CylPartition> outers_within(const CylPartition& mu, int max_boxes) {
    std::vector<CylPartition> out;
    const int k = mu.k();
    std::vector<int> w = mu.window;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            if (window_is_valid(w, mu.params)) out.push_back({mu.params, w});
            return;
        }
        for (int add = 0; add <= left; ++add) {
            w[i] = mu.window[i] + add;
            rec(i + 1, left - add);
        }
        w[i] = mu.window[i];
    };
    rec(0, max_boxes);
    return out;
}

// Every filling over {1..letters} kept by the validator.
inline std::vector<CylTableau> brute_ssct(const SkewShape& shape, int letters) {
    std::vector<CylTableau> out;
    std::vector<int> lens;
    int total = 0;
    for (int r = 0; r < shape.k(); ++r) lens.push_back(shape.row_length(r)), total += lens.back();
    std::vector<int> flat(total, 1);
    for (;;) {
        std::vector<std::vector<int>> rows;
        int pos = 0;
        for (int len : lens) {
            rows.emplace_back(flat.begin() + pos, flat.begin() + pos + len);
            pos += len;
        }
        try {
            out.push_back(tableau_validate(shape, rows));
        } catch (const Error&) {
        }
        int i = total - 1;
        while (i >= 0 && flat[i] == letters) flat[i--] = 1;
        if (i < 0) break;
        ++flat[i];
    }
    if (letters < 1 && total > 0) out.clear();
    return out;
}

inline long brute_standard_count(const SkewShape& shape) {
    const int m = shape.size();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    long count = 0;
    do {
        std::vector<std::vector<int>> rows;
        int pos = 0;
        for (int r = 0; r < shape.k(); ++r) {
            rows.emplace_back(perm.begin() + pos, perm.begin() + pos + shape.row_length(r));
            pos += shape.row_length(r);
        }
        try {
            tableau_validate(shape, rows);
            ++count;
        } catch (const Error&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline Polynomial brute_schur(const SkewShape& shape, int vars) {
    Polynomial p(vars);
    for (const auto& t : brute_ssct(shape, vars)) {
        std::vector<int> e(vars, 0);
        for (const auto& row : t.rows)
            for (int a : row) ++e[a - 1];
        p.add_term(e, 1);
    }
    if (shape.size() == 0) p = Polynomial::one(vars);
    return p;
}

// Partitions between the two shapes by filtering a full window box.
inline std::vector<CylPartition> brute_inner(const CylPartition& a, const CylPartition& b, int m) {
    std::vector<CylPartition> out;
    const int k = a.k();
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = a.window[i] - m;
    for (;;) {
        CylPartition mu{a.params, w};
        if (window_is_valid(w, a.params) && partition_contains(mu, a) && partition_contains(mu, b) && a.size_over(mu) == m)
            out.push_back(mu);
        int i = k - 1;
        while (i >= 0 && w[i] == a.window[i]) w[i] = a.window[i] - m, --i;
        if (i < 0) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<CylPartition> brute_outer(const CylPartition& a, const CylPartition& b, int m) {
    std::vector<CylPartition> out;
    const int k = a.k();
    std::vector<int> w = b.window;
    for (;;) {
        CylPartition lam{a.params, w};
        if (window_is_valid(w, a.params) && partition_contains(a, lam) && partition_contains(b, lam) && lam.size_over(b) == m)
            out.push_back(lam);
        int i = k - 1;
        while (i >= 0 && w[i] == b.window[i] + m) w[i] = b.window[i], --i;
        if (i < 0) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Cauchy sides by brute force, x-degree at most `degree`.
inline std::pair<Polynomial, Polynomial> brute_cauchy(const CylPartition& a, const CylPartition& b, int degree, int nx, int ny) {
    Polynomial l(nx + ny), r(nx + ny);
    for (int j = 0; j <= degree; ++j) {
        for (const auto& mu : brute_inner(a, b, j))
            l += brute_schur({a, mu}, nx).embed(nx + ny, 0) * brute_schur({b, mu}, ny).embed(nx + ny, nx);
        for (const auto& lam : brute_outer(a, b, j))
            r += brute_schur({lam, b}, nx).embed(nx + ny, 0) * brute_schur({lam, a}, ny).embed(nx + ny, nx);
    }
    return {l, r};
}

// Ordinary semistandard fillings by filtering all fillings.
inline Polynomial brute_regular_schur(const std::vector<int>& outer, const std::vector<int>& inner, int vars) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (int c = (i < inner.size() ? inner[i] : 0) + 1; c <= outer[i]; ++c) cells.push_back({static_cast<int>(i), c});
    Polynomial p(vars);
    if (cells.empty()) return Polynomial::one(vars);
    std::vector<int> e(cells.size(), 1);
    auto at = [&](int i, int c) {
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (cells[j] == std::pair{i, c}) return static_cast<int>(j);
        return -1;
    };
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < cells.size() && ok; ++j) {
            auto [i, c] = cells[j];
            int right = at(i, c + 1), below = at(i + 1, c);
            if (right >= 0 && e[j] > e[right]) ok = false;
            if (below >= 0 && e[j] >= e[below]) ok = false;
        }
        if (ok) {
            std::vector<int> ex(vars, 0);
            for (int v : e) ++ex[v - 1];
            p.add_term(ex, 1);
        }
        int i = static_cast<int>(e.size()) - 1;
        while (i >= 0 && e[i] == vars) e[i--] = 1;
        if (i < 0) break;
        ++e[i];
    }
    return p;
}

}  // namespace testing_support
