#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "polynomial.hpp"
#include "tableau.hpp"

namespace cyltab {

// ---------------------------------------------------------------------------
// Partitions between two shapes

namespace detail {

// Lexicographic DFS over windows w with lo_i <= w_i <= hi_i and sum(w - base) == budget.
inline void windows_dfs(const std::vector<int>& lo, const std::vector<int>& hi, const std::vector<int>& base,
                        int budget, CylParams prm, std::vector<int>& cur, std::vector<CylPartition>& out) {
    std::size_t i = cur.size();
    if (i == lo.size()) {
        if (budget == 0 && window_is_valid(cur, prm)) out.push_back({prm, cur});
        return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
        int used = std::abs(v - base[i]);
        if (used > budget) continue;
        cur.push_back(v);
        windows_dfs(lo, hi, base, budget - used, prm, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All mu inside both alpha and beta with |alpha/mu| = m.
inline std::vector<CylPartition> enumerate_inner(const CylPartition& alpha, const CylPartition& beta, int m) {
    require_same_params(alpha, beta);
    std::vector<CylPartition> out;
    if (m < 0) return out;
    const int k = alpha.k();
    std::vector<int> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        lo[i] = alpha.window[i] - m;
        hi[i] = std::min(alpha.window[i], beta.window[i]);
    }
    std::vector<int> cur;
    detail::windows_dfs(lo, hi, alpha.window, m, alpha.params, cur, out);
    return out;
}

// All lambda containing both alpha and beta with |lambda/beta| = m.
inline std::vector<CylPartition> enumerate_outer(const CylPartition& alpha, const CylPartition& beta, int m) {
    require_same_params(alpha, beta);
    std::vector<CylPartition> out;
    if (m < 0) return out;
    const int k = alpha.k();
    std::vector<int> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        lo[i] = std::max(alpha.window[i], beta.window[i]);
        hi[i] = beta.window[i] + m;
    }
    std::vector<int> cur;
    detail::windows_dfs(lo, hi, beta.window, m, alpha.params, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// Fillings

namespace detail {

// Cells in fill order; each cell lists bounds relative to earlier cells.
struct FillProblem {
    int ncells = 0;
    std::vector<std::vector<std::pair<int, int>>> lower;  // (j, s): e_i >= e_j + s
    std::vector<std::vector<std::pair<int, int>>> upper;  // (j, s): e_i <= e_j - s
    bool infeasible = false;

    explicit FillProblem(int n = 0) : ncells(n), lower(n), upper(n) {}

    // e_a + strict <= e_b
    void relate(int a, int b, int strict) {
        if (a < b) lower[b].push_back({a, strict});
        else if (a > b) upper[a].push_back({b, strict});
        else if (strict) infeasible = true;
    }
};

template <class Fn>
void fill_dfs(const FillProblem& p, int letters, std::vector<int>& e, int i, Fn& fn) {
    if (i == p.ncells) {
        fn(e);
        return;
    }
    int lo = 1, hi = letters;
    for (auto [j, s] : p.lower[i]) lo = std::max(lo, e[j] + s);
    for (auto [j, s] : p.upper[i]) hi = std::min(hi, e[j] - s);
    for (int v = lo; v <= hi; ++v) {
        e[i] = v;
        fill_dfs(p, letters, e, i + 1, fn);
    }
}

template <class Fn>
void for_each_fill(const FillProblem& p, int letters, Fn&& fn) {
    if (p.infeasible) return;
    std::vector<int> e(p.ncells, 0);
    fill_dfs(p, letters, e, 0, fn);
}

// Linear extensions of the cover relations, by subset DP.
inline std::uint64_t count_linear_extensions(const FillProblem& p) {
    if (p.infeasible) return 0;
    const int m = p.ncells;
    if (m > 26) throw Error(Errc::PreconditionViolated, "shape too large for standard count");
    std::vector<std::uint32_t> pred(m, 0), succ(m, 0);
    for (int i = 0; i < m; ++i) {
        for (auto [j, s] : p.lower[i]) pred[i] |= 1u << j;
        for (auto [j, s] : p.upper[i]) pred[j] |= 1u << i;
    }
    std::vector<std::uint64_t> dp(std::size_t(1) << m, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!dp[mask]) continue;
        for (int i = 0; i < m; ++i)
            if (!(mask >> i & 1) && (pred[i] & mask) == pred[i]) dp[mask | (1u << i)] += dp[mask];
    }
    return dp.back();
}

inline FillProblem cylinder_problem(const SkewShape& shape, std::vector<Box>& cells) {
    cells = skew_boxes(shape);
    std::map<Box, int> index;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) index[cells[i]] = i;
    FillProblem p(static_cast<int>(cells.size()));
    const CylParams prm = shape.params();
    for (int i = 0; i < p.ncells; ++i) {
        const Box b = cells[i];
        if (auto it = index.find({b.row, b.col + 1}); it != index.end()) p.relate(i, it->second, 0);
        if (auto it = index.find(project({b.row + 1, b.col}, prm)); it != index.end()) p.relate(i, it->second, 1);
    }
    return p;
}

inline Polynomial fills_to_poly(const FillProblem& p, int num_vars) {
    Polynomial out(num_vars);
    if (p.ncells == 0) return Polynomial::one(num_vars);
    std::vector<int> ex(num_vars, 0);
    for_each_fill(p, num_vars, [&](const std::vector<int>& e) {
        std::fill(ex.begin(), ex.end(), 0);
        for (int v : e) ++ex[v - 1];
        out.add_term(ex, 1);
    });
    return out;
}

}  // namespace detail

template <class Fn>
void for_each_ssct(const SkewShape& shape, int num_letters, Fn&& fn) {
    std::vector<Box> cells;
    auto p = detail::cylinder_problem(shape, cells);
    CylTableau t{shape, std::vector<std::vector<int>>(shape.k())};
    for (int r = 0; r < shape.k(); ++r) t.rows[r].assign(shape.row_length(r), 0);
    detail::for_each_fill(p, num_letters, [&](const std::vector<int>& e) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            t.rows[cells[i].row][cells[i].col - shape.inner.window[cells[i].row] - 1] = e[i];
        fn(static_cast<const CylTableau&>(t));
    });
}

inline std::vector<CylTableau> enumerate_ssct(const SkewShape& shape, int num_letters) {
    std::vector<CylTableau> out;
    for_each_ssct(shape, num_letters, [&](const CylTableau& t) { out.push_back(t); });
    return out;
}

inline BigInt count_standard(const SkewShape& shape) {
    std::vector<Box> cells;
    return BigInt(detail::count_linear_extensions(detail::cylinder_problem(shape, cells)));
}

inline Polynomial schur_poly(const SkewShape& shape, int num_vars) {
    std::vector<Box> cells;
    return detail::fills_to_poly(detail::cylinder_problem(shape, cells), num_vars);
}

// ---------------------------------------------------------------------------
// Identity reports

struct Mismatch {
    std::vector<int> exponents;
    BigInt lhs;
    BigInt rhs;
};

struct IdentityReport {
    Polynomial lhs;
    Polynomial rhs;
    bool equal = true;
    std::vector<Mismatch> mismatches;
    std::vector<std::pair<std::string, bool>> cross_checks;  // only filled by the skew reduction
};

namespace detail {

inline std::vector<Mismatch> compare(const Polynomial& a, const Polynomial& b) {
    std::vector<Mismatch> out;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            out.push_back({ia->first, ia->second, 0});
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            out.push_back({ib->first, 0, ib->second});
            ++ib;
        } else {
            if (ia->second != ib->second) out.push_back({ia->first, ia->second, ib->second});
            ++ia;
            ++ib;
        }
    }
    return out;
}

inline IdentityReport make_report(Polynomial lhs, Polynomial rhs) {
    IdentityReport r{std::move(lhs), std::move(rhs), true, {}, {}};
    r.mismatches = compare(r.lhs, r.rhs);
    r.equal = r.mismatches.empty();
    return r;
}

struct ProductJob {
    SkewShape x;
    SkewShape y;
};

inline Polynomial sum_products(const std::vector<ProductJob>& jobs, int nx, int ny, int total_cap) {
    auto parts = parallel_map<Polynomial>(jobs.size(), [&](std::size_t i) {
        Polynomial px = schur_poly(jobs[i].x, nx).embed(nx + ny, 0);
        Polynomial py = schur_poly(jobs[i].y, ny).embed(nx + ny, nx);
        Polynomial prod = px * py;
        return total_cap >= 0 ? prod.truncated_total_degree(total_cap) : prod;
    });
    Polynomial out(nx + ny);
    for (const auto& p : parts) out += p;
    return out;
}

// Both sides of the cylindric Cauchy sum; a nonnegative total_cap drops
// terms of larger total degree and skips shape pairs that cannot reach it.
inline std::pair<Polynomial, Polynomial> cauchy_sides(const CylPartition& alpha, const CylPartition& beta,
                                                      int max_degree, int nx, int ny, int total_cap) {
    require_same_params(alpha, beta);
    std::vector<ProductJob> left, right;
    for (int j = 0; j <= max_degree; ++j) {
        for (const auto& mu : enumerate_inner(alpha, beta, j)) {
            if (total_cap >= 0 && j + beta.size_over(mu) > total_cap) continue;
            left.push_back({{alpha, mu}, {beta, mu}});
        }
        for (const auto& lam : enumerate_outer(alpha, beta, j)) {
            if (total_cap >= 0 && j + lam.size_over(alpha) > total_cap) continue;
            right.push_back({{lam, beta}, {lam, alpha}});
        }
    }
    return {sum_products(left, nx, ny, total_cap), sum_products(right, nx, ny, total_cap)};
}

}  // namespace detail

// Terms of x-degree <= max_degree; x variables first, then y.
inline IdentityReport verify_cauchy(const CylPartition& alpha, const CylPartition& beta, int max_degree, int num_vars_x,
                                    int num_vars_y) {
    auto [l, r] = detail::cauchy_sides(alpha, beta, max_degree, num_vars_x, num_vars_y, -1);
    return detail::make_report(std::move(l), std::move(r));
}

inline std::pair<BigInt, BigInt> verify_fcount(const CylPartition& alpha, const CylPartition& beta, int m) {
    require_same_params(alpha, beta);
    BigInt lhs = 0, rhs = 0;
    for (const auto& mu : enumerate_inner(alpha, beta, m))
        lhs += count_standard({alpha, mu}) * count_standard({beta, mu});
    for (const auto& lam : enumerate_outer(alpha, beta, m))
        rhs += count_standard({lam, alpha}) * count_standard({lam, beta});
    return {lhs, rhs};
}

inline IdentityReport verify_oneschur(const CylPartition& alpha, int max_degree, int num_vars) {
    std::vector<SkewShape> left, right;
    for (int j = 0; j <= max_degree; ++j) {
        for (const auto& mu : enumerate_inner(alpha, alpha, j)) left.push_back({alpha, mu});
        for (const auto& lam : enumerate_outer(alpha, alpha, j)) right.push_back({lam, alpha});
    }
    auto sum = [&](const std::vector<SkewShape>& shapes) {
        auto parts = parallel_map<Polynomial>(shapes.size(), [&](std::size_t i) { return schur_poly(shapes[i], num_vars); });
        Polynomial out(num_vars);
        for (const auto& p : parts) out += p;
        return out;
    };
    return detail::make_report(sum(left), sum(right));
}

// ---------------------------------------------------------------------------
// Ordinary partitions

using RegularPartition = std::vector<int>;

inline RegularPartition normalize_partition(RegularPartition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || (i + 1 < p.size() && p[i] < p[i + 1]))
            throw Error(Errc::PreconditionViolated, "not a partition");
    }
    return p;
}

inline int partition_size(const RegularPartition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int part(const RegularPartition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

inline bool partition_contains(const RegularPartition& inner, const RegularPartition& outer) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > part(outer, i)) return false;
    return true;
}

// Partitions of `size` in reverse lexicographic order.
inline std::vector<RegularPartition> partitions_of(int size) {
    std::vector<RegularPartition> out;
    RegularPartition cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(size, size);
    return out;
}

inline Polynomial regular_skew_schur(const RegularPartition& outer_in, const RegularPartition& inner_in, int num_vars) {
    RegularPartition outer = normalize_partition(outer_in), inner = normalize_partition(inner_in);
    if (!partition_contains(inner, outer)) throw Error(Errc::PreconditionViolated, "inner not contained in outer");
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (int c = part(inner, i) + 1; c <= outer[i]; ++c) {
            int id = static_cast<int>(index.size());
            index[{static_cast<int>(i), c}] = id;
        }
    detail::FillProblem p(static_cast<int>(index.size()));
    for (auto [cell, id] : index) {
        auto [i, c] = cell;
        if (auto it = index.find({i, c + 1}); it != index.end()) p.relate(id, it->second, 0);
        if (auto it = index.find({i + 1, c}); it != index.end()) p.relate(id, it->second, 1);
    }
    return detail::fills_to_poly(p, num_vars);
}

// Regular-partition identity up to total degree max_degree, cross-checked
// against the cylindric Cauchy sums on a cylinder large enough for that degree.
inline IdentityReport verify_skew_reduction(const RegularPartition& alpha_in, const RegularPartition& beta_in,
                                            int max_degree, int num_vars) {
    const RegularPartition alpha = normalize_partition(alpha_in), beta = normalize_partition(beta_in);
    const int d = max_degree, v = num_vars, arity = 2 * v;
    const int sa = partition_size(alpha), sb = partition_size(beta);
    auto pair_poly = [&](const RegularPartition& ox, const RegularPartition& ix, const RegularPartition& oy,
                         const RegularPartition& iy) {
        return regular_skew_schur(ox, ix, v).embed(arity, 0) * regular_skew_schur(oy, iy, v).embed(arity, v);
    };

    Polynomial mu_sum(arity);
    for (int s = 0; s <= std::min(sa, sb); ++s)
        for (const auto& mu : partitions_of(s))
            if (partition_contains(mu, alpha) && partition_contains(mu, beta) && (sa - s) + (sb - s) <= d)
                mu_sum += pair_poly(alpha, mu, beta, mu);
    Polynomial gamma_sum(arity);
    for (int s = 0; 2 * s <= d; ++s)
        for (const auto& g : partitions_of(s)) gamma_sum += pair_poly(g, {}, g, {});
    Polynomial lhs = (mu_sum * gamma_sum).truncated_total_degree(d);

    Polynomial rhs(arity);
    for (int s = std::max(sa, sb); (s - sa) + (s - sb) <= d; ++s)
        for (const auto& lam : partitions_of(s))
            if (partition_contains(alpha, lam) && partition_contains(beta, lam))
                rhs += pair_poly(lam, beta, lam, alpha);

    IdentityReport rep = detail::make_report(lhs, rhs);

    const int k = static_cast<int>(std::max(alpha.size(), beta.size())) + 2 * d + 1;
    const int n = k + std::max(part(alpha, 0), part(beta, 0)) + 2 * d + 1;
    const CylParams prm = make_params(k, n);
    auto [cl, cr] = detail::cauchy_sides(cyl_embed(alpha, prm), cyl_embed(beta, prm), d, v, v, d);
    auto lhs_diff = detail::compare(lhs, cl), rhs_diff = detail::compare(rhs, cr);
    rep.cross_checks = {{"cylinder_lhs", lhs_diff.empty()}, {"cylinder_rhs", rhs_diff.empty()}};
    rep.mismatches.insert(rep.mismatches.end(), lhs_diff.begin(), lhs_diff.end());
    rep.mismatches.insert(rep.mismatches.end(), rhs_diff.begin(), rhs_diff.end());
    rep.equal = rep.mismatches.empty();
    return rep;
}

}  // namespace cyltab
