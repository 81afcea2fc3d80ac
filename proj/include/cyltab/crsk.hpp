#pragma once

#include <set>

#include "reverse.hpp"

namespace cyltab {

struct CrskInput {
    CylTableau t;
    CylTableau u;
    CylPartition mu;
    bool operator==(const CrskInput&) const = default;
};

struct CrskOutput {
    CylTableau p;
    CylTableau q;
    CylPartition lambda;
    bool operator==(const CrskOutput&) const = default;
};

namespace detail {

inline std::set<int> letters_of(const CylTableau& t) {
    std::set<int> out;
    for (const auto& row : t.rows) out.insert(row.begin(), row.end());
    return out;
}

inline std::vector<Box> boxes_with(const CylTableau& t, int letter) {
    std::vector<Box> out;
    for (const Box& b : skew_boxes(t.shape))
        if (t.at(b) == letter) out.push_back(b);
    return out;
}

}  // namespace detail

inline CrskOutput crsk(const CylTableau& t, const CylTableau& u) {
    if (!(t.params() == u.params()) || !(t.inner() == u.inner())) throw Error(Errc::MismatchedInnerShapes);
    CylTableau p = t;
    CylTableau q = empty_tableau(t.outer());  // alpha/alpha, alpha frozen here
    // An empty u skips the loop and returns (t, alpha/alpha, alpha).
    for (int i : detail::letters_of(u)) {
        auto res = full_multi(p, detail::boxes_with(u, i));
        for (const Box& b : res.new_set) q.rows[b.row].push_back(i);
        p = std::move(res.tableau);
        q.shape.outer = p.outer();
    }
    return {p, q, p.outer()};
}

inline CrskOutput crsk(const CrskInput& in) {
    if (!(in.t.inner() == in.mu)) throw Error(Errc::MismatchedInnerShapes);
    return crsk(in.t, in.u);
}

inline CrskInput crsk_inverse(const CylTableau& p, const CylTableau& q) {
    if (!(p.params() == q.params()) || !(p.outer() == q.outer())) throw Error(Errc::MismatchedOuterShapes);
    CylTableau t = p;
    CylTableau u = empty_tableau(p.inner());
    const auto letters = detail::letters_of(q);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        auto res = reverse_full_multi(t, detail::boxes_with(q, *it));
        for (const Box& b : res.reverse_new_set) u.rows[b.row].insert(u.rows[b.row].begin(), *it);
        t = std::move(res.tableau);
        u.shape.inner = t.inner();
    }
    return {t, u, t.inner()};
}

inline CrskInput crsk_inverse(const CrskOutput& out) {
    if (!(out.p.outer() == out.lambda)) throw Error(Errc::MismatchedOuterShapes);
    return crsk_inverse(out.p, out.q);
}

}  // namespace cyltab
