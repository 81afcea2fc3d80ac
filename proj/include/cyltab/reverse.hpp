#pragma once

#include "insertion.hpp"

namespace cyltab {

struct ReverseMultiResult {
    CylTableau tableau;
    std::vector<Box> reverse_new_set;
    std::vector<BumpingRoute> routes;
    InsertionLog log;
};

inline std::pair<MultiState, InsertionQueue> reverse_one_step_multi(MultiState st, const InsertionQueue& q) {
    return detail::one_step(std::move(st), q, true);
}

inline ReverseMultiResult reverse_full_multi(const CylTableau& t, const std::vector<Box>& s_in, MultiOptions opt = {}) {
    const CylParams prm = t.params();
    const int k = prm.k;
    std::vector<Box> s = detail::canonical_boxes(s_in, prm);
    detail::check_reverse_set(t, s);

    detail::Run run(to_state(t), true);
    std::vector<detail::Tagged> q;
    for (int h = opt.seed_row; h > opt.seed_row - k; --h) {
        int r = detail::canon_row(h, k);
        for (const Box& b : detail::row_boxes(s, r, false)) {
            ++run.clock;
            int id = static_cast<int>(run.routes.size());
            run.routes.push_back({b, {}, {}});
            run.note_point(id, lift(b, h, prm));
            auto& st = run.st;
            if (b.col > st.inner[r]) {
                int x = st.rows[r].back();
                st.rows[r].pop_back();
                --st.outer[r];
                run.log.bumped[r].push_back(x);
                q.push_back({x, detail::canon_row(h - 1, k), h - 1, id});
            } else {
                --st.inner[r];
                --st.outer[r];
            }
        }
    }
    while (!q.empty()) {
        run.snapshot(q);
        q = detail::reverse_pass(run, q);
    }
    ReverseMultiResult res{to_tableau(run.st), {}, std::move(run.routes), std::move(run.log)};
    for (int r = 0; r < k; ++r)
        for (int c = res.tableau.inner().window[r] + 1; c <= t.inner().window[r]; ++c)
            res.reverse_new_set.push_back({r, c});
    return res;
}

// Reverse row-insertion of one outside corner, following the chain directly.
inline std::pair<CylTableau, BumpingRoute> reverse_insert(const CylTableau& t, Box b_in) {
    const CylParams prm = t.params();
    const int k = prm.k;
    Box b = project({b_in.row, b_in.col}, prm);
    const int r0 = b.row;
    bool corner = b.col == t.outer().window[r0] && b.col > t.outer().at(r0 + 1);
    if (!corner) throw Error(Errc::NotOutsideCorner, {}, b.row, b.col);

    MultiState st = to_state(t);
    BumpingRoute route{b, {lift(b, r0, prm)}, {0}};
    if (b.col <= st.inner[r0]) {
        --st.inner[r0];
        --st.outer[r0];
        return {to_tableau(st), route};
    }
    int x = st.rows[r0].back();
    st.rows[r0].pop_back();
    --st.outer[r0];
    long clock = 0;
    for (int h = r0 - 1;; --h) {
        int r = detail::canon_row(h, k);
        auto& row = st.rows[r];
        int idx = -1;
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
            if (row[j] < x) { idx = j; break; }
        ++clock;
        if (idx < 0) {
            row.insert(row.begin(), x);
            route.points.push_back(lift({r, st.inner[r]--}, h, prm));
            route.times.push_back(clock);
            break;
        }
        route.points.push_back(lift({r, st.inner[r] + 1 + idx}, h, prm));
        route.times.push_back(clock);
        std::swap(x, row[idx]);
    }
    return {to_tableau(st), route};
}

// Flip of a (tableau, box set) pair.
inline std::pair<CylTableau, std::vector<Box>> flip_pair(const CylTableau& t, const std::vector<Box>& s, int bound) {
    std::vector<Box> fs;
    for (const Box& b : s) fs.push_back(flip_box(b, t.params()));
    std::sort(fs.begin(), fs.end());
    return {flip_tableau(t, bound), fs};
}

}  // namespace cyltab
