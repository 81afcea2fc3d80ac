#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tableau.hpp"

namespace cyltab {

// Queue element. `plane_row` is only carried on route-tracking runs.
struct QueueItem {
    int letter = 0;
    int row = 0;
    std::optional<int> plane_row;
    bool operator==(const QueueItem&) const = default;
};
using InsertionQueue = std::vector<QueueItem>;  // front = first out

// Tableau-like state whose shapes may be invalid partitions mid-algorithm.
struct MultiState {
    CylParams params;
    std::vector<int> inner;
    std::vector<int> outer;
    std::vector<std::vector<int>> rows;
    bool operator==(const MultiState&) const = default;
};

inline MultiState to_state(const CylTableau& t) {
    return {t.params(), t.inner().window, t.outer().window, t.rows};
}

inline CylTableau to_tableau(const MultiState& s) {
    SkewShape shape{partition_validate(s.outer, s.params), partition_validate(s.inner, s.params)};
    return tableau_validate(shape, s.rows);
}

struct BumpingRoute {
    Box source;                 // the box of the input set that started the route
    std::vector<Point> points;  // consecutive plane rows
    std::vector<long> times;    // event index at which each point joined the route
};

struct InsertionLog {
    std::vector<InsertionQueue> queues;       // q_0, q_1, ... (letter, canonical row)
    std::vector<std::vector<int>> bumped;     // per row, letters leaving the row in order
    std::vector<std::vector<int>> inserted;   // per row, letters entering the row in order
};

struct MultiInsertResult {
    CylTableau tableau;
    std::vector<Box> new_set;
    std::vector<BumpingRoute> routes;
    InsertionLog log;
};

struct MultiOptions {
    int seed_row = 0;
};

namespace detail {

struct Tagged {
    int letter;
    int row;
    int plane;
    int route;
};

struct Run {
    MultiState st;
    std::vector<BumpingRoute> routes;
    InsertionLog log;
    long clock = 0;
    bool track = true;

    explicit Run(MultiState s, bool tr) : st(std::move(s)), track(tr) {
        log.bumped.assign(st.params.k, {});
        log.inserted.assign(st.params.k, {});
    }

    void note_point(int route, Point p) {
        if (!track) return;
        routes[route].points.push_back(p);
        routes[route].times.push_back(clock);
    }
    void snapshot(const std::vector<Tagged>& q) {
        if (!track) return;
        InsertionQueue out;
        for (const auto& e : q) out.push_back({e.letter, e.row, std::nullopt});
        log.queues.push_back(std::move(out));
    }
};

inline int canon_row(int r, int k) { return floor_mod(r, k); }

// One forward pass over q; returns the next queue.
inline std::vector<Tagged> forward_pass(Run& run, const std::vector<Tagged>& q) {
    std::vector<Tagged> next;
    const int k = run.st.params.k;
    for (const Tagged& e : q) {
        ++run.clock;
        auto& row = run.st.rows[e.row];
        auto it = std::find_if(row.begin(), row.end(), [&](int v) { return v > e.letter; });
        int col;
        if (it == row.end()) {
            row.push_back(e.letter);
            col = ++run.st.outer[e.row];
        } else {
            int bumped = *it;
            *it = e.letter;
            col = run.st.inner[e.row] + 1 + static_cast<int>(it - row.begin());
            if (run.track) run.log.bumped[e.row].push_back(bumped);
            next.push_back({bumped, canon_row(e.row + 1, k), e.plane + 1, e.route});
        }
        if (run.track) run.log.inserted[e.row].push_back(e.letter);
        run.note_point(e.route, lift({e.row, col}, e.plane, run.st.params));
    }
    return next;
}

inline std::vector<Tagged> reverse_pass(Run& run, const std::vector<Tagged>& q) {
    std::vector<Tagged> next;
    const int k = run.st.params.k;
    for (const Tagged& e : q) {
        ++run.clock;
        auto& row = run.st.rows[e.row];
        int idx = -1;
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
            if (row[j] < e.letter) { idx = j; break; }
        int col;
        if (idx < 0) {
            row.insert(row.begin(), e.letter);
            col = run.st.inner[e.row]--;
        } else {
            int bumped = row[idx];
            row[idx] = e.letter;
            col = run.st.inner[e.row] + 1 + idx;
            if (run.track) run.log.bumped[e.row].push_back(bumped);
            next.push_back({bumped, canon_row(e.row - 1, k), e.plane - 1, e.route});
        }
        if (run.track) run.log.inserted[e.row].push_back(e.letter);
        run.note_point(e.route, lift({e.row, col}, e.plane, run.st.params));
    }
    return next;
}

inline std::vector<Box> canonical_boxes(const std::vector<Box>& s, CylParams prm) {
    std::vector<Box> out;
    for (const Box& b : s) out.push_back(project({b.row, b.col}, prm));
    return out;
}

// Per-row counts after checking the forward strip preconditions.
inline std::vector<int> check_forward_set(const CylTableau& t, const std::vector<Box>& s) {
    const int k = t.k();
    std::set<Box> seen;
    std::vector<int> cnt(k, 0);
    for (const Box& b : s) {
        if (!seen.insert(b).second) throw Error(Errc::PreconditionViolated, "duplicate box");
        if (b.col <= t.inner().window[b.row])
            throw Error(Errc::PreconditionViolated, "box lies in the inner shape");
        ++cnt[b.row];
    }
    for (const Box& b : s)
        if (b.col > t.inner().window[b.row] + cnt[b.row])
            throw Error(Errc::PreconditionViolated, "inner shape plus boxes is not a partition");
    std::vector<int> nu = t.inner().window;
    for (int r = 0; r < k; ++r) nu[r] += cnt[r];
    if (!window_is_valid(nu, t.params()))
        throw Error(Errc::PreconditionViolated, "inner shape plus boxes is not a partition");
    SkewShape strip{{t.params(), nu}, t.inner()};
    if (!is_horizontal_strip(strip)) throw Error(Errc::PreconditionViolated, "boxes do not form a horizontal strip");
    return cnt;
}

inline std::vector<int> check_reverse_set(const CylTableau& t, const std::vector<Box>& s) {
    const int k = t.k();
    std::set<Box> seen;
    std::vector<int> cnt(k, 0);
    for (const Box& b : s) {
        if (!seen.insert(b).second) throw Error(Errc::PreconditionViolated, "duplicate box");
        if (b.col > t.outer().window[b.row])
            throw Error(Errc::PreconditionViolated, "box lies outside the outer shape");
        ++cnt[b.row];
    }
    for (const Box& b : s)
        if (b.col <= t.outer().window[b.row] - cnt[b.row])
            throw Error(Errc::PreconditionViolated, "outer shape minus boxes is not a partition");
    std::vector<int> nu = t.outer().window;
    for (int r = 0; r < k; ++r) nu[r] -= cnt[r];
    if (!window_is_valid(nu, t.params()))
        throw Error(Errc::PreconditionViolated, "outer shape minus boxes is not a partition");
    SkewShape strip{t.outer(), {t.params(), nu}};
    if (!is_horizontal_strip(strip)) throw Error(Errc::PreconditionViolated, "boxes do not form a horizontal strip");
    return cnt;
}

inline std::vector<Box> row_boxes(const std::vector<Box>& s, int row, bool left_to_right) {
    std::vector<Box> out;
    for (const Box& b : s)
        if (b.row == row) out.push_back(b);
    std::sort(out.begin(), out.end());
    if (!left_to_right) std::reverse(out.begin(), out.end());
    return out;
}

inline void check_regular(const InsertionQueue& q, int k, bool reverse) {
    std::vector<std::optional<int>> last(k);
    for (const auto& e : q) {
        int r = canon_row(e.row, k);
        if (last[r] && (reverse ? e.letter > *last[r] : e.letter < *last[r]))
            throw Error(reverse ? Errc::QueueNotReverseRegular : Errc::QueueNotRegular);
        last[r] = e.letter;
    }
}

inline std::pair<MultiState, InsertionQueue> one_step(MultiState st, const InsertionQueue& q, bool reverse) {
    const int k = st.params.k;
    check_regular(q, k, reverse);
    Run run(std::move(st), false);
    // `route` holds the index of the originating item so plane tags can be kept.
    std::vector<Tagged> tq;
    for (std::size_t i = 0; i < q.size(); ++i) {
        int r = canon_row(q[i].row, k);
        tq.push_back({q[i].letter, r, q[i].plane_row.value_or(r), static_cast<int>(i)});
    }
    auto next = reverse ? reverse_pass(run, tq) : forward_pass(run, tq);
    InsertionQueue out;
    for (const auto& e : next) {
        std::optional<int> pr;
        if (q[e.route].plane_row) pr = e.plane;
        out.push_back({e.letter, e.row, pr});
    }
    return {std::move(run.st), std::move(out)};
}

}  // namespace detail

inline std::pair<MultiState, InsertionQueue> one_step_multi(MultiState st, const InsertionQueue& q) {
    return detail::one_step(std::move(st), q, false);
}

inline MultiInsertResult full_multi(const CylTableau& t, const std::vector<Box>& s_in, MultiOptions opt = {}) {
    const CylParams prm = t.params();
    const int k = prm.k;
    std::vector<Box> s = detail::canonical_boxes(s_in, prm);
    detail::check_forward_set(t, s);

    detail::Run run(to_state(t), true);
    std::vector<detail::Tagged> q;
    for (int h = opt.seed_row; h < opt.seed_row + k; ++h) {
        int r = detail::canon_row(h, k);
        for (const Box& b : detail::row_boxes(s, r, true)) {
            ++run.clock;
            int id = static_cast<int>(run.routes.size());
            run.routes.push_back({b, {}, {}});
            run.note_point(id, lift(b, h, prm));
            auto& st = run.st;
            if (b.col <= st.outer[r]) {
                int x = st.rows[r].front();
                st.rows[r].erase(st.rows[r].begin());
                ++st.inner[r];
                run.log.bumped[r].push_back(x);
                q.push_back({x, detail::canon_row(h + 1, k), h + 1, id});
            } else {
                ++st.inner[r];
                ++st.outer[r];
            }
        }
    }
    while (!q.empty()) {
        run.snapshot(q);
        q = detail::forward_pass(run, q);
    }
    MultiInsertResult res{to_tableau(run.st), {}, std::move(run.routes), std::move(run.log)};
    for (int r = 0; r < k; ++r)
        for (int c = t.outer().window[r] + 1; c <= res.tableau.outer().window[r]; ++c) res.new_set.push_back({r, c});
    return res;
}

// Internal row-insertion of one inside cocorner, following the chain directly.
inline std::pair<CylTableau, BumpingRoute> internal_insert(const CylTableau& t, Box b_in) {
    const CylParams prm = t.params();
    const int k = prm.k;
    Box b = project({b_in.row, b_in.col}, prm);
    const int r0 = b.row;
    bool cocorner = b.col == t.inner().window[r0] + 1 && b.col <= t.inner().at(r0 - 1);
    if (!cocorner) throw Error(Errc::NotInsideCocorner, {}, b.row, b.col);

    MultiState st = to_state(t);
    BumpingRoute route{b, {lift(b, r0, prm)}, {0}};
    if (b.col > st.outer[r0]) {
        ++st.inner[r0];
        ++st.outer[r0];
        return {to_tableau(st), route};
    }
    int x = st.rows[r0].front();
    st.rows[r0].erase(st.rows[r0].begin());
    ++st.inner[r0];
    long clock = 0;
    for (int h = r0 + 1;; ++h) {
        int r = detail::canon_row(h, k);
        auto& row = st.rows[r];
        auto it = std::find_if(row.begin(), row.end(), [&](int v) { return v > x; });
        ++clock;
        if (it == row.end()) {
            row.push_back(x);
            route.points.push_back(lift({r, ++st.outer[r]}, h, prm));
            route.times.push_back(clock);
            break;
        }
        route.points.push_back(lift({r, st.inner[r] + 1 + static_cast<int>(it - row.begin())}, h, prm));
        route.times.push_back(clock);
        std::swap(x, *it);
    }
    return {to_tableau(st), route};
}

}  // namespace cyltab
