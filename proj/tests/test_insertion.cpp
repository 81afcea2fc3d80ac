#include <gtest/gtest.h>

#include "support.hpp"

using namespace cyltab;
using namespace testing_support;

namespace {

CylTableau R() { return tab(3, 6, {4, 3, 1}, {7, 5, 4}, {{2, 3, 5}, {2, 6}, {1, 2, 4}}); }
CylTableau R3() { return tab(3, 6, {4, 4, 3}, {7, 7, 5}, {{1, 2, 4}, {2, 3, 5}, {2, 6}}); }

InsertionQueue q(std::vector<std::pair<int, int>> items) {
    InsertionQueue out;
    for (auto [a, r] : items) out.push_back({a, r, std::nullopt});
    return out;
}

MultiState state(std::vector<int> inner, std::vector<int> outer, std::vector<std::vector<int>> rows) {
    return {make_params(3, 6), inner, outer, rows};
}

}  // namespace

TEST(InternalInsert, WorkedExample) {
    auto t = tab(3, 5, {3, 2, 2}, {5, 5, 5}, {{1, 4}, {2, 5, 6}, {3, 7, 7}});
    auto [out, route] = internal_insert(t, {0, 4});
    EXPECT_EQ(out, tab(3, 5, {4, 2, 2}, {6, 5, 5}, {{3, 7}, {1, 4, 6}, {2, 5, 7}}));
    // The 7 lands at the end of row 0, right of the 3.
    EXPECT_EQ(out.rows[0].back(), 7);
    for (std::size_t i = 1; i < route.points.size(); ++i) {
        EXPECT_EQ(route.points[i].x, route.points[i - 1].x + 1);
        EXPECT_LE(route.points[i].y, route.points[i - 1].y);
    }
}

TEST(InternalInsert, BoxOutsideOuterShape) {
    auto [out, route] = internal_insert(tab(2, 4, {0, 0}, {0, 0}, {{}, {}}), {0, 1});
    EXPECT_EQ(out.inner().window, (std::vector<int>{1, 0}));
    EXPECT_EQ(out.outer().window, (std::vector<int>{1, 0}));
    EXPECT_EQ(route.points.size(), 1u);
}

TEST(InternalInsert, TwoStepChain) {
    auto [out, route] = internal_insert(tab(2, 4, {0, 0}, {1, 1}, {{1}, {2}}), {0, 1});
    EXPECT_EQ(out, tab(2, 4, {1, 0}, {2, 1}, {{2}, {1}}));
    EXPECT_EQ(route.points, (std::vector<Point>{{0, 1}, {1, 1}, {2, 0}}));
}

TEST(InternalInsert, RejectsNonCocorner) {
    try {
        internal_insert(tab(2, 4, {0, 0}, {1, 1}, {{1}, {2}}), {1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotInsideCocorner);
    }
}

TEST(OneStepMulti, WorkedExampleSteps) {
    auto [s1, q1] = one_step_multi(state({4, 4, 3}, {7, 5, 4}, {{2, 3, 5}, {6}, {4}}), q({{2, 2}, {1, 0}, {2, 0}}));
    EXPECT_EQ(q1, q({{4, 0}, {2, 1}, {3, 1}}));
    auto [s2, q2] = one_step_multi(s1, q1);
    EXPECT_EQ(q2, q({{5, 1}, {6, 2}}));
    auto [s3, q3] = one_step_multi(s2, q2);
    EXPECT_TRUE(q3.empty());
    EXPECT_EQ(to_tableau(s3), R3());
}

TEST(OneStepMulti, EmptyQueue) {
    auto st = to_state(R());
    auto [s, out] = one_step_multi(st, {});
    EXPECT_EQ(s, st);
    EXPECT_TRUE(out.empty());
}

TEST(OneStepMulti, PlaneRowsFollowTheItems) {
    InsertionQueue in{{2, 2, 5}, {1, 0, 6}, {2, 0, 6}};
    auto [s1, q1] = one_step_multi(state({4, 4, 3}, {7, 5, 4}, {{2, 3, 5}, {6}, {4}}), in);
    EXPECT_EQ(q1, (InsertionQueue{{4, 0, 6}, {2, 1, 7}, {3, 1, 7}}));
}

TEST(OneStepMulti, RejectsIrregularQueue) {
    try {
        one_step_multi(to_state(R()), q({{3, 0}, {1, 0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::QueueNotRegular);
    }
}

TEST(FullMulti, WorkedExample) {
    auto res = full_multi(R(), {{1, 4}, {2, 2}, {2, 3}});
    ASSERT_EQ(res.log.queues.size(), 3u);
    EXPECT_EQ(res.log.queues[0], q({{2, 2}, {1, 0}, {2, 0}}));
    EXPECT_EQ(res.log.queues[1], q({{4, 0}, {2, 1}, {3, 1}}));
    EXPECT_EQ(res.log.queues[2], q({{5, 1}, {6, 2}}));
    EXPECT_EQ(res.tableau, R3());
    EXPECT_EQ(res.new_set, (std::vector<Box>{{1, 6}, {1, 7}, {2, 5}}));
}

TEST(FullMulti, EmptySet) {
    auto res = full_multi(R(), {});
    EXPECT_EQ(res.tableau, R());
    EXPECT_TRUE(res.new_set.empty());
}

TEST(FullMulti, Preconditions) {
    EXPECT_THROW(full_multi(R(), {{0, 4}}), Error);              // inside the inner shape
    EXPECT_THROW(full_multi(R(), {{1, 5}}), Error);              // not adjacent to the inner shape
    EXPECT_THROW(full_multi(R(), {{1, 4}, {1, 4}}), Error);      // duplicate
    EXPECT_THROW(full_multi(R(), {{0, 5}, {1, 4}, {1, 5}}), Error);  // column collision
}

// A single cocorner through the queue machinery equals the direct chain.
TEST(FullMulti, SingletonMatchesInternalInsert) {
    int checked = 0;
    for (int k = 1; k <= 3; ++k)
        for (int n = k + 1; n <= k + 3; ++n)
            for (const auto& mu : normalized_windows(k, n))
                for (const auto& lam : outers_within(mu, 4))
                    for (const auto& t : brute_ssct({lam, mu}, 3))
                        for (int r = 0; r < k; ++r) {
                            Box b{r, mu.window[r] + 1};
                            if (b.col > mu.at(r - 1)) continue;
                            auto direct = internal_insert(t, b);
                            auto multi = full_multi(t, {b});
                            EXPECT_EQ(direct.first, multi.tableau);
                            ASSERT_EQ(multi.routes.size(), 1u);
                            EXPECT_EQ(direct.second.points, multi.routes[0].points);
                            ++checked;
                        }
    EXPECT_GT(checked, 1000);
}

TEST(ReverseInsert, Examples) {
    auto [e, r1] = reverse_insert(tab(2, 4, {1, 0}, {1, 0}, {{}, {}}), {0, 1});
    EXPECT_EQ(e.inner().window, (std::vector<int>{0, 0}));
    EXPECT_EQ(e.outer().window, (std::vector<int>{0, 0}));
    auto [back, r2] = reverse_insert(tab(2, 4, {1, 0}, {2, 1}, {{2}, {1}}), {0, 2});
    EXPECT_EQ(back, tab(2, 4, {0, 0}, {1, 1}, {{1}, {2}}));
    try {
        reverse_insert(tab(2, 4, {1, 0}, {2, 1}, {{2}, {1}}), {0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotOutsideCorner);
    }
}

TEST(ReverseInsert, RetracesInternalInsertExample) {
    auto t = tab(3, 5, {3, 2, 2}, {5, 5, 5}, {{1, 4}, {2, 5, 6}, {3, 7, 7}});
    auto [fwd, route] = internal_insert(t, {0, 4});
    auto [back, rroute] = reverse_insert(fwd, {0, 6});
    EXPECT_EQ(back, t);
    // Same boxes in the opposite order; the lifts differ by a whole period.
    std::vector<Box> fwd_boxes, rev_boxes;
    for (const Point& p : route.points) fwd_boxes.push_back(project(p, t.params()));
    for (const Point& p : rroute.points) rev_boxes.push_back(project(p, t.params()));
    std::reverse(fwd_boxes.begin(), fwd_boxes.end());
    EXPECT_EQ(rev_boxes, fwd_boxes);
}

TEST(ReverseOneStepMulti, WorkedExampleSteps) {
    auto [s1, q1] = reverse_one_step_multi(state({4, 4, 3}, {7, 5, 4}, {{1, 2, 4}, {2}, {2}}), q({{5, 0}, {3, 0}, {6, 1}}));
    EXPECT_EQ(q1, q({{4, 2}, {2, 2}, {2, 0}}));
    auto [s2, q2] = reverse_one_step_multi(s1, q1);
    EXPECT_EQ(q2, q({{2, 1}, {1, 2}}));
    auto [s3, q3] = reverse_one_step_multi(s2, q2);
    EXPECT_TRUE(q3.empty());
    EXPECT_EQ(to_tableau(s3), R());
}

TEST(ReverseOneStepMulti, EmptyAndIrregular) {
    auto st = to_state(R3());
    auto [s, out] = reverse_one_step_multi(st, {});
    EXPECT_EQ(s, st);
    EXPECT_TRUE(out.empty());
    try {
        reverse_one_step_multi(st, q({{1, 0}, {3, 0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::QueueNotReverseRegular);
    }
}

TEST(ReverseFullMulti, WorkedExample) {
    auto res = reverse_full_multi(R3(), {{1, 6}, {1, 7}, {2, 5}}, {1});
    ASSERT_EQ(res.log.queues.size(), 3u);
    EXPECT_EQ(res.log.queues[0], q({{5, 0}, {3, 0}, {6, 1}}));
    EXPECT_EQ(res.log.queues[1], q({{4, 2}, {2, 2}, {2, 0}}));
    EXPECT_EQ(res.log.queues[2], q({{2, 1}, {1, 2}}));
    EXPECT_EQ(res.tableau, R());
    EXPECT_EQ(res.reverse_new_set, (std::vector<Box>{{1, 4}, {2, 2}, {2, 3}}));
}

TEST(ReverseFullMulti, SeedRowDoesNotChangeTheResult) {
    for (int h = -3; h <= 3; ++h) {
        auto res = reverse_full_multi(R3(), {{1, 6}, {1, 7}, {2, 5}}, {h});
        EXPECT_EQ(res.tableau, R());
        auto fwd = full_multi(R(), {{1, 4}, {2, 2}, {2, 3}}, {h});
        EXPECT_EQ(fwd.tableau, R3());
    }
}

TEST(ReverseFullMulti, EmptySet) {
    auto res = reverse_full_multi(R3(), {});
    EXPECT_EQ(res.tableau, R3());
    EXPECT_TRUE(res.reverse_new_set.empty());
}

// Conjugation by the flip turns reverse insertion into forward insertion.
TEST(FlipPair, ConjugatesForwardAndReverse) {
    const int bound = 7;
    auto [ft, fs] = flip_pair(R3(), {{1, 6}, {1, 7}, {2, 5}}, bound);
    auto fwd = full_multi(ft, fs);
    auto rev = reverse_full_multi(R3(), {{1, 6}, {1, 7}, {2, 5}});
    EXPECT_EQ(flip_tableau(fwd.tableau, bound), rev.tableau);
    std::vector<Box> flipped_new;
    for (const Box& b : fwd.new_set) flipped_new.push_back(flip_box(b, R3().params()));
    std::sort(flipped_new.begin(), flipped_new.end());
    EXPECT_EQ(flipped_new, rev.reverse_new_set);
}

TEST(RoundTrip, SmallExhaustive) {
    int checked = 0;
    for (int k = 1; k <= 2; ++k)
        for (int n = k + 1; n <= k + 2; ++n)
            for (const auto& mu : normalized_windows(k, n))
                for (const auto& lam : outers_within(mu, 3))
                    for (const auto& t : brute_ssct({lam, mu}, 2))
                        for (const auto& nu : outers_within(mu, 2)) {
                            if (!is_horizontal_strip({nu, mu})) continue;
                            auto s = skew_boxes({nu, mu});
                            auto f = full_multi(t, s);
                            auto b = reverse_full_multi(f.tableau, f.new_set);
                            EXPECT_EQ(b.tableau, t);
                            EXPECT_EQ(b.reverse_new_set, s);
                            ++checked;
                        }
    EXPECT_GT(checked, 100);
}
