#pragma once

#include <numeric>
#include <vector>

#include "tableau.hpp"

namespace cyltab {

struct Arrangement {
    std::vector<int> counts;  // marbles held by p_0 .. p_{k-1}
    bool operator==(const Arrangement&) const = default;
};

using Turn = std::vector<int>;  // a_i = marbles p_i passes to p_{i+1}

// Turn j (1-based) is turns[j-1]; it corresponds to letter j.
struct MarbleGame {
    Arrangement initial;
    std::vector<Turn> turns;
    bool operator==(const MarbleGame&) const = default;
};

inline Arrangement arrangement(const CylPartition& alpha) {
    Arrangement a{std::vector<int>(alpha.k())};
    for (int i = 0; i < alpha.k(); ++i) a.counts[i] = alpha.at(i - 1) - alpha.at(i);
    return a;
}

inline Arrangement apply_turn(const Arrangement& a, const Turn& t) {
    const int k = static_cast<int>(a.counts.size());
    Arrangement out = a;
    for (int i = 0; i < k; ++i) {
        out.counts[i] -= t[i];
        out.counts[(i + 1) % k] += t[i];
    }
    return out;
}

inline bool turn_is_legal(const Arrangement& a, const Turn& t) {
    if (t.size() != a.counts.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || t[i] > a.counts[i]) return false;
    return true;
}

// Index of the first illegal turn, or -1.
inline int first_invalid_turn(const MarbleGame& g) {
    Arrangement a = g.initial;
    for (std::size_t j = 0; j < g.turns.size(); ++j) {
        if (!turn_is_legal(a, g.turns[j])) return static_cast<int>(j);
        a = apply_turn(a, g.turns[j]);
    }
    return -1;
}

inline bool game_validate(const MarbleGame& g) {
    for (int c : g.initial.counts)
        if (c < 0) return false;
    return first_invalid_turn(g) < 0;
}

// Also requires the n - k marble total.
inline bool game_validate(const MarbleGame& g, CylParams prm) {
    if (static_cast<int>(g.initial.counts.size()) != prm.k) return false;
    int total = std::accumulate(g.initial.counts.begin(), g.initial.counts.end(), 0);
    return total == prm.period() && game_validate(g);
}

inline Arrangement final_arrangement(const MarbleGame& g) {
    Arrangement a = g.initial;
    for (const Turn& t : g.turns) a = apply_turn(a, t);
    return a;
}

// Game over letters 1..num_turns; the default takes the largest entry.
inline MarbleGame tableau_to_game(const CylTableau& t, int num_turns = -1) {
    if (num_turns < 0) num_turns = max_letter(t);
    MarbleGame g{arrangement(t.inner()), std::vector<Turn>(num_turns, Turn(t.k(), 0))};
    for (int r = 0; r < t.k(); ++r)
        for (int a : t.rows[r]) {
            if (a < 1 || a > num_turns) throw Error(Errc::PreconditionViolated, "entry outside 1..num_turns", r);
            ++g.turns[a - 1][r];
        }
    return g;
}

inline CylTableau game_to_tableau(const CylPartition& mu, const MarbleGame& g) {
    if (!(g.initial == arrangement(mu))) throw Error(Errc::InitialMismatch);
    if (int bad = first_invalid_turn(g); bad >= 0) throw Error(Errc::InvalidTurn, {}, -1, 0, bad);
    std::vector<std::vector<int>> rows(mu.k());
    std::vector<int> outer = mu.window;
    for (std::size_t j = 0; j < g.turns.size(); ++j)
        for (int r = 0; r < mu.k(); ++r) {
            rows[r].insert(rows[r].end(), g.turns[j][r], static_cast<int>(j) + 1);
            outer[r] += g.turns[j][r];
        }
    return tableau_validate({partition_validate(outer, mu.params), mu}, std::move(rows));
}

}  // namespace cyltab
