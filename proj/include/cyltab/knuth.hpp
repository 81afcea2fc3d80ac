#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "tableau.hpp"

namespace cyltab {

enum class MoveKind { Kprime, KprimeInv, Kdprime, KdprimeInv, Rotate };

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Kprime: return "Kprime";
        case MoveKind::KprimeInv: return "KprimeInv";
        case MoveKind::Kdprime: return "Kdprime";
        case MoveKind::KdprimeInv: return "KdprimeInv";
        case MoveKind::Rotate: return "Rotate";
    }
    return "?";
}

// `pos` is the 0-based start of the three-letter window; ignored for Rotate.
struct Move {
    MoveKind kind = MoveKind::Rotate;
    int pos = 0;
    bool operator==(const Move&) const = default;
};

struct Certificate {
    Word start;
    std::vector<Move> moves;
    Word end;
    bool operator==(const Certificate&) const = default;
};

// Precondition on the window (a, b, c) at the move position.
inline bool move_applies(const Word& w, Move m) {
    if (m.kind == MoveKind::Rotate) return !w.empty();
    if (m.pos < 0 || m.pos + 2 >= static_cast<int>(w.size())) return false;
    int a = w[m.pos], b = w[m.pos + 1], c = w[m.pos + 2];
    switch (m.kind) {
        case MoveKind::Kprime: return c < a && a <= b;      // yzx, x < y <= z
        case MoveKind::KprimeInv: return b < a && a <= c;   // yxz
        case MoveKind::Kdprime: return a <= c && c < b;     // xzy, x <= y < z
        case MoveKind::KdprimeInv: return b <= c && c < a;  // zxy
        default: return false;
    }
}

inline Word apply_move(Word w, Move m) {
    if (!move_applies(w, m)) throw Error(Errc::PatternMismatch, move_kind_name(m.kind), -1, 0, m.pos);
    switch (m.kind) {
        case MoveKind::Kprime:
        case MoveKind::KprimeInv: std::swap(w[m.pos + 1], w[m.pos + 2]); break;
        case MoveKind::Kdprime:
        case MoveKind::KdprimeInv: std::swap(w[m.pos], w[m.pos + 1]); break;
        case MoveKind::Rotate: std::rotate(w.rbegin(), w.rbegin() + 1, w.rend()); break;
    }
    return w;
}

// Moves undoing m on a word of the given length.
inline std::vector<Move> inverse_moves(Move m, int length) {
    switch (m.kind) {
        case MoveKind::Kprime: return {{MoveKind::KprimeInv, m.pos}};
        case MoveKind::KprimeInv: return {{MoveKind::Kprime, m.pos}};
        case MoveKind::Kdprime: return {{MoveKind::KdprimeInv, m.pos}};
        case MoveKind::KdprimeInv: return {{MoveKind::Kdprime, m.pos}};
        case MoveKind::Rotate: return std::vector<Move>(std::max(0, length - 1), Move{MoveKind::Rotate, 0});
    }
    return {};
}

inline std::vector<Move> applicable_moves(const Word& w) {
    std::vector<Move> out;
    for (int p = 0; p + 2 < static_cast<int>(w.size()); ++p)
        for (MoveKind k : {MoveKind::Kprime, MoveKind::KprimeInv, MoveKind::Kdprime, MoveKind::KdprimeInv})
            if (move_applies(w, {k, p})) out.push_back({k, p});
    out.push_back({MoveKind::Rotate, 0});
    return out;
}

inline Word replay(const Word& start, const std::vector<Move>& moves) {
    Word w = start;
    for (const Move& m : moves) w = apply_move(std::move(w), m);
    return w;
}

inline bool certificate_valid(const Certificate& c) {
    try {
        return replay(c.start, c.moves) == c.end;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Permutation words

inline void require_permutation(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int a : w) {
        if (a < 1 || a > static_cast<int>(w.size()) || seen[a]) throw Error(Errc::NotAPermutation);
        seen[a] = true;
    }
}

// Base m+1 number whose digits are the positions (1-based) of 1, 2, ..., m.
inline BigInt monovariant(const Word& w) {
    require_permutation(w);
    const int m = static_cast<int>(w.size());
    std::vector<int> pos(m + 1);
    for (int i = 0; i < m; ++i) pos[w[i]] = i + 1;
    BigInt n = 0;
    for (int l = 1; l <= m; ++l) n = n * (m + 1) + pos[l];
    return n;
}

struct TransformStep {
    Word before;        // anchored word the switch acts on
    int index = 0;      // 1-based i of the switched pair (w_i, w_{i+1})
    bool critical = false;
    Word after;         // anchored result
};

struct TransformTrace {
    Certificate certificate;
    std::vector<TransformStep> steps;

    std::vector<Word> critical_words() const {
        std::vector<Word> out;
        for (const auto& s : steps)
            if (s.critical) out.push_back(s.after);
        return out;
    }
};

namespace detail {

inline void emit(Word& w, std::vector<Move>& out, Move m) {
    w = apply_move(std::move(w), m);
    out.push_back(m);
}

}  // namespace detail

inline TransformTrace word_transform_trace(const Word& input) {
    require_permutation(input);
    const int m = static_cast<int>(input.size());
    TransformTrace tr;
    tr.certificate.start = input;
    Word w = input;
    auto& moves = tr.certificate.moves;
    while (!w.empty() && w[0] != 1) detail::emit(w, moves, {MoveKind::Rotate, 0});

    auto between = [](int c, int a, int b) { return std::min(a, b) < c && c < std::max(a, b); };
    const long guard = 10L * m * m * m + 100;
    for (long iter = 0;; ++iter) {
        if (iter > guard) throw std::logic_error("word transform did not terminate");
        int found = 0;
        bool left = false;
        for (int i = 1; i < m && !found; ++i) {
            int a = w[i - 1], b = w[i];
            int lc = i >= 2 ? w[i - 2] : w[m - 1];
            if (between(lc, a, b)) found = i, left = true;
            else if (i + 1 < m && between(w[i + 1], a, b)) found = i, left = false;
        }
        if (!found) break;
        TransformStep step{w, found, found == 1, {}};
        const int i = found;
        const int a = w[i - 1], b = w[i];
        if (left) {
            MoveKind kind = a > b ? MoveKind::Kprime : MoveKind::KprimeInv;
            if (i == 1) {
                detail::emit(w, moves, {MoveKind::Rotate, 0});
                detail::emit(w, moves, {kind, 0});
                for (int r = 0; r < m - 2; ++r) detail::emit(w, moves, {MoveKind::Rotate, 0});
            } else {
                detail::emit(w, moves, {kind, i - 2});
            }
        } else {
            MoveKind kind = a < b ? MoveKind::Kdprime : MoveKind::KdprimeInv;
            detail::emit(w, moves, {kind, i - 1});
            if (i == 1)
                for (int r = 0; r < m - 1; ++r) detail::emit(w, moves, {MoveKind::Rotate, 0});
        }
        step.after = w;
        tr.steps.push_back(std::move(step));
    }
    Word sorted(m);
    for (int i = 0; i < m; ++i) sorted[i] = i + 1;
    if (w != sorted) throw std::logic_error("word transform stopped before the identity");
    tr.certificate.end = w;
    return tr;
}

inline Certificate word_transform(const Word& w) { return word_transform_trace(w).certificate; }

// ---------------------------------------------------------------------------
// General words

struct LiftedWord {
    Word permutation;
    std::vector<int> letter_of;  // letter_of[v - 1] is the original letter behind value v
    int t = 0;                   // 1-based anchor position
};

inline LiftedWord lift_word(const Word& w) {
    if (w.empty()) throw Error(Errc::PreconditionViolated, "empty word");
    const int m = static_cast<int>(w.size());
    const int s = *std::min_element(w.begin(), w.end());
    int t = 0;
    if (w.back() != s) {
        t = static_cast<int>(std::find(w.begin(), w.end(), s) - w.begin()) + 1;
    } else {
        for (int i = 2; i <= m && !t; ++i)
            if (w[i - 1] == s && w[i - 2] != s) t = i;
        if (!t) t = 1;  // every letter equals s
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    auto key = [&](int i) { return std::pair{w[i], floor_mod(i + 1 - t, m)}; };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
    LiftedWord out{Word(m), std::vector<int>(m), t};
    for (int r = 0; r < m; ++r) {
        out.permutation[order[r]] = r + 1;
        out.letter_of[r] = w[order[r]];
    }
    return out;
}

namespace detail {

inline bool swaps_equal_letters(const Word& w, Move m) {
    if (m.kind == MoveKind::Rotate || m.pos < 0 || m.pos + 2 >= static_cast<int>(w.size())) return false;
    bool right_pair = m.kind == MoveKind::Kprime || m.kind == MoveKind::KprimeInv;
    return right_pair ? w[m.pos + 1] == w[m.pos + 2] : w[m.pos] == w[m.pos + 1];
}

// Replays a permutation path on w while it stays legal. A switch of two equal
// letters fixes the word and is dropped. Returns false at the first illegal move.
inline bool replay_lifted(Word& w, const std::vector<Move>& moves, std::vector<Move>& kept) {
    for (const Move& m : moves) {
        if (swaps_equal_letters(w, m)) continue;
        if (!move_applies(w, m)) return false;
        w = apply_move(std::move(w), m);
        kept.push_back(m);
    }
    return true;
}

// Moves taking w to its sorted rearrangement. Ties can reorder under rotation, so a
// lifted path may stall; the word is then lifted again from where it stopped.
inline std::vector<Move> moves_to_sorted(const Word& w, int max_relifts) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Word cur = w;
    std::vector<Move> kept;
    for (int attempt = 0; attempt <= max_relifts; ++attempt) {
        if (replay_lifted(cur, word_transform(lift_word(cur).permutation).moves, kept)) {
            if (cur != sorted) throw std::logic_error("lifted path does not end at the sorted word");
            return kept;
        }
    }
    throw std::logic_error("lifted path kept stalling");
}

}  // namespace detail

inline Certificate connect(const Word& w, const Word& v) {
    Word sw = w, sv = v;
    std::sort(sw.begin(), sw.end());
    std::sort(sv.begin(), sv.end());
    if (sw != sv) throw Error(Errc::NotSameMultiset);
    Certificate c{w, {}, v};
    if (w == v) return c;
    const int m = static_cast<int>(w.size());

    auto to_sorted = [&](const Word& word) { return detail::moves_to_sorted(word, m * m); };
    auto forward = to_sorted(w);
    auto backward = to_sorted(v);
    c.moves = forward;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        for (const Move& inv : inverse_moves(*it, m)) c.moves.push_back(inv);
    if (replay(w, c.moves) != v) throw std::logic_error("spliced certificate does not reach the target");
    return c;
}

}  // namespace cyltab
