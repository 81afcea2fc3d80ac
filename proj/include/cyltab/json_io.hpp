#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "crsk.hpp"
#include "enumeration.hpp"
#include "knuth.hpp"
#include "marble.hpp"

namespace cyltab::io {

using json = nlohmann::json;

// Serialized forms:
//   partition  {"k","n","window"}
//   tableau    {"k","n","inner","outer","rows"}
//   box        [row, col]        point [x, y]
//   game       {"initial":[..k], "turns":[[..k], ...]}  (turn j+1 is turns[j])
//   move       {"kind", "pos"}
//   polynomial [[exponents, "coeff"], ...] sorted by exponents

inline std::string canonical(const json& j) { return j.dump(); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& reason) {
    throw Error(Errc::SchemaError, path + ": " + reason);
}

inline const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected object");
    auto it = j.find(key);
    if (it == j.end()) schema_fail(path + "." + key, "missing");
    return *it;
}

inline int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected integer");
    return j.get<int>();
}

inline bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) schema_fail(path, "expected boolean");
    return j.get<bool>();
}

inline std::vector<int> as_ints(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline int opt_int(const json& j, const char* key, int dflt, const std::string& path) {
    auto it = j.find(key);
    return it == j.end() ? dflt : as_int(*it, path + "." + key);
}

inline bool opt_bool(const json& j, const char* key, bool dflt, const std::string& path) {
    auto it = j.find(key);
    return it == j.end() ? dflt : as_bool(*it, path + "." + key);
}

}  // namespace detail

inline CylParams parse_params(const json& j, const std::string& path = "$") {
    using namespace detail;
    return make_params(as_int(field(j, "k", path), path + ".k"), as_int(field(j, "n", path), path + ".n"));
}

inline CylPartition parse_window(const json& j, CylParams prm, const std::string& path) {
    auto w = detail::as_ints(j, path);
    if (static_cast<int>(w.size()) != prm.k) detail::schema_fail(path, "length must equal k");
    return partition_validate(w, prm);
}

inline CylPartition parse_partition(const json& j, const std::string& path = "$") {
    return parse_window(detail::field(j, "window", path), parse_params(j, path), path + ".window");
}

inline CylTableau parse_tableau(const json& j, const std::string& path = "$") {
    using namespace detail;
    CylParams prm = parse_params(j, path);
    auto inner = parse_window(field(j, "inner", path), prm, path + ".inner");
    auto outer = parse_window(field(j, "outer", path), prm, path + ".outer");
    const json& rows = field(j, "rows", path);
    if (!rows.is_array()) schema_fail(path + ".rows", "expected array");
    std::vector<std::vector<int>> rs;
    for (std::size_t r = 0; r < rows.size(); ++r) rs.push_back(as_ints(rows[r], path + ".rows[" + std::to_string(r) + "]"));
    return tableau_validate({outer, inner}, std::move(rs));
}

inline Box parse_box(const json& j, const std::string& path) {
    auto v = detail::as_ints(j, path);
    if (v.size() != 2) detail::schema_fail(path, "box must be [row, col]");
    return {v[0], v[1]};
}

inline std::vector<Box> parse_boxes(const json& j, const std::string& path) {
    if (!j.is_array()) detail::schema_fail(path, "expected array of boxes");
    std::vector<Box> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_box(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline MarbleGame parse_game(const json& j, const std::string& path = "$") {
    using namespace detail;
    MarbleGame g;
    g.initial.counts = as_ints(field(j, "initial", path), path + ".initial");
    const json& turns = field(j, "turns", path);
    if (!turns.is_array()) schema_fail(path + ".turns", "expected array");
    for (std::size_t i = 0; i < turns.size(); ++i) {
        auto t = as_ints(turns[i], path + ".turns[" + std::to_string(i) + "]");
        if (t.size() != g.initial.counts.size()) schema_fail(path + ".turns[" + std::to_string(i) + "]", "length must equal k");
        g.turns.push_back(std::move(t));
    }
    return g;
}

// Words: an array of letters, or a string of digits / comma-separated letters.
inline Word parse_word(const json& j, const std::string& path) {
    if (j.is_array()) return detail::as_ints(j, path);
    if (!j.is_string()) detail::schema_fail(path, "expected word");
    const std::string s = j.get<std::string>();
    Word w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                w.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                detail::schema_fail(path, "bad letter '" + tok + "'");
            }
        }
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') detail::schema_fail(path, "bad letter");
            w.push_back(c - '0');
        }
    }
    return w;
}

inline MoveKind parse_move_kind(const std::string& s, const std::string& path) {
    for (MoveKind k : {MoveKind::Kprime, MoveKind::KprimeInv, MoveKind::Kdprime, MoveKind::KdprimeInv, MoveKind::Rotate})
        if (s == move_kind_name(k)) return k;
    detail::schema_fail(path, "unknown move kind");
}

inline Move parse_move(const json& j, const std::string& path) {
    const json& kind = detail::field(j, "kind", path);
    if (!kind.is_string()) detail::schema_fail(path + ".kind", "expected string");
    return {parse_move_kind(kind.get<std::string>(), path + ".kind"), detail::opt_int(j, "pos", 0, path)};
}

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const CylPartition& p) { return {{"k", p.params.k}, {"n", p.params.n}, {"window", p.window}}; }

inline json to_json(const CylTableau& t) {
    return {{"k", t.params().k}, {"n", t.params().n}, {"inner", t.inner().window}, {"outer", t.outer().window},
            {"rows", t.rows}};
}

inline json to_json(Box b) { return json::array({b.row, b.col}); }
inline json to_json(Point p) { return json::array({p.x, p.y}); }

inline json to_json(const std::vector<Box>& bs) {
    json a = json::array();
    for (const Box& b : bs) a.push_back(to_json(b));
    return a;
}

inline json to_json(const BumpingRoute& r) {
    json pts = json::array();
    for (const Point& p : r.points) pts.push_back(to_json(p));
    return {{"source", to_json(r.source)}, {"points", pts}, {"times", r.times}};
}

inline json queues_json(const InsertionLog& log) {
    json out = json::array();
    for (const auto& q : log.queues) {
        json a = json::array();
        for (const auto& e : q) a.push_back(json::array({e.letter, e.row}));
        out.push_back(a);
    }
    return out;
}

inline json to_json(const MarbleGame& g) { return {{"initial", g.initial.counts}, {"turns", g.turns}}; }

inline json to_json(Move m) { return {{"kind", move_kind_name(m.kind)}, {"pos", m.pos}}; }

inline json to_json(const Certificate& c) {
    json moves = json::array();
    for (const Move& m : c.moves) moves.push_back(to_json(m));
    return {{"start", c.start}, {"moves", moves}, {"end", c.end}};
}

inline json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.str()}));
    return out;
}

inline json to_json(const IdentityReport& r) {
    json mm = json::array();
    for (const auto& m : r.mismatches) mm.push_back({{"exponents", m.exponents}, {"lhs", m.lhs.str()}, {"rhs", m.rhs.str()}});
    json out = {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}, {"mismatches", mm}};
    if (!r.cross_checks.empty()) {
        json cc = json::object();
        for (const auto& [name, ok] : r.cross_checks) cc[name] = ok;
        out["cross_checks"] = cc;
    }
    return out;
}

inline json error_json(const Error& e) {
    json j = {{"code", errc_name(e.code())}};
    if (!e.detail().empty()) j["detail"] = e.detail();
    if (e.row() >= 0) j["row"] = e.row(), j["col"] = e.col();
    if (e.index() >= 0) j["index"] = e.index();
    return {{"error", j}};
}

// ---------------------------------------------------------------------------
// Operation dispatcher shared by the command line and the fixture runner

inline json run_op(const std::string& op, const json& p) {
    using namespace detail;
    const std::string path = "$";
    auto params_of = [&] { return parse_params(p, path); };

    if (op == "validate") {
        if (p.contains("tableau")) {
            auto t = parse_tableau(p["tableau"], "$.tableau");
            return {{"valid", true}, {"size", t.size()}, {"word", tableau_word(t)}};
        }
        auto part = parse_partition(field(p, "partition", path), "$.partition");
        return {{"valid", true}, {"window", part.window}};
    }
    if (op == "insert") {
        auto t = parse_tableau(field(p, "tableau", path), "$.tableau");
        auto res = full_multi(t, parse_boxes(field(p, "boxes", path), "$.boxes"), {opt_int(p, "seed_row", 0, path)});
        json out = {{"tableau", to_json(res.tableau)}, {"new_set", to_json(res.new_set)}, {"queues", queues_json(res.log)}};
        if (opt_bool(p, "trace", false, path)) {
            json routes = json::array();
            for (const auto& r : res.routes) routes.push_back(to_json(r));
            out["routes"] = routes;
        }
        return out;
    }
    if (op == "reverse") {
        auto t = parse_tableau(field(p, "tableau", path), "$.tableau");
        auto res = reverse_full_multi(t, parse_boxes(field(p, "boxes", path), "$.boxes"), {opt_int(p, "seed_row", 0, path)});
        json out = {{"tableau", to_json(res.tableau)}, {"reverse_new_set", to_json(res.reverse_new_set)},
                    {"queues", queues_json(res.log)}};
        if (opt_bool(p, "trace", false, path)) {
            json routes = json::array();
            for (const auto& r : res.routes) routes.push_back(to_json(r));
            out["routes"] = routes;
        }
        return out;
    }
    if (op == "internal_insert" || op == "reverse_insert") {
        auto t = parse_tableau(field(p, "tableau", path), "$.tableau");
        Box b = parse_box(field(p, "box", path), "$.box");
        auto [res, route] = op == "internal_insert" ? internal_insert(t, b) : reverse_insert(t, b);
        return {{"tableau", to_json(res)}, {"route", to_json(route)}};
    }
    if (op == "crsk") {
        auto out = crsk(parse_tableau(field(p, "t", path), "$.t"), parse_tableau(field(p, "u", path), "$.u"));
        return {{"p", to_json(out.p)}, {"q", to_json(out.q)}, {"lambda", to_json(out.lambda)}};
    }
    if (op == "crsk_inverse") {
        auto in = crsk_inverse(parse_tableau(field(p, "p", path), "$.p"), parse_tableau(field(p, "q", path), "$.q"));
        return {{"t", to_json(in.t)}, {"u", to_json(in.u)}, {"mu", to_json(in.mu)}};
    }
    if (op == "flip_tableau") {
        auto t = parse_tableau(field(p, "tableau", path), "$.tableau");
        return {{"tableau", to_json(flip_tableau(t, as_int(field(p, "bound", path), "$.bound")))}};
    }
    if (op == "verify_cauchy") {
        CylParams prm = params_of();
        auto rep = verify_cauchy(parse_window(field(p, "alpha", path), prm, "$.alpha"),
                                 parse_window(field(p, "beta", path), prm, "$.beta"), as_int(field(p, "degree", path), "$.degree"),
                                 as_int(field(p, "xvars", path), "$.xvars"), as_int(field(p, "yvars", path), "$.yvars"));
        return to_json(rep);
    }
    if (op == "verify_oneschur") {
        CylParams prm = params_of();
        return to_json(verify_oneschur(parse_window(field(p, "alpha", path), prm, "$.alpha"),
                                       as_int(field(p, "degree", path), "$.degree"), as_int(field(p, "vars", path), "$.vars")));
    }
    if (op == "verify_fcount") {
        CylParams prm = params_of();
        auto [l, r] = verify_fcount(parse_window(field(p, "alpha", path), prm, "$.alpha"),
                                    parse_window(field(p, "beta", path), prm, "$.beta"), as_int(field(p, "m", path), "$.m"));
        return {{"lhs", l.str()}, {"rhs", r.str()}, {"equal", l == r}};
    }
    if (op == "verify_skew") {
        auto alpha = as_ints(field(p, "alpha", path), "$.alpha");
        auto beta = as_ints(field(p, "beta", path), "$.beta");
        return to_json(verify_skew_reduction(alpha, beta, as_int(field(p, "degree", path), "$.degree"),
                                             as_int(field(p, "vars", path), "$.vars")));
    }
    if (op == "marble_encode") {
        auto t = parse_tableau(field(p, "tableau", path), "$.tableau");
        return to_json(tableau_to_game(t, opt_int(p, "turns", -1, path)));
    }
    if (op == "marble_decode") {
        auto mu = parse_partition(field(p, "mu", path), "$.mu");
        return {{"tableau", to_json(game_to_tableau(mu, parse_game(field(p, "game", path), "$.game")))}};
    }
    if (op == "knuth_transform") {
        auto tr = word_transform_trace(parse_word(field(p, "word", path), "$.word"));
        json out = {{"certificate", to_json(tr.certificate)}};
        json crit = json::array();
        for (const auto& w : tr.critical_words()) crit.push_back(monovariant(w).str());
        out["critical_monovariants"] = crit;
        json steps = json::array();
        for (const auto& s : tr.steps) steps.push_back({{"word", s.before}, {"index", s.index}, {"critical", s.critical}});
        out["steps"] = steps;
        return out;
    }
    if (op == "knuth_connect") {
        auto c = connect(parse_word(field(p, "w", path), "$.w"), parse_word(field(p, "v", path), "$.v"));
        json out = {{"certificate", to_json(c)}};
        if (opt_bool(p, "replay", false, path)) out["replay_ok"] = certificate_valid(c);
        return out;
    }
    if (op == "knuth_apply") {
        Word w = parse_word(field(p, "word", path), "$.word");
        const json& moves = field(p, "moves", path);
        if (!moves.is_array()) schema_fail("$.moves", "expected array");
        for (std::size_t i = 0; i < moves.size(); ++i) w = apply_move(w, parse_move(moves[i], "$.moves[" + std::to_string(i) + "]"));
        return {{"word", w}};
    }
    if (op == "monovariant") return {{"value", monovariant(parse_word(field(p, "word", path), "$.word")).str()}};
    if (op == "lift_word") {
        auto lw = lift_word(parse_word(field(p, "word", path), "$.word"));
        return {{"permutation", lw.permutation}, {"t", lw.t}};
    }
    throw Error(Errc::SchemaError, "unknown op '" + op + "'");
}

// Same as run_op, with domain errors folded into the result.
inline json run_op_captured(const std::string& op, const json& payload) {
    try {
        return run_op(op, payload);
    } catch (const Error& e) {
        return error_json(e);
    }
}

// ---------------------------------------------------------------------------
// Fixtures

struct Fixture {
    std::string name;
    std::string op;
    json payload;
    json expected;
};

inline Fixture parse_fixture(const json& j, const std::string& path = "$") {
    using namespace detail;
    auto str = [&](const char* key) {
        const json& v = field(j, key, path);
        if (!v.is_string()) schema_fail(path + "." + key, "expected string");
        return v.get<std::string>();
    };
    return {str("name"), str("op"), field(j, "payload", path), field(j, "expected", path)};
}

struct FixtureResult {
    std::string name;
    bool ok;
    std::string got;
    std::string expected;
};

inline FixtureResult run_fixture(const Fixture& f) {
    std::string got = canonical(run_op_captured(f.op, f.payload));
    std::string want = canonical(f.expected);
    return {f.name, got == want, got, want};
}

inline json read_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::SchemaError, file + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::SchemaError, file + ": " + e.what());
    }
}

}  // namespace cyltab::io
