// cyltab: command-line front end. Results go to stdout as JSON; domain
// errors go to stderr as JSON with exit status 1, usage errors exit 2.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyltab/json_io.hpp"

namespace fs = std::filesystem;
using cyltab::io::json;

namespace {

// Inline JSON if the argument looks like JSON, otherwise a file path.
json load(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw cyltab::Error(cyltab::Errc::SchemaError, std::string("inline JSON: ") + e.what());
        }
    }
    return cyltab::io::read_json_file(arg);
}

// "1,0,-1" or "[1,0,-1]"
std::vector<int> csv_ints(std::string s) {
    std::vector<int> out;
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw cyltab::Error(cyltab::Errc::SchemaError, "bad integer list '" + s + "'");
        }
    }
    return out;
}

int run_fixtures(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    int failed = 0;
    json report = json::array();
    for (const auto& f : files) {
        auto fx = cyltab::io::parse_fixture(cyltab::io::read_json_file(f.string()), f.filename().string());
        auto r = cyltab::io::run_fixture(fx);
        json entry = {{"name", r.name}, {"ok", r.ok}};
        if (!r.ok) {
            ++failed;
            entry["got"] = json::parse(r.got);
            entry["expected"] = json::parse(r.expected);
        }
        report.push_back(entry);
    }
    std::cout << json{{"fixtures", report}, {"failed", failed}, {"total", files.size()}}.dump() << "\n";
    return failed == 0 && !files.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cylindric tableaux toolkit"};
    app.require_subcommand(1);
    bool json_flag = true, trace = false;
    int seed_row = 0;
    app.add_flag("--json", json_flag, "JSON output (the only format)");
    app.add_flag("--trace", trace, "include bumping routes / step traces");
    app.add_option("--seed-row", seed_row, "plane row at which multi-insertion seeding starts");

    std::string op;
    json payload;
    int exit_override = -1;
    std::string fixture_dir = CYLTAB_FIXTURE_DIR;

    auto* validate = app.add_subcommand("validate", "validate a partition or tableau");
    std::string v_tab, v_part;
    auto* vt = validate->add_option("--tableau", v_tab, "tableau JSON or file");
    auto* vp = validate->add_option("--partition", v_part, "partition JSON or file");
    vt->excludes(vp);
    validate->callback([&] {
        if (v_tab.empty() && v_part.empty()) throw CLI::ValidationError("validate", "need --tableau or --partition");
        op = "validate";
        payload = v_tab.empty() ? json{{"partition", load(v_part)}} : json{{"tableau", load(v_tab)}};
    });

    std::string tab_arg, boxes_arg;
    auto* insert = app.add_subcommand("insert", "multi-insert a horizontal strip of boxes");
    insert->add_option("--tableau", tab_arg, "tableau JSON or file")->required();
    insert->add_option("--boxes", boxes_arg, "JSON list of [row, col]")->required();
    insert->callback([&] { op = "insert"; payload = {{"tableau", load(tab_arg)}, {"boxes", load(boxes_arg)}}; });

    auto* reverse = app.add_subcommand("reverse", "reverse multi-insertion");
    reverse->add_option("--tableau", tab_arg, "tableau JSON or file")->required();
    reverse->add_option("--boxes", boxes_arg, "JSON list of [row, col]")->required();
    reverse->callback([&] { op = "reverse"; payload = {{"tableau", load(tab_arg)}, {"boxes", load(boxes_arg)}}; });

    std::string a_arg, b_arg;
    auto* crsk = app.add_subcommand("crsk", "forward correspondence on (T, U)");
    crsk->add_option("--t", a_arg, "tableau T")->required();
    crsk->add_option("--u", b_arg, "tableau U")->required();
    crsk->callback([&] { op = "crsk"; payload = {{"t", load(a_arg)}, {"u", load(b_arg)}}; });

    auto* crsk_inv = app.add_subcommand("crsk-inv", "inverse correspondence on (P, Q)");
    crsk_inv->add_option("--p", a_arg, "tableau P")->required();
    crsk_inv->add_option("--q", b_arg, "tableau Q")->required();
    crsk_inv->callback([&] { op = "crsk_inverse"; payload = {{"p", load(a_arg)}, {"q", load(b_arg)}}; });

    auto* verify = app.add_subcommand("verify", "exact identity checks");
    verify->require_subcommand(1);
    int k = 0, n = 0, degree = 0, xvars = 2, yvars = 2, vars = 2, m = 0;
    std::string alpha, beta;
    auto* cauchy = verify->add_subcommand("cauchy", "cylindric Cauchy identity");
    auto* oneschur = verify->add_subcommand("oneschur", "single-Schur identity");
    auto* fcount = verify->add_subcommand("fcount", "standard-count identity");
    auto* skew = verify->add_subcommand("skew", "ordinary skew reduction with cylinder cross-check");
    for (auto* sc : {cauchy, oneschur, fcount}) {
        sc->add_option("--k", k)->required();
        sc->add_option("--n", n)->required();
        sc->add_option("--alpha", alpha, "comma-separated window")->required();
    }
    for (auto* sc : {cauchy, fcount}) sc->add_option("--beta", beta, "comma-separated window")->required();
    cauchy->add_option("--degree", degree)->required();
    cauchy->add_option("--xvars", xvars);
    cauchy->add_option("--yvars", yvars);
    oneschur->add_option("--degree", degree)->required();
    oneschur->add_option("--vars", vars);
    fcount->add_option("--m", m)->required();
    skew->add_option("--alpha", alpha, "comma-separated partition (may be empty)");
    skew->add_option("--beta", beta, "comma-separated partition (may be empty)");
    skew->add_option("--degree", degree)->required();
    skew->add_option("--vars", vars);
    cauchy->callback([&] {
        op = "verify_cauchy";
        payload = {{"k", k}, {"n", n}, {"alpha", csv_ints(alpha)}, {"beta", csv_ints(beta)},
                   {"degree", degree}, {"xvars", xvars}, {"yvars", yvars}};
    });
    oneschur->callback([&] {
        op = "verify_oneschur";
        payload = {{"k", k}, {"n", n}, {"alpha", csv_ints(alpha)}, {"degree", degree}, {"vars", vars}};
    });
    fcount->callback([&] {
        op = "verify_fcount";
        payload = {{"k", k}, {"n", n}, {"alpha", csv_ints(alpha)}, {"beta", csv_ints(beta)}, {"m", m}};
    });
    skew->callback([&] {
        op = "verify_skew";
        payload = {{"alpha", csv_ints(alpha)}, {"beta", csv_ints(beta)}, {"degree", degree}, {"vars", vars}};
    });

    auto* marble = app.add_subcommand("marble", "marble game encoding");
    marble->require_subcommand(1);
    int turns = -1;
    auto* encode = marble->add_subcommand("encode", "tableau to game");
    encode->add_option("--tableau", tab_arg)->required();
    encode->add_option("--turns", turns, "game length (default: largest entry)");
    encode->callback([&] {
        op = "marble_encode";
        payload = {{"tableau", load(tab_arg)}};
        if (turns >= 0) payload["turns"] = turns;
    });
    auto* decode = marble->add_subcommand("decode", "game to tableau");
    decode->add_option("--mu", a_arg, "inner partition")->required();
    decode->add_option("--game", b_arg, "game JSON")->required();
    decode->callback([&] { op = "marble_decode"; payload = {{"mu", load(a_arg)}, {"game", load(b_arg)}}; });

    auto* knuth = app.add_subcommand("knuth", "cyclic Knuth moves");
    knuth->require_subcommand(1);
    std::string w_arg, v_arg;
    bool replay = false;
    auto* transform = knuth->add_subcommand("transform", "sort a permutation word");
    transform->add_option("word", w_arg, "digits or comma-separated letters")->required();
    transform->callback([&] { op = "knuth_transform"; payload = {{"word", w_arg}}; });
    auto* conn = knuth->add_subcommand("connect", "certificate between two rearrangements");
    conn->add_option("w", w_arg)->required();
    conn->add_option("v", v_arg)->required();
    conn->add_flag("--replay", replay, "replay the certificate and report the result");
    conn->callback([&] {
        op = "knuth_connect";
        payload = {{"w", w_arg}, {"v", v_arg}, {"replay", replay}};
    });

    auto* fixtures = app.add_subcommand("fixtures", "golden fixture corpus");
    fixtures->require_subcommand(1);
    auto* frun = fixtures->add_subcommand("run", "replay every fixture");
    frun->add_option("--dir", fixture_dir, "fixture directory");
    frun->callback([&] { op = "fixtures"; });

    auto* run = app.add_subcommand("run", "run any dispatcher operation on a JSON payload");
    std::string run_op_name, run_payload;
    run->add_option("op", run_op_name)->required();
    run->add_option("payload", run_payload, "payload JSON or file")->required();
    run->callback([&] { op = run_op_name; payload = load(run_payload); });

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e) == 0 ? 0 : 2;
        }
        if (op == "fixtures") return run_fixtures(fixture_dir);
        if (payload.is_object()) {
            if (trace) payload["trace"] = true;
            if (app.count("--seed-row")) payload["seed_row"] = seed_row;
        }
        json out = cyltab::io::run_op(op, payload);
        std::cout << out.dump() << "\n";
        if (out.contains("equal") && !out["equal"].get<bool>()) exit_override = 1;
        if (out.contains("replay_ok") && !out["replay_ok"].get<bool>()) exit_override = 1;
        return exit_override < 0 ? 0 : exit_override;
    } catch (const cyltab::Error& e) {
        std::cerr << cyltab::io::error_json(e).dump() << "\n";
        return 1;
    }
}
