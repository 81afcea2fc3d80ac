#include <gtest/gtest.h>

#include <filesystem>

#include "cyltab/json_io.hpp"

using namespace cyltab;
using cyltab::io::json;

namespace {

Errc schema_code(const json& j) {
    try {
        io::parse_partition(j);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::PreconditionViolated;
}

}  // namespace

TEST(Parse, Partition) {
    auto p = io::parse_partition(json::parse(R"({"k":2,"n":4,"window":[0,0]})"));
    EXPECT_EQ(p.window, (std::vector<int>{0, 0}));
    EXPECT_EQ(schema_code(json::parse(R"({"k":2,"n":4,"window":[0]})")), Errc::SchemaError);
    EXPECT_EQ(schema_code(json::parse(R"({"k":2,"window":[0,0]})")), Errc::SchemaError);
    EXPECT_EQ(schema_code(json::parse(R"({"k":2,"n":4,"window":[0,"a"]})")), Errc::SchemaError);
    EXPECT_EQ(schema_code(json::parse(R"({"k":2,"n":4,"window":[2,-1]})")), Errc::WrapViolated);
}

TEST(Parse, SchemaErrorCarriesPath) {
    try {
        io::parse_tableau(json::parse(R"({"k":2,"n":4,"inner":[0,0],"outer":[1,0],"rows":[[1],["x"]]})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SchemaError);
        EXPECT_NE(e.detail().find("$.rows[1][0]"), std::string::npos);
    }
}

TEST(Parse, RoundTripsCanonically) {
    const char* docs[] = {
        R"({"window":[3,1],"n":4,"k":2})",
        R"({"k":3,"n":6,"inner":[4,3,1],"outer":[7,5,4],"rows":[[2,3,5],[2,6],[1,2,4]]})",
    };
    auto d0 = json::parse(docs[0]);
    EXPECT_EQ(io::canonical(io::to_json(io::parse_partition(d0))), io::canonical(d0));
    EXPECT_EQ(io::canonical(d0), R"({"k":2,"n":4,"window":[3,1]})");
    auto d1 = json::parse(docs[1]);
    EXPECT_EQ(io::canonical(io::to_json(io::parse_tableau(d1))), io::canonical(d1));
    auto g = json::parse(R"({"initial":[1,1,2],"turns":[[1,1,2],[2,1,0]]})");
    EXPECT_EQ(io::canonical(io::to_json(io::parse_game(g))), io::canonical(g));
}

TEST(Parse, Words) {
    EXPECT_EQ(io::parse_word(json("159"), "$"), (Word{1, 5, 9}));
    EXPECT_EQ(io::parse_word(json("1,12,3"), "$"), (Word{1, 12, 3}));
    EXPECT_EQ(io::parse_word(json::array({2, 1}), "$"), (Word{2, 1}));
    EXPECT_THROW(io::parse_word(json("1a"), "$"), Error);
}

TEST(RunOp, DomainErrorsAreCaptured) {
    auto out = io::run_op_captured("knuth_apply", json::parse(R"({"word":"123","moves":[{"kind":"Kprime","pos":0}]})"));
    EXPECT_EQ(out["error"]["code"], "PatternMismatch");
    EXPECT_EQ(out["error"]["index"], 0);
    auto unknown = io::run_op_captured("nope", json::object());
    EXPECT_EQ(unknown["error"]["code"], "SchemaError");
}

TEST(RunOp, VerifyCauchyReport) {
    auto out = io::run_op("verify_cauchy",
                          json::parse(R"({"k":2,"n":4,"alpha":[0,0],"beta":[0,0],"degree":3,"xvars":2,"yvars":2})"));
    EXPECT_TRUE(out["equal"].get<bool>());
    EXPECT_TRUE(out["mismatches"].empty());
    EXPECT_EQ(out["lhs"], out["rhs"]);
}

TEST(Fixtures, CorpusReplays) {
    namespace fs = std::filesystem;
    int count = 0;
    for (const auto& e : fs::directory_iterator(CYLTAB_FIXTURE_DIR)) {
        if (e.path().extension() != ".json") continue;
        auto f = io::parse_fixture(io::read_json_file(e.path().string()));
        auto r = io::run_fixture(f);
        EXPECT_TRUE(r.ok) << f.name << "\n got: " << r.got << "\nwant: " << r.expected;
        ++count;
    }
    EXPECT_GE(count, 10);
}
