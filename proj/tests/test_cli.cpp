#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "homwb/report.hpp"

using namespace homwb;

namespace {

std::string corpus(const std::string& name) {
    std::ifstream in(std::string(HOMWB_CORPUS_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kSample = R"(field: GF(2)
vertices: 1 2
arrows:
  a: 1 -> 2
module M:
  dim: 1 1
  arrow a: 1
U: module M
)";

}  // namespace

TEST_CASE("workspaces round-trip through serialize and parse") {
    WorkspaceFile ws = parse_workspace(kSample);
    WorkspaceFile again = parse_workspace(serialize_workspace(ws));
    CHECK(ws == again);

    WorkspaceFile ws2 = parse_workspace(corpus("abba.ws"));
    CHECK(parse_workspace(serialize_workspace(ws2)) == ws2);
}

TEST_CASE("syntax errors carry line numbers") {
    CHECK_THROWS_AS(parse_workspace("field: Q\nvertices: 1 2\narrows:\n  a: 1 ->\n"),
                    ParseError);
    try {
        parse_workspace("field: Q\nvertices: 1 2\narrows:\n  a: 1 ->\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(parse_workspace("field: Q\nvertices: 1\nbogus: 3\n"), ParseError);
    CHECK_THROWS_AS(parse_workspace("field: GF(4)\nvertices: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_workspace("field: Q\nvertices: 1\nU: module ghost\n"), ParseError);
}

TEST_CASE("the bundled three-vertex file has the expected shape") {
    WorkspaceFile ws = parse_workspace(corpus("abba.ws"));
    CHECK(ws.quiver.vertices.size() == 3);
    CHECK(ws.quiver.arrows.size() == 3);
    CHECK(ws.relation_texts.size() == 1);
    BuiltWorkspace bw = build_workspace(ws);
    CHECK(bw.algebra->dim() == 11);
}

TEST_CASE("an empty relations block gives a hereditary algebra") {
    BuiltWorkspace bw = build_workspace(parse_workspace(corpus("a3.ws")));
    for (const auto& s : standard_modules(bw.algebra).simples)
        CHECK(projective_dimension(s).known_at_most(1));
}

TEST_CASE("a module written as matrices matches the known indecomposable") {
    BuiltWorkspace bw = build_workspace(parse_workspace(kSample));
    const FDModule& m = bw.modules.at("M");
    CHECK(m.dim() == 2);
    CHECK(bw.u.dim() == 2);  // U designated as module M
    bool matched = false;
    for (const auto& p : standard_modules(bw.algebra).projectives)
        matched = matched || (p.dim() == 2 && is_isomorphic(m, p));
    CHECK(matched);
}

TEST_CASE("invariants reproduce the asymmetric flat dimensions") {
    RunOptions o;
    o.cap = 4;
    ReportDocument doc = run_command("invariants", corpus("abba.ws"), o);
    auto prof = doc.body["injective_term_flat_dimensions"];
    CHECK(prof["left"][0] == "1");
    CHECK(std::string(prof["right"][0]).rfind(">=", 0) == 0);

    ReportDocument doc2 = run_command("invariants", corpus("gb.ws"), o);
    auto prof2 = doc2.body["injective_term_flat_dimensions"];
    CHECK(prof2["left"][0] == "2");
    CHECK(prof2["right"][0] == "1");
}

TEST_CASE("structured reports are byte-identical across reruns") {
    RunOptions o;
    o.theorem = "1";
    o.k = 1;
    o.seed = 7;
    std::string text = corpus("a2.ws");
    CHECK(to_json(run_command("audit", text, o)) == to_json(run_command("audit", text, o)));
    CHECK(to_json(run_command("invariants", text, o)) ==
          to_json(run_command("invariants", text, o)));
    o.seed = 8;  // the sampled sections may move, but the run still succeeds
    CHECK(run_command("audit", text, o).exit_code == 0);
}

TEST_CASE("inspect on the one-vertex quiver") {
    ReportDocument doc = run_command("inspect", "field: Q\nvertices: v\nU: regular\n");
    CHECK(doc.body["algebra_dimension"] == 1);
    CHECK(doc.body["standard_modules"]["table"].size() == 1);
}

TEST_CASE("resolve reports resolutions of the regular and named modules") {
    RunOptions o;
    o.depth = 3;
    ReportDocument doc = run_command("resolve", kSample, o);
    const auto& rs = doc.body["resolutions"];
    REQUIRE(rs.size() == 2);
    CHECK(rs[0]["module"] == "regular");
    CHECK(rs[0]["projective"]["terminated"] == true);
    CHECK(rs[1]["module"] == "M");
}

TEST_CASE("unknown commands and theorems are rejected") {
    CHECK_THROWS_AS(run_command("frobnicate", corpus("a2.ws")), std::invalid_argument);
    RunOptions o;
    o.theorem = "9";
    CHECK_THROWS_AS(run_command("audit", corpus("a2.ws"), o), std::invalid_argument);
}
