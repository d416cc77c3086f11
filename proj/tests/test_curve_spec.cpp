#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stacky/cli.hpp"
#include "stacky/report.hpp"

#include "fuzz_support.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using fga::Int;
using stacky::CurveSpec;
using stacky::ParseError;
using stacky::ParseErrorKind;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::vector<std::string> kCurveFiles = {
    std::string(CURVES_DIR) + "/n11.stacky",
    std::string(CURVES_DIR) + "/m11.stacky",
    std::string(CURVES_DIR) + "/conic_p.stacky",
    std::string(CURVES_DIR) + "/conic_p_prime.stacky",
    std::string(CURVES_DIR) + "/elliptic_brauer.stacky",
};

int cli(const std::vector<std::string>& args, const std::string& input, std::string* out_text,
        std::string* err_text) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = stacky::run_cli(args, in, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("minimal files parse to empty specs") {
    CurveSpec empty = stacky::parse_curve_spec("");
    CHECK(empty.coarse.generators.empty());
    CHECK(empty.points.empty());
    CHECK(!empty.gerbe);

    CurveSpec named = stacky::parse_curve_spec("name minimal test\n# nothing else\n");
    CHECK(named.name == "minimal test");
    CHECK(named == stacky::parse_curve_spec(stacky::serialize_curve_spec(named)));
}

TEST_CASE("a two-point file parses to the expected spec") {
    CurveSpec spec = stacky::parse_curve_spec(slurp(kCurveFiles[0]));
    CHECK(spec.name == "N_1,1");
    REQUIRE(spec.points.size() == 2);
    CHECK(spec.points[0].label == "I_1728");
    CHECK(spec.points[0].order == 2);
    CHECK(spec.points[1].label == "I_0");
    CHECK(spec.points[1].order == 3);
    CHECK(!spec.gerbe);
}

TEST_CASE("expressions resolve classes, signs and multiplicities") {
    CurveSpec spec = stacky::parse_curve_spec(
        "coarse:\n"
        "gen A\n"
        "gen B\n"
        "class C = 2*A - B\n"
        "rel 3*C + B = 0\n"
        "\n"
        "point: P\n"
        "order 4\n"
        "ideal -C + 5*B\n");
    REQUIRE(spec.coarse.relations.size() == 1);
    // 3*(2A - B) + B = 6A - 2B
    CHECK(spec.coarse.relations[0] == std::vector<Int>{6, -2});
    CHECK(spec.points[0].ideal == std::vector<Int>{-2, 6});  // -(2A-B)+5B
}

TEST_CASE("parse errors carry kinds and line numbers") {
    auto expect_error = [](const std::string& text, ParseErrorKind kind, std::size_t line) {
        try {
            (void)stacky::parse_curve_spec(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.kind() == kind);
            CHECK(e.line() == line);
        }
    };

    expect_error("coarse:\ngen L\nclass C = L_Q\n", ParseErrorKind::UnresolvedLabel, 3);
    expect_error("coarse:\ngen L\ngen L\n", ParseErrorKind::DuplicateLabel, 3);
    expect_error("point: x\norder zero\n", ParseErrorKind::BadInteger, 2);
    expect_error("point: x\norder 0\n", ParseErrorKind::BadInteger, 2);
    expect_error("frobnicate\n", ParseErrorKind::Syntax, 1);
    expect_error("coarse:\nrel 2*L\n", ParseErrorKind::UnresolvedLabel, 2);
    expect_error("coarse:\ngen L\nrel 2*L = 1\n", ParseErrorKind::Syntax, 3);
    expect_error("coarse:\ngen L\nrel 2*L + 3 = 0\n", ParseErrorKind::Syntax, 3);
    expect_error("point: x\n", ParseErrorKind::Syntax, 1);  // missing order
    expect_error("gerbe:\nband 1\n", ParseErrorKind::BadInteger, 2);
    expect_error("gerbe:\nlift 2 - Q\n", ParseErrorKind::Syntax, 2);
    expect_error("gerbe:\nh2 2\n", ParseErrorKind::Syntax, 1);  // h2 without obstruction
    expect_error("gerbe:\nband 2,2\nh2 2\nobstruction 1\n", ParseErrorKind::Syntax, 4);
    expect_error("gerbe:\nobstruction 1;1,0\nband 2\nh2 2\n", ParseErrorKind::Syntax, 2);
    expect_error("gerbe:\nband 2\npoint: late\norder 2\n", ParseErrorKind::Syntax, 3);
    expect_error("point: x\norder 2\ncoarse:\n", ParseErrorKind::Syntax, 3);
    expect_error("coarse:\ngen L\nname late\n", ParseErrorKind::Syntax, 3);
    expect_error("point: x\norder 2\npoint: y\norder 2\nideal x\n", ParseErrorKind::Syntax, 5);
}

TEST_CASE("point labels name stage-one classes in lift targets") {
    CurveSpec spec = stacky::parse_curve_spec(
        "coarse:\n"
        "gen L\n"
        "\n"
        "point: I\n"
        "order 2\n"
        "ideal -L\n"
        "\n"
        "gerbe:\n"
        "band 2\n"
        "kernel 2\n"
        "lift 2 -> I - 3*L\n");
    REQUIRE(spec.gerbe);
    REQUIRE(spec.gerbe->lifts.size() == 1);
    // stage-one coordinates: points first, then coarse generators
    CHECK(spec.gerbe->lifts[0].target == std::vector<Int>{1, -3});
}

TEST_CASE("serialization round-trips") {
    for (const std::string& path : kCurveFiles) {
        CurveSpec spec = stacky::parse_curve_spec(slurp(path));
        CurveSpec again = stacky::parse_curve_spec(stacky::serialize_curve_spec(spec));
        CHECK(spec == again);
    }

    // a spec exercising every feature at once
    CurveSpec full = stacky::parse_curve_spec(
        "name everything\n"
        "note first\n"
        "note second\n"
        "coarse:\n"
        "gen A\n"
        "gen B\n"
        "rel 2*A - 6*B = 0\n"
        "class C = A - B\n"
        "point: P\n"
        "order 3\n"
        "ideal 2*C\n"
        "point: Q\n"
        "order 2\n"
        "gerbe:\n"
        "band 2,4\n"
        "kernel 2,2\n"
        "h2 2,0\n"
        "obstruction 0,0;2,0\n"
        "lift 2 -> P + Q - C\n"
        "lift 2 -> 0\n");
    CHECK(full == stacky::parse_curve_spec(stacky::serialize_curve_spec(full)));
}

TEST_CASE("matrix literals") {
    fga::IntegerMatrix m = stacky::parse_matrix_literal("2,0;0,-3");
    CHECK(m.rows() == 2);
    CHECK(m.at(1, 1) == -3);
    CHECK(stacky::parse_matrix_literal("").rows() == 0);
    CHECK(stacky::parse_matrix_literal(" 7 ").at(0, 0) == 7);
    CHECK_THROWS_AS((void)stacky::parse_matrix_literal("1,2;3"), ParseError);
    CHECK_THROWS_AS((void)stacky::parse_matrix_literal("1,,2"), ParseError);
    CHECK_THROWS_AS((void)stacky::parse_matrix_literal("a"), ParseError);
}

TEST_CASE("linear combination formatting") {
    std::vector<std::string> labels{"A", "B"};
    CHECK(stacky::format_linear_combination({0, 0}, labels) == "0");
    CHECK(stacky::format_linear_combination({1, 0}, labels) == "A");
    CHECK(stacky::format_linear_combination({-1, 2}, labels) == "-A + 2*B");
    CHECK(stacky::format_linear_combination({3, -1}, labels) == "3*A - B");
}

TEST_CASE("runs are deterministic") {
    std::string text = slurp(kCurveFiles[1]);
    CurveSpec spec = stacky::parse_curve_spec(text);
    std::string r1 = stacky::render(stacky::run_curve_spec(spec), stacky::RenderFormat::text);
    std::string r2 = stacky::render(stacky::run_curve_spec(stacky::parse_curve_spec(text)),
                                    stacky::RenderFormat::text);
    CHECK(r1 == r2);
}

TEST_CASE("reports carry the documented shape") {
    CurveSpec spec = stacky::parse_curve_spec(slurp(kCurveFiles[1]));
    stacky::PicardReport report = stacky::run_curve_spec(spec);
    CHECK(report.pass());
    CHECK(report.decomposition().torsion == std::vector<Int>{12});

    std::string text = stacky::render(report, stacky::RenderFormat::text);
    CHECK(text.find("\nPic = Z/12\n") != std::string::npos);
    CHECK(text.find("status: PASS") != std::string::npos);

    nlohmann::json doc =
        nlohmann::json::parse(stacky::render(report, stacky::RenderFormat::json));
    for (const char* key :
         {"schema_version", "name", "status", "decomposition", "generators", "checks",
          "assumptions", "stages"})
        CHECK(doc.contains(key));
    CHECK(doc["decomposition"]["torsion"] == nlohmann::json::array({12}));
    CHECK(doc["generators"][0]["label"] == "lift1");
    CHECK(doc["generators"][0]["order"] == 12);
}

TEST_CASE("failed checks flip the overall status") {
    // kernel claims order 2 but the lift says 4
    CurveSpec spec = stacky::parse_curve_spec(
        "coarse:\ngen L\ngerbe:\nband 2\nkernel 2\nlift 4 -> L\n");
    stacky::PicardReport report = stacky::run_curve_spec(spec);
    CHECK(!report.pass());
    std::string text = stacky::render(report, stacky::RenderFormat::text);
    CHECK(text.find("status: FAIL") != std::string::npos);
    CHECK(text.find("lift orders match the kernel orders: FAIL") != std::string::npos);
}

TEST_CASE("cli: compute, verify, enumerate, decompose") {
    std::string out, err;

    CHECK(cli({"compute", kCurveFiles[1]}, "", &out, &err) == 0);
    CHECK(out.find("Pic = Z/12") != std::string::npos);

    CHECK(cli({"compute", "-", "--format", "json"}, slurp(kCurveFiles[0]), &out, &err) == 0);
    CHECK(nlohmann::json::parse(out)["status"] == "PASS");

    CHECK(cli({"verify", kCurveFiles[2]}, "", &out, &err) == 0);
    CHECK(out.find("status: PASS") != std::string::npos);
    CHECK(out.find("group:") == std::string::npos);  // checks only, no report body

    CHECK(cli({"enumerate", kCurveFiles[1]}, "", &out, &err) == 0);
    CHECK(out.find("extension types: 2") != std::string::npos);
    CHECK(out.find("Z/12") != std::string::npos);

    CHECK(cli({"decompose", "2,0;0,3"}, "", &out, &err) == 0);
    CHECK(out == "Z/6\n");
    CHECK(cli({"decompose", "0,0;0,0"}, "", &out, &err) == 0);
    CHECK(out == "Z^2\n");

    // exit code contract
    CHECK(cli({"compute", "-"}, "frobnicate\n", &out, &err) == 1);
    CHECK(err.find("line 1") != std::string::npos);
    CHECK(cli({"compute", "-"}, "coarse:\ngen L\ngerbe:\nband 2\nkernel 2\nlift 4 -> L\n", &out,
              &err) == 2);
    CHECK(cli({"enumerate", "-"}, "coarse:\ngen L\nrel 60000*L = 0\ngerbe:\nband 2\nkernel 2\n",
              &out, &err) == 3);
    CHECK(cli({"compute", "/nonexistent/file.stacky"}, "", &out, &err) == 1);
    CHECK(cli({"decompose", "1,2;3"}, "", &out, &err) == 1);
    CHECK(cli({}, "", &out, &err) == 1);
}

TEST_CASE("verify reports failures with exit code 2") {
    std::string out, err;
    int code = cli({"verify", "-"}, "coarse:\ngen L\ngerbe:\nband 2\nkernel 2\nlift 4 -> L\n",
                   &out, &err);
    CHECK(code == 2);
    CHECK(out.find("FAIL") != std::string::npos);
}

TEST_CASE("fuzz smoke: mutants are rejected with located errors") {
    std::mt19937_64 rng(1234);
    std::vector<std::string> bases;
    for (const std::string& path : kCurveFiles) bases.push_back(slurp(path));
    for (int iter = 0; iter < 200; ++iter) {
        const std::string& base = bases[iter % bases.size()];
        std::string mutant = fuzz::mutate(base, rng);
        try {
            (void)stacky::parse_curve_spec(mutant);
            FAIL_CHECK("mutant parsed cleanly:\n" << mutant);
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
}
