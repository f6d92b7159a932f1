#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include <fstream>
#include <sstream>

using namespace lt;

namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parsing the canonical lei3 file") {
    std::string text =
        "field = F5\n"
        "dim = 3\n"
        "bracket 1 1 = 3:1\n"
        "bracket 1 2 = 3:1\n";
    Algebra alg = parse_algebra_file(text);
    CHECK(alg == make_lei3(FieldSpec::prime(5)));
}

TEST_CASE("parser accepts comments, blank lines, and sums") {
    std::string text =
        "# a 2-dim example\n"
        "field = Q\n"
        "\n"
        "dim = 2\n"
        "bracket 1 1 = 1:1/2 + 2:-3\n";
    Algebra alg = parse_algebra_file(text);
    CHECK(alg.c(0, 0, 0).str() == "1/2");
    CHECK(alg.c(0, 0, 1).str() == "-3");
}

TEST_CASE("a file with no brackets is abelian") {
    Algebra alg = parse_algebra_file("field = Q\ndim = 1\n");
    CHECK(alg.dim() == 1);
    CHECK(alg.c(0, 0, 0).is_zero());
}

TEST_CASE("parser rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_algebra_file("field = F4\ndim = 3\n"), BadField);
    CHECK_THROWS_AS(parse_algebra_file("dim = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("field = Q\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("field = Q\ndim = 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra_file("field = Q\ndim = 3\nbracket 1 4 = 1:1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra_file("field = Q\ndim = 3\nbracket 1 1 = 4:1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra_file("field = Q\ndim = 3\nbracket 1 1 = 1:1 + 1:2\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_algebra_file("field = Q\ndim = 3\nbracket 1 1 = 1:1\n"
                           "bracket 1 1 = 1:2\n"),
        ParseError);
    CHECK_THROWS_AS(parse_algebra_file("field = Q\ndim = 3\nnonsense\n"),
                    ParseError);
    try {
        parse_algebra_file("field = Q\ndim = 3\nbracket 1 4 = 1:1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("render and parse round-trip on the catalog") {
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2),
                          FieldSpec::prime(3), FieldSpec::prime(5)})
        for (const auto& alg : {make_lei1(f), make_lei2(f), make_lei3(f)})
            CHECK(parse_algebra_file(render_algebra_file(alg)) == alg);
}

TEST_CASE("rendering") {
    auto f3 = FieldSpec::prime(3);
    CHECK(render_vector(vec(f3, {0, 1, 2})) == "[0,1,2]");
    CHECK(render_subspace(Subspace(f3, 3)) == "(empty)");
    CHECK(render_subspace(sp(f3, 3, {{0, 1, 0}, {0, 0, 1}})) ==
          "[0,1,0];[0,0,1]");
    CHECK(render_matrix_flat(Matrix::identity(f3, 2)) == "1 0 0 1");
    Report r;
    r.add("a", "1");
    r.add("b", "x");
    CHECK(r.str() == "a = 1\nb = x\n");
}

TEST_CASE("invariants reports match the pinned golden bytes over F_3") {
    auto f3 = FieldSpec::prime(3);
    CHECK(invariants_report(make_lei1(f3)).str() ==
          read_golden("invariants_lei1_f3.txt"));
    CHECK(invariants_report(make_lei2(f3)).str() ==
          read_golden("invariants_lei2_f3.txt"));
    CHECK(invariants_report(make_lei3(f3)).str() ==
          read_golden("invariants_lei3_f3.txt"));
}

TEST_CASE("theorem report matches the pinned golden bytes over F_3") {
    CHECK(theorem_report(verify_theorem(FieldSpec::prime(3))).str() ==
          read_golden("verify_thm_f3.txt"));
}
