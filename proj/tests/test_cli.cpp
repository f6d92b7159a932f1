// End-to-end tests of the lei binary: exit codes and output bytes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LEI_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kLei3F3 =
    "field = F3\n"
    "dim = 3\n"
    "bracket 1 1 = 3:1\n"
    "bracket 1 2 = 3:1\n";

}  // namespace

TEST_CASE("check: valid algebra exits 0") {
    auto path = write_temp("lei3_f3.txt", kLei3F3);
    auto r = run("check " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "leibniz = true\n");
}

TEST_CASE("check: mutated algebra exits 1 and reports the violating triple") {
    auto path = write_temp("lei3_broken.txt", kLei3F3 + "bracket 3 1 = 1:1\n");
    auto r = run("check " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("leibniz = false\n") == 0);
    CHECK(r.output.find("triple = ") != std::string::npos);
    CHECK(r.output.find("lhs = ") != std::string::npos);
    CHECK(r.output.find("rhs = ") != std::string::npos);
}

TEST_CASE("check: malformed file exits 2") {
    auto path = write_temp("malformed.txt", "field = F3\nbroken line\n");
    CHECK(run("check " + path).exit_code == 2);
}

TEST_CASE("invariants matches golden output") {
    auto path = write_temp("lei3_f3.txt", kLei3F3);
    auto r = run("invariants " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_golden("invariants_lei3_f3.txt"));
}

TEST_CASE("aut: orders and dump") {
    auto path = write_temp("lei3_f3.txt", kLei3F3);
    auto r = run("aut " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "aut_order = 36\n");

    auto dumped = run("aut --dump " + path);
    CHECK(dumped.exit_code == 0);
    std::istringstream lines(dumped.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "aut_order = 36");
    int count = 0;
    std::string prev;
    while (std::getline(lines, line)) {
        ++count;
        CHECK(prev < line);  // sorted, distinct
        prev = line;
    }
    CHECK(count == 36);
}

TEST_CASE("aut: rationals exit 3, tiny budget exits 4") {
    auto pq = write_temp("lei3_q.txt",
                         "field = Q\ndim = 3\nbracket 1 1 = 3:1\nbracket 1 2 = 3:1\n");
    CHECK(run("aut " + pq).exit_code == 3);
    auto p3 = write_temp("lei3_f3.txt", kLei3F3);
    CHECK(run("aut --budget 100 " + p3).exit_code == 4);
}

TEST_CASE("catalog writes canonical files") {
    auto r = run("catalog lei3 --field F5");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "field = F5\ndim = 3\nbracket 1 1 = 3:1\nbracket 1 2 = 3:1\n");
    CHECK(run("catalog lei1 --field Q").output ==
          "field = Q\ndim = 3\nbracket 1 1 = 2:1\nbracket 1 2 = 3:1\n");
    CHECK(run("catalog lei9 --field F5").exit_code == 1);
    CHECK(run("catalog lei1 --field F6").exit_code == 3);
}

TEST_CASE("verify-thm matches golden output over F_3") {
    auto r = run("verify-thm --field F3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_golden("verify_thm_f3.txt"));
    CHECK(run("verify-thm --field F4").exit_code == 3);
}
