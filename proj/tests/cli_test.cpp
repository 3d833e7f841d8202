#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superkl/weights.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + SUPERKL_BIN + " " + args +
        " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("tpoly replays the six-term expansion") {
    const RunResult r = run("tpoly -m 3 -n 3 -f \"(0,4,1|0,2,3)\" -d 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "T_(0,4,1|0,2,3)  [d = 4]\n"
          "(0,4,1|0,2,3) : 1\n"
          "(1,4,0|0,2,3) : q\n"
          "(1,4,1|1,2,3) : q^2\n"
          "(4,0,1|0,2,3) : q\n"
          "(4,1,0|0,2,3) : q^2\n"
          "(4,1,1|1,2,3) : q^3\n");
}

TEST_CASE("tpoly on a typical weight collapses to one monomial") {
    const RunResult r = run("tpoly -m 1 -n 1 -f \"(0|5)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "T_(0|5)  [d = 9]\n(0|5) : 1\n");
}

TEST_CASE("printed weight literals parse back to themselves") {
    const RunResult r = run("tpoly -m 3 -n 3 -f \"(0,4,1|0,2,3)\" -d 4");
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    int terms = 0;
    while (std::getline(is, line)) {
        const auto cut = line.find(" : ");
        REQUIRE(cut != std::string::npos);
        const skl::Weight f = skl::Weight::parse(line.substr(0, cut));
        CHECK(f.str() == line.substr(0, cut));
        ++terms;
    }
    CHECK(terms == 6);
}

TEST_CASE("exit codes follow the contract") {
    CHECK(run("tpoly -m 3 -n 3 -f \"(0,4,1|0,2,\"").code == 2);
    CHECK(run("tpoly -m 3 -n 3").code == 2);
    CHECK(run("nosuchcommand").code == 2);
    CHECK(run("tpoly -m 3 -n 3 -f \"(0,4,1|0,2,3)\" -d 2").code == 3);
    CHECK(run("tpoly -m 2 -n 3 -f \"(0,4,1|0,2,3)\"").code == 3);
    CHECK(run("upoly -m 2 -n 1 -f \"(1,0|0)\"").code == 3);
    CHECK(run("check --suite nosuch -m 1 -n 1 --box 0..1").code == 3);
    CHECK(run("decomp -m 1 -n 1 --box 4..0").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("upoly prints the four-term expansion") {
    const RunResult r = run("upoly -m 2 -n 2 -f \"(0,3|3,0)\"");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "U_(0,3|3,0)\n"
          "(0,3|3,0) : 1\n"
          "(0,4|4,0) : q\n"
          "(1,3|3,1) : q\n"
          "(1,4|4,1) : q^2\n");
}

TEST_CASE("lpoly agrees between its two routes and prints the coefficient") {
    const RunResult r = run("lpoly -m 2 -n 2 -g \"(2,4|4,2)\" -f \"(0,2|2,0)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "l[(2,4|4,2), (0,2|2,0)] = q^-2 + q^-4\n");
    const RunResult diag = run("lpoly -m 1 -n 1 -g \"(0|5)\" -f \"(0|5)\"");
    CHECK(diag.out == "l[(0|5), (0|5)] = 1\n");
}

TEST_CASE("decomp emits rows, csv and deterministic json") {
    const RunResult text = run("decomp -m 1 -n 1 --lambda \"X:(0|0)\"");
    CHECK(text.code == 0);
    CHECK(text.out == "X:(0|0) : X:(0|0) X:(1|-1)\n");

    const RunResult csv = run("decomp -m 1 -n 1 --box 0..1 --csv");
    CHECK(csv.out ==
          "\"mu\\lambda\",\"X:(0|0)\",\"X:(0|1)\",\"X:(1|0)\",\"X:(1|1)\"\n"
          "\"X:(0|0)\",1,0,0,0\n"
          "\"X:(0|1)\",0,1,0,0\n"
          "\"X:(1|-1)\",1,0,0,0\n"
          "\"X:(1|0)\",0,0,1,0\n"
          "\"X:(1|1)\",0,0,0,1\n");

    const RunResult j1 = run("decomp -m 1 -n 1 --box 0..1 --json");
    const RunResult j2 = run("decomp -m 1 -n 1 --box 0..1 --json");
    CHECK(j1.code == 0);
    CHECK(j1.out == j2.out);
    CHECK(j1.out.find("\"X:(1|-1)\": 1") != std::string::npos);
}

TEST_CASE("tilting lists the kac content of a tilting module") {
    const RunResult r = run("tilting -m 2 -n 2 --lambda \"X:(0,0|0,0)\"");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "X:(0,0|0,0) : X:(-2,-2|2,2) X:(-1,-2|2,1) X:(0,-1|1,0) "
          "X:(0,0|0,0)\n");
}

TEST_CASE("char prints the alternating chain") {
    const RunResult r = run("char -m 1 -n 1 --lambda \"X:(0|0)\" --depth 4");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(SUPERKL_GOLDEN_DIR) +
                         "/char_11_depth4.txt"));
}

TEST_CASE("ext prints the partition series and the kac variant") {
    const RunResult r =
        run("ext -m 2 -n 2 --mu \"X:(0,0|0,0)\" --lambda \"X:(0,0|0,0)\"");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "4*q^12 + 3*q^10 + 3*q^8 + 2*q^6 + 2*q^4 + q^2 + 1\n");
    const RunResult k = run(
        "ext -m 2 -n 2 --mu \"X:(-1,-1|1,1)\" --lambda \"X:(0,0|0,0)\" --kac");
    CHECK(k.out == "q^2\n");
}

TEST_CASE("dual and block print single values") {
    CHECK(run("dual -m 1 -n 1 --lambda \"X:(3|-1)\"").out == "X:(-2|0)\n");
    CHECK(run("block -m 1 -n 1 --lambda \"X:(1|0)\"").out ==
          "{-2:-1, -1:1}\n");
    CHECK(run("block -m 1 -n 1 --lambda \"X:(0|0)\"").out == "{}\n");
}

TEST_CASE("crystal emits a dot graph with stable edges") {
    const RunResult r = run("crystal -m 1 -n 1 --box 0..2 --dot");
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph crystal {") != std::string::npos);
    CHECK(r.out.find("\"(1|0)\" -> \"(0|0)\" [label=\"a=0\"]") !=
          std::string::npos);
    const RunResult d =
        run("crystal -m 1 -n 2 --box 0..3 --kind dominant --dot");
    CHECK(d.out.find("\"(2|2,1)\" -> \"(1|2,1)\" [label=\"a=1\"]") !=
          std::string::npos);
}

TEST_CASE("check suites pass on small boxes") {
    CHECK(run("check --suite strings -m 1 -n 2 --box 0..3").code == 0);
    CHECK(run("check --suite positivity -m 1 -n 1 --box 0..2").code == 0);
    CHECK(run("check --suite routes -m 1 -n 2 --box 0..2 -d 4").code == 0);
    CHECK(run("check --suite kac -m 2 -n 1 --box 0..2").code == 0);
}

TEST_CASE("scan-positivity reports a clean box") {
    const RunResult r = run("scan-positivity -m 1 -n 1 --box 0..2 -d 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("positivity: pass") != std::string::npos);
}

TEST_CASE("output bytes are independent of the worker count") {
    const RunResult a =
        run("check --suite kac -m 2 -n 1 --box 0..2", "SUPERKL_THREADS=1");
    const RunResult b =
        run("check --suite kac -m 2 -n 1 --box 0..2", "SUPERKL_THREADS=3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run("decomp -m 2 -n 1 --box 0..2 --json",
                            "SUPERKL_THREADS=1");
    const RunResult d = run("decomp -m 2 -n 1 --box 0..2 --json",
                            "SUPERKL_THREADS=4");
    CHECK(c.out == d.out);
}

TEST_CASE("output lands in a file when requested") {
    const std::string path = "/tmp/superkl_cli_test_out.txt";
    std::remove(path.c_str());
    const RunResult r =
        run("dual -m 1 -n 1 --lambda \"X:(0|0)\" -o " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "X:(0|0)\n");
    std::remove(path.c_str());
}
