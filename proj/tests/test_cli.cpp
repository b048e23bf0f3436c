#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ABEL3_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "ABEL3_CLI must point at the binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[512];
    while (size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli basic values") {
    auto r = run_cli("conj-dt --beta 1 --n 1");
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");

    CHECK(run_cli("disc --v 1,0,0,-1").out == "-1\n");
    CHECK(run_cli("pair --v 1,0,0,0 --w 0,0,0,1").out == "1\n");
    CHECK(run_cli("act --g 1,1,0,1 --v 1,0,0,0").out == "(1,1,1,1)\n");
    CHECK(run_cli("conj-dt --beta 0 --n 2").out == "-5/2\n");
}

TEST_CASE("cli decompose and wallterm") {
    CHECK(run_cli("decompose --v 2,1,1,1").out == "(1,0,1) + (1,1,1)\n");
    CHECK(run_cli("decompose --v 1,0,-1,-1").out == "none\n");
    CHECK(run_cli("wallterm --v 1,0,0,-1").out == "1\n");

    auto fail = run_cli("wallterm --v 1,0,-1,-1");
    CHECK(fail.code == 1);
}

TEST_CASE("cli orbit includes the anchor image") {
    auto r = run_cli("fm-orbit --beta 1 --n 1 --bound 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("(7,37)") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("disc").code == 2);           // missing --v
    CHECK(run_cli("disc --v 1,2").code == 2);   // wrong arity
    CHECK(run_cli("conj-dt --beta 0 --n 0").code == 1);
}

TEST_CASE("cli svg emission") {
    std::string path = "cli_walls_test.svg";
    auto r = run_cli("walls --v 2,1,1,1 --svg " + path +
                     " --viewport -1,2,1.5");
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content.find("<circle") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run_cli("walls --v 2,1,1,1 --svg x.svg").code == 2);  // no viewport
}

TEST_CASE("cli quest and spin") {
    CHECK(run_cli("quest --beta 0 --n 1 --bound 10").code == 0);
    CHECK(run_cli("spin-check --bound 5 --seed 7").code == 0);
}
