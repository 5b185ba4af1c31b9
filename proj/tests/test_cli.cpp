#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Run the installed binary through the shell, merging stderr into the
/// captured stream so error messages are visible to assertions.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QD_CLI_PATH) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int rc = pclose(f);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

/// Run a raw shell command (for environment-variable prefixes).
RunResult run_sh(const std::string& cmd) {
    FILE* f = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int rc = pclose(f);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("fusion pairs print bare sums") {
    RunResult r = run_cli("fusion S:3 C C");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "A + B + C\n");
    REQUIRE(run_cli("fusion S:3 D D").out == "A + C + F + G + H\n");
    REQUIRE(run_cli("fusion S:3 F G").out == "C + H\n");
    // anyons may also be addressed by index
    REQUIRE(run_cli("fusion S:3 2 2").out == "A + B + C\n");
}

TEST_CASE("the equivalence command reports the transposition form") {
    RunResult r = run_cli("equivalence AGL1:3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(first_line(r.out) == "permutation: (C F); J = identity; form PJ verified");
    REQUIRE(contains(r.out, "C = anyon"));

    RunResult r4 = run_cli("equivalence AGL1:4");
    REQUIRE(r4.exit_code == 0);
    REQUIRE(first_line(r4.out) == "permutation: (C F); J = dual map; form PJ verified");

    REQUIRE(run_cli("equivalence S:3").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    RunResult bad = run_cli("anyons Z:x");
    REQUIRE(bad.exit_code == 2);
    REQUIRE(contains(bad.out, "bad group spec"));
    REQUIRE(run_cli("fusion S:3 C").exit_code == 2);
    REQUIRE(run_cli("fusion S:3 C Z").exit_code == 2);
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("reproduce nothing").exit_code == 2);
    REQUIRE(run_cli("--help").exit_code == 0);
}

TEST_CASE("computation limits exit with code 1 and a hint") {
    RunResult capped = run_cli("smatrix A:7 --cap 100");
    REQUIRE(capped.exit_code == 1);
    REQUIRE(contains(capped.out, "hint: raise --cap or QD_ORDER_CAP"));

    RunResult env = run_cli("anyons S:5 --cap 100");
    REQUIRE(env.exit_code == 1);

    // environment variable seeds the cap, the flag wins over it
    REQUIRE(run_sh("QD_ORDER_CAP=10 " QD_CLI_PATH " anyons S:4").exit_code == 1);
    REQUIRE(run_sh("QD_ORDER_CAP=10 " QD_CLI_PATH " anyons S:4 --cap 10000").exit_code == 0);

    RunResult slow = run_cli("fusion Z:6");
    REQUIRE(slow.exit_code == 1);
    REQUIRE(contains(slow.out, "--slow"));
    RunResult forced = run_cli("fusion S:3 --slow");
    REQUIRE(forced.exit_code == 0);
    REQUIRE(contains(forced.out, "C (x) C = A + B + C"));
}

TEST_CASE("json output parses and carries exact entries") {
    RunResult r = run_cli("smatrix Z:2 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["command"] == "smatrix");
    REQUIRE(j["denominator"] == 2);
    REQUIRE(j["entries"].size() == 4);
    REQUIRE(j["entries"][0][0]["den"] == 2);
    REQUIRE(j["entries"][1][3]["num"][0] == -1);

    json a = json::parse(run_cli("anyons S:3 --format json").out);
    REQUIRE(a["anyons"].size() == 8);
    REQUIRE(a["anyons"][0]["name"] == "A");
    REQUIRE(a["anyons"][0]["qdim"] == 1);
    REQUIRE(a["anyons"][3]["qdim"] == 3);

    json t = json::parse(run_cli("tmatrix S:3 --format json").out);
    REQUIRE(t["entries"].size() == 8);

    json f = json::parse(run_cli("fusion S:3 C C --format json").out);
    REQUIRE(f["sum"] == "A + B + C");
    REQUIRE(f["multiplicities"] == json::array({1, 1, 1, 0, 0, 0, 0, 0}));

    json e = json::parse(run_cli("equivalence AGL1:3 --format json").out);
    REQUIRE(e["dual_is_identity"] == true);
    REQUIRE(e["permutation"].size() == 8);

    json c = json::parse(run_cli("classify Z:4 --format json").out);
    REQUIRE(c["applicable"] == false);
    REQUIRE(c["pairs"].empty());
}

TEST_CASE("twists render with the root order attached") {
    RunResult r = run_cli("tmatrix S:3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "-z6"));
    REQUIRE(contains(r.out, "(-1 + z6)"));
}

TEST_CASE("output is byte-identical across runs") {
    RunResult a = run_cli("smatrix S:3");
    RunResult b = run_cli("smatrix S:3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(contains(a.out, "common denominator 6"));
    REQUIRE(run_cli("invariants NF:J9").out == run_cli("invariants NF:J9").out);
}

TEST_CASE("the out flag writes the same payload to a file") {
    const char* path = "cli_out_check.txt";
    std::remove(path);
    RunResult direct = run_cli("anyons S:3");
    RunResult filed = run_cli(std::string("anyons S:3 --out ") + path);
    REQUIRE(filed.exit_code == 0);
    REQUIRE(filed.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    REQUIRE(ss.str() == direct.out);
    std::remove(path);
}

TEST_CASE("invariants listing marks chargeon-fluxion pairs") {
    RunResult r = run_cli("invariants S:3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "(C F)  [chargeon-fluxion]"));
    REQUIRE(contains(r.out, "total: 1; the dual map J itself is an invariant: yes"));
    RunResult pj = run_cli("invariants S:3 --pj");
    REQUIRE(pj.exit_code == 0);
    REQUIRE(contains(pj.out, "(C F)"));
    RunResult none = run_cli("invariants Z:3");
    REQUIRE(none.exit_code == 0);
    REQUIRE(contains(none.out, "(none)"));
}

TEST_CASE("classification narrates the reconstruction") {
    RunResult r = run_cli("classify S:3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "conditions a-g pass"));
    REQUIRE(contains(r.out, "extracted field of order 3"));
    REQUIRE(contains(r.out, "rebuilt affine group isomorphic: yes"));

    RunResult j9 = run_cli("classify NF:J9");
    REQUIRE(j9.exit_code == 0);
    REQUIRE(contains(j9.out, "proper near-field of order 9"));

    RunResult neg = run_cli("classify D:4");
    REQUIRE(neg.exit_code == 0);
    REQUIRE(contains(neg.out, "not applicable"));
}

TEST_CASE("reproduction targets run clean") {
    RunResult s3 = run_cli("reproduce s3");
    REQUIRE(s3.exit_code == 0);
    REQUIRE(contains(s3.out, "s3: ok"));
    RunResult toric = run_cli("reproduce toric");
    REQUIRE(toric.exit_code == 0);
    REQUIRE(contains(toric.out, "toric: ok"));
    RunResult aff = run_cli("reproduce affine:3");
    REQUIRE(aff.exit_code == 0);
    REQUIRE(contains(aff.out, "affine:3: ok"));
    RunResult guard = run_cli("reproduce a6");
    REQUIRE(guard.exit_code == 1);
    REQUIRE(contains(guard.out, "--slow"));
}

TEST_CASE("character table text names its group") {
    RunResult r = run_cli("chartable S:3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "character table of S:3"));
    REQUIRE(contains(r.out, "irrep#2"));
}
