#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the CLI binary, capture stdout and the exit code
RunResult run(const std::string& args, bool quiet_stderr = false) {
    std::string cmd = std::string(MUBLAB_BIN) + " " + args;
    if (quiet_stderr) cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void shell(const std::string& cmd) { REQUIRE(std::system(cmd.c_str()) == 0); }

} // namespace

TEST_CASE("cli: certificate run passes with exit 0") {
    const RunResult r = run("certify --p 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"NONEXISTENT\"") != std::string::npos);
    CHECK(r.out.find("\"branch\": \"mersenne\"") != std::string::npos);
    CHECK(r.out.find("sign_sum_infeasibility") != std::string::npos);
}

TEST_CASE("cli: domain errors exit 2") {
    CHECK(run("certify --p 9", true).exit_code == 2);
    CHECK(run("certify --p 2", true).exit_code == 2);
    CHECK(run("mub build --d 6", true).exit_code == 2);
    CHECK(run("gf ops --q 12", true).exit_code == 2);
}

TEST_CASE("cli: usage errors exit 2, help exits 0") {
    CHECK(run("definitely-not-a-command", true).exit_code == 2);
    CHECK(run("certify", true).exit_code == 2);       // missing required --p
    CHECK(run("", true).exit_code == 2);              // missing subcommand
    CHECK(run("--help", true).exit_code == 0);
    CHECK(run("certify --help", true).exit_code == 0);
}

TEST_CASE("cli: reruns are byte-identical") {
    const std::string args = "certify --p 3 --restarts 5 --seed 42";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("fiducial_search") != std::string::npos);

    const RunResult c = run("mub build --d 5 --verify");
    const RunResult d = run("mub build --d 5 --verify");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("cli: basis construction and rank report") {
    const RunResult r = run("mub build --d 3 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"outcome\": \"pass\"") != std::string::npos);

    const RunResult ic = run("mub ic --d 5");
    CHECK(ic.exit_code == 0);
    CHECK(ic.out.find("\"rank\": 25") != std::string::npos);
}

TEST_CASE("cli: group, field, representation and scan reports") {
    CHECK(run("gf ops --q 8").exit_code == 0);
    CHECK(run("group build --q 8 --sylow 7 --kernel").exit_code == 0);
    CHECK(run("rep check --q 4").exit_code == 0);
    const RunResult s = run("scan --order 12");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("\"faithful_at_target_count\": 1") != std::string::npos);
    CHECK(s.out.find("A4") != std::string::npos);
}

TEST_CASE("cli: stored files round-trip through the covariance check") {
    const std::string mub_path = "/tmp/mublab_cli_mub2.json";
    const std::string grp_path = "/tmp/mublab_cli_witness.json";
    CHECK(run("mub build --d 2 --out " + mub_path).exit_code == 0);
    CHECK(run("cov qubit-witness --out " + grp_path).exit_code == 0);

    const RunResult r =
        run("cov check --mub " + mub_path + " --group " + grp_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(r.out.find("\"orbit_size\": 6") != std::string::npos);

    std::remove(mub_path.c_str());
    std::remove(grp_path.c_str());
}

TEST_CASE("cli: failed check reports and exits 1") {
    // identity-only collineation set is closed but has the wrong order
    const std::string mub_path = "/tmp/mublab_cli_mub2b.json";
    const std::string grp_path = "/tmp/mublab_cli_trivial_group.json";
    CHECK(run("mub build --d 2 --out " + mub_path).exit_code == 0);
    {
        std::ofstream f(grp_path);
        f << R"({"dim": 2, "collineations": [{"matrix": )"
          << R"([[["1","0"],["0","0"]],[["0","0"],["1","0"]]], )"
          << R"("antiunitary": false}]})";
    }
    const RunResult r =
        run("cov check --mub " + mub_path + " --group " + grp_path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
    CHECK(r.out.find("group order 1 != 6") != std::string::npos);

    std::remove(mub_path.c_str());
    std::remove(grp_path.c_str());
}

TEST_CASE("cli: text format flattens the report") {
    const RunResult r = run("certify --p 5 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict = NONEXISTENT") != std::string::npos);
    CHECK(r.out.find("branch = not-mersenne") != std::string::npos);
}

TEST_CASE("cli: default output directory via environment variable") {
    const std::string dir = "/tmp/mublab_cli_outdir";
    shell("rm -rf " + dir + " && mkdir -p " + dir);
    std::string cmd = "MUBLAB_OUT=" + dir + " " + MUBLAB_BIN + " certify --p 3";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.empty()); // report went to the file, not stdout
    const std::string report = slurp(dir + "/certify-p3.json");
    CHECK(report.find("\"verdict\": \"NONEXISTENT\"") != std::string::npos);
    shell("rm -rf " + dir);
}
