#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string cli_bin() {
    const char* env = std::getenv("WYTHOFF_CLI_BIN");
    REQUIRE_MESSAGE(env != nullptr, "WYTHOFF_CLI_BIN must point at the CLI binary");
    return env;
}

std::string golden_dir() {
    const char* env = std::getenv("WYTHOFF_GOLDEN_DIR");
    REQUIRE_MESSAGE(env != nullptr, "WYTHOFF_GOLDEN_DIR must point at the golden files");
    return env;
}

RunResult run_command(std::string cmd, const std::string& stdin_data) {
    cmd += " 2>/dev/null";
    if (!stdin_data.empty()) {
        // feed stdin through a heredoc-free temp file
        char tmpl[] = "/tmp/wythoff_cli_in_XXXXXX";
        const int fd = mkstemp(tmpl);
        REQUIRE(fd >= 0);
        FILE* f = fdopen(fd, "w");
        std::fwrite(stdin_data.data(), 1, stdin_data.size(), f);
        std::fclose(f);
        cmd += std::string(" < ") + tmpl;
    }
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int st = pclose(pipe);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    return run_command(cli_bin() + " " + args, stdin_data);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(is.good(), ("missing file: " + path));
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("seq reproduces the golden tables byte for byte") {
    const RunResult t1 = run("seq --m 1 --p 3 --count 16");
    CHECK(t1.exit_code == 0);
    CHECK(t1.output == slurp(golden_dir() + "/table1_seq.tsv"));

    const RunResult t2 = run("seq --m 2 --p 3 --count 16 --format tsv");
    CHECK(t2.exit_code == 0);
    CHECK(t2.output == slurp(golden_dir() + "/table2_seq.tsv"));
}

TEST_CASE("seq emits classical Wythoff pairs") {
    const RunResult r = run("seq --m 1 --p 1 --count 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "n\ta\tb\tdiff\n0\t0\t0\t0\n1\t1\t2\t1\n2\t3\t5\t2\n3\t4\t7\t3\n4\t6\t10\t4\n");
}

TEST_CASE("seq json parses and is deterministic") {
    const RunResult a = run("seq --m 2 --p 3 --count 5 --format json");
    const RunResult b = run("seq --m 2 --p 3 --count 5 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"rows\"") != std::string::npos);
}

TEST_CASE("solve pairs emits the published rows") {
    const RunResult r = run("solve --game modulo --m 2 --l 0 --p 2 --bound 25 --out pairs");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0\t0\t0\t0\n") != std::string::npos);
    CHECK(r.output.find("1\t0\t3\t3\n") != std::string::npos);
    CHECK(r.output.find("3\t1\t9\t8\n") != std::string::npos);
}

TEST_CASE("solve grid marks terminals and the cut") {
    const RunResult r = run("solve --game shifted --m 2 --p 3 --l 1 --bound 6 --out grid");
    CHECK(r.exit_code == 0);
    // bottom row (y = 0): cut occupies x < 4, (4,0) is P
    std::istringstream is(r.output);
    std::string line, last;
    while (std::getline(is, line))
        if (!line.empty()) last = line;
    CHECK(last == "####P..");
    // (0,2) is P: row y = 2 is the 5th line from the top at bound 6
    CHECK(r.output.find("\nP") != std::string::npos);
}

TEST_CASE("solve ppm is a valid P6 raster") {
    const RunResult r = run("solve --game blocking --m 1 --p 1 --bound 3 --out grid --format ppm");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 9) == "P6\n4 4\n25");
    CHECK(r.output.size() == std::string("P6\n4 4\n255\n").size() + 4 * 4 * 3);
}

TEST_CASE("solve svg contains unit squares") {
    const RunResult r = run("solve --game modulo --m 1 --l 0 --p 3 --bound 8 --out grid --format svg");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("<svg") != std::string::npos);
    CHECK(r.output.find("fill=\"black\"") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const RunResult ok = run("verify --suite mex --m 2 --p 3 --bound 200");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("verdict=pass") != std::string::npos);

    const RunResult gcd = run("verify --suite main-theorem --m 2 --p 2 --bound 60");
    CHECK(gcd.exit_code == 0);
    CHECK(gcd.output.find("expects-mismatch") != std::string::npos);

    const RunResult usage = run("verify --suite nonsense --m 2 --p 2 --bound 10");
    CHECK(usage.exit_code == 2);

    // index-bound suites are not subject to the board safety cap
    const RunResult lemmas = run("verify --suite lemmas --m 3 --p 2 --bound 10000");
    CHECK(lemmas.exit_code == 0);
    const RunResult capped = run("verify --suite main-theorem --m 1 --p 1 --bound 5000");
    CHECK(capped.exit_code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
    const std::string args = "verify --suite all --m 2 --p 3 --bound 60 --format json";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("explore emits the conjecture verdicts") {
    const RunResult r = run("explore --game modulo --m 2 --l 0 --p 2 --bound 50");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1\t0\t3\t3\n") != std::string::npos);
    CHECK(r.output.find("# arithmetic-progression=no first-violation=n=2") != std::string::npos);
    CHECK(r.output.find("# census=pass") != std::string::npos);

    const RunResult bl = run("explore --game blocking-l --m 2 --p 2 --l 1 --bound 40");
    CHECK(bl.exit_code == 0);
    CHECK(bl.output.find("n\tc\td\tdiff\n") != std::string::npos);
}

TEST_CASE("bound safety cap") {
    const RunResult over = run("solve --game blocking --m 1 --p 1 --bound 2001 --out pairs");
    CHECK(over.exit_code == 2);
    // the env var lifts the cap
    const RunResult lifted = run_command(
        "WYTHOFF_MAX_BOUND=2100 " + cli_bin() +
            " solve --game blocking --m 1 --p 1 --bound 2050 --out pairs >/dev/null",
        "");
    CHECK(lifted.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("solve --game bogus --m 1 --p 1 --bound 5").exit_code == 2);
    CHECK(run("solve --game shifted --m 2 --p 3 --bound 5").exit_code == 2);  // missing --l
    CHECK(run("seq --m 0 --p 1").exit_code == 2);
}

TEST_CASE("play walkthrough: blocking{2,2} from (0,2)") {
    // Engine (previous player) blocks (0,0); the human is forced to (0,1);
    // the bishop reply (0,1) -> (0,0) cannot be blocked, engine wins.
    const RunResult r = run("play --game blocking --m 2 --p 2 --x 0 --y 2", "move 0 1\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("engine blocks: (0, 0)") != std::string::npos);
    CHECK(r.output.find("engine moves to (0, 0)") != std::string::npos);
    CHECK(r.output.find("you have no legal moves -- engine wins.") != std::string::npos);
}

TEST_CASE("play rejects blocked and malformed moves") {
    const std::string script = "move 0 0\nmove 5 5\nmove 0 1\nquit\n";
    const RunResult r = run("play --game blocking --m 2 --p 2 --x 0 --y 2", script);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("was blocked off") != std::string::npos);
    CHECK(r.output.find("coordinates may not grow") != std::string::npos);
}

TEST_CASE("play walkthrough: the human wins blocking{2,2} from (0,3)") {
    // (0,3) is N: the bishop move to (0,2) cannot be blocked; the human then
    // blocks the engine's only roob option (0,0), squeezes it to (0,1), and
    // takes the last token.
    const std::string script = "move 0 2\nblock 0 0\nmove 0 0\n";
    const RunResult r = run("play --game blocking --m 2 --p 2 --x 0 --y 3", script);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("you move to (0, 2)") != std::string::npos);
    CHECK(r.output.find("engine moves to (0, 1)") != std::string::npos);
    CHECK(r.output.find("engine has no legal moves -- you win!") != std::string::npos);
}

TEST_CASE("play walkthrough: blocking{2,3} from (0,4)") {
    // The engine blocks two of its three roob targets. After the human moves
    // to (0,3), the compound option (0,2) cannot be blocked and the engine
    // wins through it or the surviving roob.
    const std::string script = "move 0 3\nblock 0 2\ndone\n";
    const RunResult r = run("play --game blocking --m 2 --p 3 --x 0 --y 4", script);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("engine blocks: (0, 0) (0, 2)") != std::string::npos);
    CHECK(r.output.find("(0, 2) is not a blockable option here") != std::string::npos);
    CHECK(r.output.find("engine wins") != std::string::npos);
}

TEST_CASE("play walkthrough: modulo{2,0,2} from (0,3)") {
    // (0,3) is P: whatever the human does, the engine wins.
    const RunResult r = run("play --game modulo --m 2 --l 0 --p 2 --x 0 --y 3", "move 0 1\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("engine moves to (0, 0)") != std::string::npos);
    CHECK(r.output.find("engine wins") != std::string::npos);
}

TEST_CASE("play on a rectangular cut board") {
    // (2,3) on the 2x3-cut board; quitting immediately must leave a clean exit
    const RunResult r = run("play --game shifted-rect --m 1 --p 2 --u 2 --v 3 --x 2 --y 3",
                            "quit\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("position: (2, 3)") != std::string::npos);
    // a start inside the cut is a usage error
    const RunResult bad = run("play --game shifted-rect --m 1 --p 2 --u 2 --v 3 --x 1 --y 2",
                              "");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("play walkthrough: the choice game picks l = 1 at (1,9) and wins") {
    const RunResult r = run("play --game shifted-choice --m 2 --p 3 --x 1 --y 9", "move 1 4\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("engine chooses l = 1") != std::string::npos);
    // the reply lands on the terminal (0,2) of the 1-shifted board
    CHECK(r.output.find("engine moves to (0, 2)") != std::string::npos);
    CHECK(r.output.find("engine wins") != std::string::npos);
}
