#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

// Runs the installed-style binary through the shell to pin exit statuses and
// stream separation.

namespace {

struct Outcome {
    int status;
    std::string out;
};

Outcome shell(const std::string& args, const std::string& env = "")
{
    const std::string command = env + std::string(ELLRANGE_CLI_PATH) + " " + args;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    for (std::size_t n; (n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0;) {
        out.append(buffer, n);
    }
    const int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST_CASE("exit statuses")
{
    CHECK(shell("--matrix 0,0,1,0,0,0,0,0 contains --point 0,0").status == 0);
    CHECK(shell("--matrix 0,0,1,0,0,0,0,0 contains --point 0.51,0").status == 1);
    CHECK(shell("--matrix garbage contains --point 0,0 2>/dev/null").status == 2);
    CHECK(shell("--matrix 1,0,4,0 range 2>/dev/null").status == 2);
    CHECK(shell("--matrix 1,0,4,0,0,0,-1,0 boundary --points 0 2>/dev/null").status == 2);
    CHECK(shell("--matrix 1,0,4,0,0,0,-1,0 verify --n 1000 --seed 1").status == 0);
    CHECK(shell("--matrix 1,0,4,0,0,0,-1,0 verify --n 0 2>/dev/null").status == 2);
    CHECK(shell("--no-such-flag 2>/dev/null").status == 2);
}

TEST_CASE("diagnostics go to stderr without color under NO_COLOR")
{
    const Outcome quiet = shell("--matrix 1,0,4,0 range 2>/dev/null");
    CHECK(quiet.out.empty());

    const Outcome merged = shell("--matrix 1,0,4,0 range 2>&1");
    CHECK(merged.out.rfind("error: arity error", 0) == 0);

    const Outcome plain = shell("--matrix 1,0,4,0 range 2>&1", "NO_COLOR=1 ");
    CHECK(plain.out.find('\x1b') == std::string::npos);
}

TEST_CASE("stdin and determinism")
{
    const Outcome piped = shell("--stdin range < /dev/null 2>/dev/null");
    CHECK(piped.status == 2);

    const std::string cmd = "--matrix 1,2,3,4,5,6,7,8 sample --n 5000 --seed 3 --format csv";
    CHECK(shell(cmd).out == shell(cmd).out);
    CHECK(shell("sample --matrix 1,2,3,4,5,6,7,8 --n 5000 --seed 3 --format csv").out == shell(cmd).out);
}
