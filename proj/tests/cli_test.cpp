#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    std::string out;
    int code = -1;
};

CliResult run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + std::string(ASKEY_CLI) + " " + args + " 2>&1";
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Cli, Normalize) {
    const CliResult r = run("normalize \"f*e\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(q)/(q^2 - 1)*K - (q)/(q^2 - 1)*k + e*f\n");
    EXPECT_EQ(run("normalize --algebra delta \"B*A\"").out, "-(q^2 - 1)*ga + (q^3 - q^-1)*C + q^2*A*B\n");
}

TEST(Cli, NormalizedOutputParsesBack) {
    const CliResult r = run("normalize \"q*x*y*z - Lam\"");
    ASSERT_EQ(r.code, 0);
    std::string printed = r.out.substr(0, r.out.size() - 1);
    const CliResult again = run("normalize \"" + printed + "\"");
    EXPECT_EQ(again.out, r.out);
}

TEST(Cli, Map) {
    EXPECT_EQ(run("map 1").out, "1\n");
    const CliResult al = run("map al");
    EXPECT_EQ(al.code, 0);
    // agrees with the closed form written in the tensor algebra
    EXPECT_EQ(run("normalize --algebra tensor \"Lam*(a + a^-1) + (b + b^-1)*(c + c^-1)\"").out, al.out);
}

TEST(Cli, ProjectAndAct) {
    EXPECT_EQ(run("project --degree 1 x").out, run("normalize -- \"-q^-1*nz*Y\"").out);
    EXPECT_EQ(run("project --degree 2 x").out, "0\n");
    EXPECT_EQ(run("act --auto rho A").out, "B\n");
    EXPECT_EQ(run("act --auto \"sigma~\" Lam").out, run("normalize --algebra tensor Lam").out);
    const CliResult bad = run("act --auto \"rho~\" Y");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("not in U'"), std::string::npos);
}

TEST(Cli, ModuleEval) {
    EXPECT_EQ(run("module-eval --n 2 --q 3/2 Lam").out, "[793/216 0 0; 0 793/216 0; 0 0 793/216]\n");
    EXPECT_EQ(run("module-eval --n 1 --q 1 e").code, 2);
    EXPECT_EQ(run("module-eval --n 1 --q 2 --a 0 a").code, 2);
}

TEST(Cli, Errors) {
    const CliResult parse = run("normalize \"e*(f\"");
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.out.find("position 4"), std::string::npos);
    const CliResult context = run("normalize \"A*e\"");
    EXPECT_EQ(context.code, 2);
    EXPECT_NE(context.out.find("context error at position 0"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run("check u-identities").code, 0);
    EXPECT_EQ(run("check u-identities --mutate sign-flip").code, 1);
    EXPECT_EQ(run("check grading --mutate wrong-degree").code, 1);
    EXPECT_NE(run("check nope").code, 0);
}

TEST(Cli, JsonDeterministic) {
    const CliResult a = run("check tensor --json --seed 7");
    const CliResult b = run("check tensor --json --seed 7");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"suite\": \"tensor\""), std::string::npos);
    EXPECT_NE(a.out.find("\"seed\": 7"), std::string::npos);
    EXPECT_NE(a.out.find("\"version\""), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
    const CliResult r = run("check tensor --json --seed 7");
    const CliResult e = run("check tensor --json --seed 7", "UAW_SEED=11 ");
    EXPECT_NE(e.out.find("\"seed\": 11"), std::string::npos);
    EXPECT_NE(r.out, e.out);
}

TEST(Cli, FailedCheckCarriesResidual) {
    const CliResult r = run("check u-identities --json --mutate sign-flip");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\"residual\": \"(2 - 2*q^-2)*e\""), std::string::npos);
}
