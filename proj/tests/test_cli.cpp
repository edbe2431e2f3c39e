#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "vopkit/rational.hpp"

#ifndef VOPKIT_BIN
#error "VOPKIT_BIN must point at the vopkit executable"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const std::string out_path = "cli_out_" + std::to_string(counter) + ".tmp";
    const std::string err_path = "cli_err_" + std::to_string(counter) + ".tmp";
    ++counter;
    const std::string cmd =
        env + (env.empty() ? "" : " ") + VOPKIT_BIN + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

nlohmann::json parse(const std::string& text) {
    return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("gen emits the documented JSON schema") {
    const auto r = run_cli("gen --kind charlier-appell --P \"-1\" --nmax 4 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = parse(r.out);
    CHECK(doc["spec"]["kind"] == "charlier-appell");
    CHECK(doc["spec"]["P"] == nlohmann::json({"-1"}));
    CHECK(doc["members"].size() == 5);
    CHECK(doc["members"][2] == nlohmann::json({"1", "-3", "1"}));
    CHECK(doc["eigenvalues"][3] == "-3");
    CHECK(doc["ledger"] == nlohmann::json::array());
    CHECK(doc.contains("tildeL"));
}

TEST_CASE("gen with nmax 0 produces the single constant member") {
    const auto r = run_cli("gen --kind charlier-appell --P \"-1\" --nmax 0");
    REQUIRE(r.exit_code == 0);
    CHECK(parse(r.out)["members"] == nlohmann::json({{"1"}}));
}

TEST_CASE("gen of a second-order family has affine eigenvalues") {
    const auto r =
        run_cli("gen --kind meixner-type --P \"0,1/2\" --beta 1 --c 1/2 --nmax 6");
    REQUIRE(r.exit_code == 0);
    const auto doc = parse(r.out);
    REQUIRE(doc["members"].size() == 7);
    const auto slope = vopkit::Rational::from_string(doc["eigenvalues"][1].get<std::string>());
    for (int n = 0; n <= 6; ++n) {
        const auto lambda =
            vopkit::Rational::from_string(doc["eigenvalues"][n].get<std::string>());
        CHECK(lambda == vopkit::Rational(n) * slope);
    }
}

TEST_CASE("identical configs yield byte-identical output") {
    const std::string args = "gen --kind meixner-type --P \"1/3,2\" --beta 1/2 --c 2 --nmax 5";
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("check all passes and records the printed-form discrepancies") {
    const auto r = run_cli("check all --kind charlier-appell --P \"-1\" --nmax 10");
    REQUIRE(r.exit_code == 0);
    const auto ledger = parse(r.out)["ledger"];
    int primary = 0, discrepancies = 0;
    bool saw_sign = false, saw_inverse = false;
    for (const auto& entry : ledger) {
        const std::string name = entry["name"];
        const std::string status = entry["status"];
        if (status == "paper-discrepancy") ++discrepancies;
        if (name == "eigen.sign") saw_sign = true;
        if (name == "eigen.inverse-automorphism") saw_inverse = true;
        for (const char* check : {"eigen", "lowering", "recursion", "orthogonality",
                                  "closed-forms", "degeneracy"}) {
            if (name == check) {
                ++primary;
                CHECK(status == "pass");
            }
        }
    }
    CHECK(primary == 6);  // every selected check exactly once
    CHECK(saw_sign);
    CHECK(saw_inverse);
    CHECK(discrepancies >= 2);
}

TEST_CASE("check rejects a corrupted document with exit 1") {
    const auto gen = run_cli(
        "gen --kind charlier-appell --P \"-1\" --nmax 6 --out cli_family.json");
    REQUIRE(gen.exit_code == 0);
    auto doc = parse(slurp("cli_family.json"));

    SUBCASE("corrupted operator coefficient") {
        doc["tildeL"]["0"][0] = "1/7";
        std::ofstream("cli_bad1.json") << doc.dump();
        const auto r = run_cli("check eigen --in cli_bad1.json");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("eigen") != std::string::npos);
        std::remove("cli_bad1.json");
    }

    SUBCASE("corrupted member polynomial") {
        doc["members"][3][0] = "9";
        std::ofstream("cli_bad2.json") << doc.dump();
        const auto eigen = run_cli("check eigen --in cli_bad2.json");
        CHECK(eigen.exit_code == 1);
        const auto recursion = run_cli("check recursion --in cli_bad2.json");
        CHECK(recursion.exit_code == 1);
        std::remove("cli_bad2.json");
    }

    SUBCASE("intact document passes") {
        const auto r = run_cli("check all --in cli_family.json");
        CHECK(r.exit_code == 0);
    }
    std::remove("cli_family.json");
}

TEST_CASE("degeneracy check reports the truncation index") {
    const auto r = run_cli(
        "check degeneracy --kind meixner-type --P \"1,1\" --beta -5 --c 1/2 --nmax 8");
    REQUIRE(r.exit_code == 0);
    const auto ledger = parse(r.out)["ledger"];
    bool found = false;
    for (const auto& entry : ledger) {
        if (entry["name"] != "degeneracy") continue;
        for (const auto& zero : entry["data"]) {
            if (zero["n"] == 5) found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("classical comparisons") {
    CHECK(run_cli("classical --kind charlier --a 2 --nmax 8").exit_code == 0);
    CHECK(run_cli("classical --kind charlier --a 0 --nmax 4").exit_code == 2);

    const auto meixner = run_cli("classical --kind meixner --beta 3 --c 1/3 --nmax 8");
    REQUIRE(meixner.exit_code == 0);
    const auto doc = parse(meixner.out);
    CHECK(doc["meixnerForm"]["scale"] == "1/3");
    CHECK(doc["meixnerForm"]["beta"] == "4");
    CHECK(doc["meixnerForm"]["c"] == "-1");
    CHECK(doc["membersMatchOracle"] == true);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("gen --kind nosuch --P \"1\"").exit_code == 2);
    CHECK(run_cli("gen --kind charlier-appell").exit_code == 2);            // missing --P
    CHECK(run_cli("gen --kind charlier-appell --P \"0\"").exit_code == 2);  // zero top coeff
    CHECK(run_cli("gen --kind charlier-appell --P \"-1\" --format yaml").exit_code == 2);
    CHECK(run_cli("check bogus --kind charlier-appell --P \"-1\"").exit_code == 2);
    CHECK(run_cli("gen --kind meixner-type --P \"1\" --beta 1 --c 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("config dump is canonical") {
    const auto a = run_cli("gen --kind charlier-appell --P \"-2/2\" --nmax 4 --dump-config");
    const auto b = run_cli("gen --kind charlier --P \"-1\" --nmax 4 --dump-config");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);  // same canonical config from equivalent spellings

    // Rebuilding the command line from the dump reproduces the dump.
    const auto cfg = parse(a.out);
    std::string args = std::string(cfg["command"]) + " --kind " +
                       std::string(cfg["kind"]) + " --P \"" +
                       std::string(cfg["P"][0]) + "\" --nmax " +
                       std::to_string(int(cfg["nmax"])) + " --format " +
                       std::string(cfg["format"]) + " --dump-config";
    const auto c = run_cli(args);
    CHECK(c.out == a.out);
}

TEST_CASE("VOPKIT_MAX_ORDER controls the series guard") {
    CHECK(run_cli("gen --kind charlier-appell --P \"-1\" --nmax 2",
                  "VOPKIT_MAX_ORDER=abc").exit_code == 2);
    CHECK(run_cli("gen --kind charlier-appell --P \"-1\" --nmax 2",
                  "VOPKIT_MAX_ORDER=0").exit_code == 2);
    // The second-order algebra needs two adjoint steps on x; order 1 is
    // enough for L (ad^2(L) = 0), so generation still succeeds...
    const auto ok = run_cli("gen --kind meixner-type --P \"1\" --beta 1 --c 1/3 --nmax 3",
                            "VOPKIT_MAX_ORDER=1");
    CHECK(ok.exit_code == 0);
    // ...but the closed-form check needs sigma(x), which has adjoint order 3.
    const auto r = run_cli(
        "check closed-forms --kind meixner-type --P \"1\" --beta 1 --c 1/3 --nmax 3",
        "VOPKIT_MAX_ORDER=1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("csv and text formats") {
    const auto csv = run_cli("gen --kind charlier-appell --P \"-1\" --nmax 3 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("n,coefficients") == 0);

    const auto table = run_cli(
        "check recursion --kind charlier-appell --P \"-1\" --nmax 4 --format csv");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("n,gamma_0,gamma_1") == 0);

    const auto text = run_cli("check eigen --kind charlier-appell --P \"-1\" --nmax 4 "
                              "--format text");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("PASS eigen") != std::string::npos);
}
