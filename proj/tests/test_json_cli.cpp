#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fdr/cli.hpp"
#include "fdr/identities.hpp"
#include "fdr/symf_json.hpp"

using namespace fdr;

namespace {
using QS = SymF<mpq_class>;

QS s(std::vector<int> parts) { return QS::s(Partition(std::move(parts))); }

SymQT qt_s(std::vector<int> parts, RatFuncQT c) {
    return SymQT::single(Basis::s, Partition(std::move(parts)), std::move(c));
}

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Writes JSON to a scratch file and removes it on scope exit.
struct TempJson {
    std::filesystem::path path;
    explicit TempJson(const nlohmann::json& j, const char* stem) {
        path = std::filesystem::temp_directory_path() / (std::string("fdr_test_") + stem + ".json");
        std::ofstream f(path);
        f << j.dump(2);
    }
    ~TempJson() { std::filesystem::remove(path); }
};
}  // namespace

TEST_CASE("SymF JSON round trips in every basis") {
    for (Basis b : {Basis::e, Basis::h, Basis::p, Basis::m, Basis::s}) {
        QS f = (s({3, 1}) - s({2, 2}).scaled(mpq_class(1, 2))).to(b);
        nlohmann::json j = symf_to_json(f);
        CHECK(j.at("degree") == 4);
        CHECK(symf_q_from_json(j) == f);
    }
    QS zero(Basis::s);
    CHECK(symf_q_from_json(symf_to_json(zero)) == zero);
}

TEST_CASE("SymF JSON round trips with rational-function coefficients") {
    SymQT f = qt_s({2}, RatFuncQT(PolyQT(1) - PolyQT::q() * PolyQT::t(), PolyQT(1) - PolyQT::q())) +
              qt_s({1, 1}, RatFuncQT(PolyQT(-3)));
    nlohmann::json j = symf_to_json(f);
    CHECK(symf_qt_from_json(j) == f);
}

TEST_CASE("SymF JSON rejects malformed input") {
    nlohmann::json bad = {{"basis", "s"},
                          {"degree", 2},
                          {"terms", {{{"lambda", {2}}, {"coeff", "1"}},
                                     {{"lambda", {1}}, {"coeff", "1"}}}}};
    CHECK_THROWS_AS(symf_q_from_json(bad), std::invalid_argument);

    nlohmann::json mismatch = {{"basis", "s"},
                               {"degree", 3},
                               {"terms", {{{"lambda", {2}}, {"coeff", "1"}}}}};
    CHECK_THROWS_AS(symf_q_from_json(mismatch), std::invalid_argument);

    nlohmann::json hbasis = {{"basis", "H"},
                             {"degree", 2},
                             {"terms", {{{"lambda", {2}}, {"coeff", "1"}}}}};
    CHECK_THROWS_AS(symf_qt_from_json(hbasis), std::invalid_argument);
    MacdonaldExpansion exp = macdonald_expansion_from_json(hbasis);
    CHECK(exp.degree == 2);
    CHECK(from_macdonald(exp, Basis::s) == macdonald(Partition({2}), Basis::s));
}

TEST_CASE("bigraded table JSON and text") {
    BigradedTable t;
    t.n = 2;
    t.entries.emplace(std::pair{0, 0}, s({2}));
    t.entries.emplace(std::pair{0, 1}, s({1, 1}));
    BigradedTable back = bigraded_table_from_json(bigraded_table_to_json(t));
    CHECK(back.n == 2);
    CHECK(back.entries.size() == 2);
    CHECK(back.entry(0, 0) == s({2}));
    CHECK(back.entry(0, 1) == s({1, 1}));
    CHECK(bigraded_table_to_text(t).find("(0,0): s[2]") != std::string::npos);

    BigradedTable empty;
    CHECK(bigraded_table_to_json(empty).dump() == "{}");
    CHECK(bigraded_table_to_text(empty) == "(empty)\n");
    CHECK(bigraded_table_from_json(nlohmann::json::object()).entries.empty());
}

TEST_CASE("character table JSON shape") {
    nlohmann::json j = char_table_to_json(CharTable::of(3));
    CHECK(j.at("n") == 3);
    REQUIRE(j.at("partitions").size() == 3);
    REQUIRE(j.at("table").size() == 3);
    CHECK(j.at("table")[0] == nlohmann::json({"1", "1", "1"}));
    CHECK(j.at("table")[2] == nlohmann::json({"1", "-1", "1"}));
}

TEST_CASE("cli: usage and exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"kronecker", "--a", "1,2", "--b", "2,1"}).code == 2);
    CHECK(run({"kronecker", "--a", "2", "--b", "1,1,1"}).code == 2);
    CHECK(run({"verify", "unknown-identity"}).code == 2);
    CHECK(run({"verify", "hook-skew", "--j", "1"}).code == 2);
    CHECK(run({"fdr", "--n", "10", "--method", "formula"}).code == 2);
    CHECK(run({"fdr", "--n", "7", "--method", "oracle"}).code == 2);
    CliResult capped = run({"fdr", "--n", "10", "--method", "formula"});
    CHECK(capped.err.find("default cap") != std::string::npos);
    CHECK(capped.err.find("--unsafe") != std::string::npos);
}

TEST_CASE("cli: fdr table in JSON matches the bidegree formula") {
    CliResult r = run({"fdr", "--n", "2", "--method", "formula", "--json"});
    REQUIRE(r.code == 0);
    BigradedTable t = bigraded_table_from_json(nlohmann::json::parse(r.out));
    CHECK(t.n == 2);
    CHECK(t.entries.size() == 3);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) CHECK(t.entry(i, j) == fdr_formula(2, i, j));

    CliResult again = run({"fdr", "--n", "2", "--method", "formula", "--json"});
    CHECK(again.out == r.out);

    CliResult oracle = run({"fdr", "--n", "2", "--method", "oracle"});
    REQUIRE(oracle.code == 0);
    CHECK(oracle.out.find("(0,0): s[2]") != std::string::npos);
}

TEST_CASE("cli: verify reports and exit codes") {
    CliResult ok = run({"verify", "theta-recursion", "--j", "1", "--m", "0", "--l", "0",
                        "--k", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[ok]") != std::string::npos);
    CHECK(ok.out.find("1 checked, 0 failed") != std::string::npos);

    CliResult bad = run({"verify", "theta-recursion", "--j", "1", "--m", "1", "--l", "0",
                         "--k", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAIL]") != std::string::npos);
    CHECK(bad.out.find("s[-]: (1)/(1 - t - q + q*t) vs 0") != std::string::npos);

    CliResult sweep = run({"verify", "kron-skew", "--n", "3"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find(" 0 failed") != std::string::npos);

    CliResult json = run({"verify", "hook-skew", "--j", "1", "--k", "1", "--l", "1",
                          "--m", "0", "--json"});
    REQUIRE(json.code == 0);
    nlohmann::json reps = nlohmann::json::parse(json.out);
    REQUIRE(reps.is_array());
    REQUIRE(reps.size() == 2);
    for (const auto& rep : reps) {
        CHECK(rep.at("equal") == true);
        CHECK(rep.contains("identity"));
        CHECK(rep.contains("lhs"));
    }
}

TEST_CASE("cli: calculator subcommands against library values") {
    CliResult kron = run({"kronecker", "--a", "2,1", "--b", "2,1"});
    REQUIRE(kron.code == 0);
    CHECK(kron.out == "s[3] + s[2,1] + s[1,1,1]\n");

    CliResult lr = run({"lr", "--a", "1", "--b", "2", "--c", "2,1"});
    REQUIRE(lr.code == 0);
    CHECK(lr.out == "1\n");

    CliResult mac = run({"macdonald", "--mu", "1,1", "--basis", "s", "--json"});
    REQUIRE(mac.code == 0);
    CHECK(symf_qt_from_json(nlohmann::json::parse(mac.out)) ==
          macdonald(Partition({1, 1}), Basis::s));

    CliResult enk_r = run({"enk", "--n", "2", "--k", "1", "--json"});
    REQUIRE(enk_r.code == 0);
    CHECK(symf_qt_from_json(nlohmann::json::parse(enk_r.out)) == enk(2, 1));

    CliResult chars = run({"char-table", "--n", "3", "--json"});
    REQUIRE(chars.code == 0);
    CHECK(nlohmann::json::parse(chars.out) == char_table_to_json(CharTable::of(3)));
}

TEST_CASE("cli: operator subcommands read SymF files") {
    TempJson e2(symf_to_json(lift_qt(QS::e(2))), "e2");
    CliResult nb = run({"nabla", "--f", e2.path.string(), "--json"});
    REQUIRE(nb.code == 0);
    CHECK(symf_qt_from_json(nlohmann::json::parse(nb.out)) ==
          qt_s({2}, 1) + qt_s({1, 1}, RatFuncQT::q() + RatFuncQT::t()));

    TempJson one(symf_to_json(SymQT::one(Basis::s)), "one");
    CliResult th = run({"theta", "--d", "1", "--f", one.path.string(), "--json"});
    REQUIRE(th.code == 0);
    CHECK(symf_qt_from_json(nlohmann::json::parse(th.out)) == theta_e(1, SymQT::one(Basis::s)));

    nlohmann::json hfile = {{"basis", "H"},
                            {"degree", 2},
                            {"terms", {{{"lambda", {2}}, {"coeff", "1"}}}}};
    TempJson h2(hfile, "h2");
    CliResult se = run({"schur-expand", "--f", h2.path.string(), "--json"});
    REQUIRE(se.code == 0);
    CHECK(symf_qt_from_json(nlohmann::json::parse(se.out)) ==
          macdonald(Partition({2}), Basis::s));

    CliResult missing = run({"nabla", "--f", "/nonexistent/f.json", "--json"});
    CHECK(missing.code == 2);
}
