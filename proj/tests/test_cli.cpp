#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "postlie/cli.hpp"

using namespace postlie;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("postlie_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

CommandResult run(std::vector<std::string> args) { return run_command(args); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check on an exported V15 document") {
  auto exported = run({"catalog", "export", "V15"});
  REQUIRE(exported.exit_code == 0);
  auto path = temp_file("v15.json", exported.output);
  auto r = run({"check", path});
  CHECK(r.exit_code == 0);
  for (const char* id : {"post5: PASS", "post6: PASS", "post7: PASS", "overall: PASS"})
    CHECK(contains(r.output, id));
}

TEST_CASE("check reports failures with exit code 1") {
  auto path = temp_file("bad.json", R"({"field": "Q", "dim": 2,
    "g": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
    "n": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
    "product": [{"i": 2, "j": 2, "coeffs": {"2": "1"}}]})");
  auto r = run({"check", path});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "FAIL witness"));
  auto json = run({"--format", "json", "check", path});
  CHECK(json.exit_code == 1);
  auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["passed"] == false);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"check"}).exit_code == 2);
  CHECK(run({"check", "/nonexistent/file.json"}).exit_code == 2);
  auto path = temp_file("fp4.json", R"({"field": "Fp:4", "dim": 1})");
  auto r = run({"check", path});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "field"));
  CHECK(run({"--format", "xml", "catalog", "list"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("catalog list and verify") {
  auto list = run({"catalog", "list"});
  CHECK(list.exit_code == 0);
  CHECK(contains(list.output, "V17"));
  CHECK(contains(list.output, "sl2_family(alpha,beta)"));
  auto verify = run({"catalog", "verify"});
  // V16(2), V16(-1) and V17 lack the new identity as stated
  CHECK(verify.exit_code == 1);
  CHECK(contains(verify.output, "FAIL V17()"));
  CHECK(contains(verify.output, "39/42 passed"));
}

TEST_CASE("search matches the oracle counts") {
  auto r = run({"search", "--dim", "2", "--p", "3", "--g", "abelian", "--n", "abelian", "--orbits"});
  CHECK(r.exit_code == 0);
  auto hits = oracle::commutative_associative(3);
  CHECK(contains(r.output, "hits: " + std::to_string(hits.size())));
  CHECK(contains(r.output, "orbits: " + std::to_string(oracle::isomorphism_classes(hits, 3))));
  CHECK(contains(r.output, "characteristic-3 evidence"));

  auto serial = run({"search", "--dim", "2", "--p", "3", "--orbits", "--serial"});
  CHECK(serial.output == r.output);
}

TEST_CASE("search respects POSTLIE_GUARD") {
  setenv("POSTLIE_GUARD", "10", 1);
  auto r = run({"search", "--dim", "2", "--p", "3"});
  unsetenv("POSTLIE_GUARD");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "exceeds guard 10"));
}

TEST_CASE("phi-ansatz search") {
  auto r = run({"--format", "json", "search", "--phi-ansatz", "--dim", "3", "--p", "5", "--g",
                "sl2", "--n", "sl2"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["matching"].size() == 2);
  CHECK(j["endomorphisms"] == 1953125);
  CHECK(contains(j["banner"].get<std::string>(), "characteristic-5"));
}

TEST_CASE("analyze, embed and audit") {
  auto sl2 = run({"analyze", "--builtin", "sl2"});
  CHECK(sl2.exit_code == 0);
  CHECK(contains(sl2.output, "derivations: dim 3"));
  CHECK(contains(sl2.output, "nondegenerate (semisimple)"));
  CHECK(run({"analyze", "--builtin", "n3", "--field", "Fp:5"}).exit_code == 0);
  CHECK(run({"analyze"}).exit_code == 2);

  auto path = temp_file("v5.json", run({"catalog", "export", "V5"}).output);
  auto a = run({"analyze", path, "--seed", "7"});
  CHECK(a.exit_code == 0);
  CHECK(contains(a.output, "complete (all left multiplications nilpotent): yes"));
  CHECK(contains(a.output, "seed 7"));
  CHECK(contains(run({"analyze", path, "--which", "g"}).output, "class: abelian"));

  auto e = run({"embed", path});
  CHECK(e.exit_code == 0);
  CHECK(contains(e.output, "Der(n): dim 4"));
  CHECK(contains(e.output, "homomorphism: PASS"));

  auto heis = temp_file("heis.json",
                        run({"catalog", "export", "heis_commutative", "--params", "1,2,3"}).output);
  auto audit = run({"audit", heis});
  CHECK(audit.exit_code == 0);
  CHECK(contains(audit.output, "post10: PASS"));
  CHECK(contains(audit.output, "CONSISTENT"));
}

TEST_CASE("reports are deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"catalog", "list"},
           {"--format", "json", "catalog", "verify"},
           {"search", "--dim", "2", "--p", "2", "--g", "r2", "--n", "r2", "--orbits", "--list"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("export over F_p with parameters") {
  auto r = run({"catalog", "export", "V16", "--params", "1/2", "--field", "Fp:5"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["field"] == "Fp:5");
  // -α1 = -1/2 = 2 mod 5
  CHECK(j["product"][1]["coeffs"]["1"] == "2");
  CHECK(run({"catalog", "export", "V10", "--params", "0"}).exit_code == 2);
}
