#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef MACKEY_CLI_PATH
#error "MACKEY_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

fs::path scratch_file(const std::string& stem) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("mackey_cli_" + std::to_string(++counter) + "_" + stem);
}

/// Run the binary with the given arguments, capturing stdout exactly and
/// discarding stderr.
RunResult run_cli(const std::string& args) {
  fs::path out = scratch_file("stdout");
  std::string cmd = std::string(MACKEY_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> /dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.code = raw;
#else
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#endif
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  fs::remove(out);
  return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("rank queries print exactly the frozen values") {
  RunResult r = run_cli("--group C2 mackey-rank");
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"rank\": 6\n}\n");
  RunResult f = run_cli("--group C2 fused-rank");
  CHECK(f.code == 0);
  CHECK(f.out == "{\n  \"rank\": 5\n}\n");
}

TEST_CASE("repeated runs are byte identical") {
  std::string seeded = "--group C3 --seed 99 verify --suite zlattice";
  RunResult a = run_cli(seeded), b = run_cli(seeded);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::string sc = "--group S3 structure-constants --fused";
  RunResult c = run_cli(sc), d = run_cli(sc);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
  CHECK_FALSE(c.out.empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("--group NoSuchGroup subgroups").code == 2);
  CHECK(run_cli("--group C2 span-hom G/99 pt").code == 2);
  CHECK(run_cli("--group C2 span-hom Gsomething pt").code == 2);
  CHECK(run_cli("--group C2 --format csv mackey-rank").code == 2);
  CHECK(run_cli("subgroups").code == 2);  // missing --group
  CHECK(run_cli("--group C2 verify --suite nosuchsuite").code == 2);
}

TEST_CASE("verification subcommand reports passing checks") {
  RunResult r = run_cli("--group C3 verify --suite group_core");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["group"] == "C3");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].is_array());
  CHECK(!j["checks"].empty());
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("structure constants stream as csv with a fixed header") {
  RunResult r = run_cli("--group C2 --format csv structure-constants");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "i,j,k,coeff");
  // The fused table contains the doubled fused identity coefficient.
  RunResult f = run_cli("--group C2 --format csv structure-constants --fused");
  CHECK(f.code == 0);
  CHECK(f.out.find("1,2,0,2\n") != std::string::npos);
}

TEST_CASE("groups load from permutation generator files") {
  fs::path good = scratch_file("v4.json");
  {
    std::ofstream f(good);
    f << R"({"degree": 4, "generators": [[2,1,4,3],[3,4,1,2]], "name": "klein"})";
  }
  RunResult r = run_cli("--group " + good.string() + " subgroups");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["group"] == "klein");
  CHECK(j["order"] == 4);
  CHECK(j["classes"].size() == 5);
  fs::remove(good);

  fs::path bad = scratch_file("bad.json");
  {
    std::ofstream f(bad);
    f << R"({"degree": 4, "generators": [[2,2,4,3]]})";  // not a permutation
  }
  CHECK(run_cli("--group " + bad.string() + " subgroups").code == 2);
  fs::remove(bad);
}

TEST_CASE("span and fused hom queries expose ranks and collapse data") {
  RunResult s = run_cli("--group C2 span-hom pt pt");
  CHECK(s.code == 0);
  nlohmann::json js = parse(s);
  CHECK(js["rank"] == 2);
  CHECK(js["basis"].size() == 2);

  RunResult f = run_cli("--group C2 fused-hom G/0 Omega");
  CHECK(f.code == 0);
  nlohmann::json jf = parse(f);
  CHECK(jf["unfused_rank"] == 3);
  CHECK(jf["fused_rank"] == 2);
  CHECK(jf["collapsed_pairs"] == nlohmann::json::array({{1, 0}}));
}

TEST_CASE("marks matrix of C2") {
  RunResult r = run_cli("--group C2 marks");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["classes"] == 2);
  CHECK(j["matrix"] == nlohmann::json::array({{2, 1}, {0, 1}}));
}

TEST_CASE("functor fusion from the command line") {
  RunResult r = run_cli("--group C2 fuse-functor --functor yoneda:G/0");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["components"] == nlohmann::json::array({2, 1}));
  CHECK(j["is_fused"] == false);
  CHECK(j["fused"]["components"] == nlohmann::json::array({1, 1}));
  CHECK(j["fused"]["has_actions"] == true);
  CHECK(j["fused"]["is_fused"] == true);

  RunResult p = run_cli("--group C2 is-fused --functor yoneda:pt");
  CHECK(p.code == 0);
  nlohmann::json jp = parse(p);
  CHECK(jp["fused"] == true);
  CHECK(jp["witnesses"].empty());
}

TEST_CASE("is-fused reports witnesses without failing") {
  fs::path mod = scratch_file("torsion.json");
  {
    std::ofstream f(mod);
    f << R"({"label": "torsion-example", "components": [1, 0],
             "actions": [[[1]], [[-1]], [[0]], [[0]], [[0]], [[0]]]})";
  }
  RunResult r = run_cli("--group C2 is-fused --functor " + mod.string());
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["fused"] == false);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["class"] == 0);
  CHECK(j["witnesses"][0]["element"] == 1);

  RunResult f = run_cli("--group C2 fuse-functor --functor " + mod.string());
  CHECK(f.code == 0);
  nlohmann::json jf = parse(f);
  CHECK(jf["fused"]["torsion"] == nlohmann::json::array({{2}, nlohmann::json::array()}));
  CHECK(jf["fused"]["has_actions"] == false);
  fs::remove(mod);
}

TEST_CASE("kernel summary for C2") {
  RunResult r = run_cli("--group C2 kernel");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["mackey_rank"] == 6);
  CHECK(j["fused_rank"] == 5);
  CHECK(j["kernel_rank"] == 1);
  REQUIRE(j["generators"].size() == 1);
  CHECK(j["generators"][0]["plus"] == 1);
  CHECK(j["generators"][0]["minus"] == 0);
}

TEST_CASE("disjoint union grammar in object arguments") {
  RunResult r = run_cli("--group S3 span-hom pt+pt pt");
  CHECK(r.code == 0);
  nlohmann::json j = parse(r);
  CHECK(j["rank"] == 8);  // two copies of End(pt) side by side
}
