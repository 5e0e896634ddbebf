#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "groupcx/cli.hpp"

using groupcx::run_cli;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex build emits the C6 independence complex") {
  CliResult r = run({"complex", "build", "--group", "C6", "--kind", "independence"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("facets").size() == 4);
  CHECK(j.at("pure") == false);
  CHECK(j.at("dimension") == 1);
  CHECK(j.at("f_vector") == nlohmann::json::array({5, 2}));
  CHECK(j.at("vertices").size() == 5);
}

TEST_CASE("identical command lines produce byte-identical output") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"complex", "build", "--group", "S4", "--kind", "independence"},
           {"graph", "build", "--group", "C6", "--kind", "power"},
           {"group", "info", "--group", "C6"},
           {"verify", "--suite", "gk"}}) {
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("group info") {
  CliResult r = run({"group", "info", "--group", "C6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("order") == 6);
  CHECK(j.at("cyclic") == true);
  CHECK(j.at("eppo") == false);
  CHECK(j.at("min_generators") == 1);
  CHECK(j.at("gk").at("cover_number") == 1);
}

TEST_CASE("graph build with DOT output") {
  CliResult r = run({"graph", "build", "--group", "C6", "--kind", "power", "--dot"});
  REQUIRE(r.code == 0);
  size_t edges = 0, pos = 0;
  while ((pos = r.out.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == 13);
}

TEST_CASE("homology subcommand") {
  CliResult r = run({"homology", "--group", "C6", "--kind", "independence"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("reduced") == true);
  CHECK(j.at("groups")[0].at("betti") == 2);
  CHECK(j.at("groups")[1].at("betti") == 0);

  CliResult u = run({"homology", "--group", "V4", "--kind", "independence",
                     "--unreduced"});
  auto ju = nlohmann::json::parse(u.out);
  CHECK(ju.at("reduced") == false);
  CHECK(ju.at("groups")[0].at("betti") == 1);
}

TEST_CASE("exit codes") {
  // usage errors
  CHECK(run({"complex", "build", "--group", "C6"}).code == 2);  // missing kind
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"complex", "build", "--group", "NoSuchGroup", "--kind",
             "independence"}).code == 2);

  // caps: named groups beyond desk scale
  CliResult sz = run({"complex", "build", "--group", "Sz8", "--kind", "strong"});
  CHECK(sz.code == 3);
  CHECK(sz.err.find("LatticeCapExceeded") != std::string::npos);

  CliResult sz_info = run({"group", "info", "--group", "Sz8"});
  CHECK(sz_info.code == 3);
  CHECK(sz_info.err.find("OrderCapExceeded") != std::string::npos);

  // a buildable group beyond the lattice cap
  CliResult big = run({"complex", "build", "--group",
                       R"({"family":"cyclic","n":600})", "--kind", "strong"});
  CHECK(big.code == 3);
  CHECK(big.err.find("LatticeCapExceeded") != std::string::npos);

  // verify exit 0 on the shipped catalog
  CHECK(run({"verify", "--suite", "gk"}).code == 0);
}

TEST_CASE("cap flags move the limits") {
  CHECK(run({"--order-cap", "5", "group", "info", "--group", "C6"}).code == 3);
  CHECK(run({"group", "info", "--group", "C6", "--order-cap", "50"}).code == 0);
  CliResult r = run({"complex", "build", "--group", "C6", "--kind", "strong",
                     "--lattice-cap", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("LatticeCapExceeded") != std::string::npos);
}

TEST_CASE("inline JSON group specs") {
  CliResult r = run({"group", "info", "--group",
                     R"({"family":"abelian","factors":[4,2]})"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("order") == 8);
  CHECK(j.at("abelian") == true);
}

TEST_CASE("batch over a custom catalog file") {
  std::string path = "test_batch_catalog.json";
  {
    std::ofstream f(path);
    f << R"([{"name":"K4","spec":{"family":"abelian","factors":[2,2]},"tags":[]},
             {"name":"C3","spec":{"family":"cyclic","n":3},"tags":[]}])";
  }
  CliResult r = run({"batch", "--catalog", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"name\": \"K4\"") != std::string::npos);
  CHECK(r.out.find("\"name\": \"C3\"") != std::string::npos);
  CHECK(r.out.find("\"family\": \"abelian\"") != std::string::npos);
  // K4 comes first: catalog order is preserved
  CHECK(r.out.find("\"K4\"") < r.out.find("\"C3\""));
  std::remove(path.c_str());
}

TEST_CASE("corrupted table surfaces as a usage error") {
  CliResult r = run({"group", "info", "--group",
                     R"({"family":"table","table":[[0,1],[1,1]]})"});
  CHECK(r.code == 2);
}

TEST_SUITE_END();
