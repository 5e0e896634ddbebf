#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "groupcx/cli.hpp"
#include "groupcx/verify.hpp"

using namespace groupcx;

TEST_SUITE_BEGIN("verify");

TEST_CASE("the full check matrix passes on the shipped catalog") {
  VerifyOptions opts;
  auto outcomes = run_suite(Suite::All, default_catalog(), opts);
  int failures = 0;
  for (const auto& o : outcomes)
    if (!o.pass) {
      ++failures;
      MESSAGE(o.check, " / ", o.group, " ", o.detail);
    }
  CHECK(failures == 0);
  CHECK(outcomes.size() > 1000);
}

TEST_CASE("a corrupted Cayley table surfaces as a failed outcome") {
  // (1*1)*2 != 1*(1*2) in this table
  auto catalog = load_catalog_text(R"([
    {"name": "C3", "spec": {"family": "cyclic", "n": 3}, "tags": []},
    {"name": "broken",
     "spec": {"family": "table", "table": [[0,1,2],[1,0,0],[2,0,0]]},
     "tags": []}
  ])");
  VerifyOptions opts;
  auto outcomes = run_suite(Suite::Core, catalog, opts);
  bool construction_failure = false;
  bool c3_checks_ran = false;
  for (const auto& o : outcomes) {
    if (o.check == "construction" && o.group == "broken" && !o.pass)
      construction_failure = true;
    if (o.group == "C3" && o.pass) c3_checks_ran = true;
  }
  CHECK(construction_failure);
  CHECK(c3_checks_ran);

  // exit 1 iff some outcome failed
  std::string path = "test_broken_catalog.json";
  {
    std::ofstream f(path);
    f << R"([{"name": "broken",
              "spec": {"family": "table", "table": [[0,1,2],[1,0,0],[2,0,0]]},
              "tags": []}])";
  }
  std::ostringstream out, err;
  int code = run_cli({"verify", "--suite", "core", "--catalog", path}, out, err);
  CHECK(code == 1);
  std::remove(path.c_str());
}

TEST_CASE("exhaustive facet oracle on a synthetic hereditary family") {
  // accepted: subsets of {0,1,2} or of {2,3}
  auto pred = [](const std::vector<int>& s) {
    bool in_a = true, in_b = true;
    for (int v : s) {
      if (v > 2) in_a = false;
      if (v != 2 && v != 3) in_b = false;
    }
    return in_a || in_b;
  };
  OracleResult res = exhaustive_facet_oracle(5, pred);
  CHECK(res.hereditary);
  CHECK(res.facets ==
        std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}});
}

TEST_SUITE_END();
