#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fgring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "fgring_cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("classify examples") {
  auto dual = run({"classify", "ring Z[e]/(e^2)"});
  REQUIRE(dual.code == 0);
  Json j = dual.json();
  CHECK(j["verdict"] == "NOT_BIINTERPRETABLE");
  CHECK(j["conditions"]["d"] == 0);
  CHECK(j["reasons"] == Json::array({"d=0"}));
  CHECK(j["nilradical"] == Json::array({"e"}));

  auto idem = run({"classify", "ring Z[x]/(x^2 - x)"}).json();
  CHECK(idem["verdict"] == "NOT_BIINTERPRETABLE");
  CHECK(idem["conditions"]["connected"] == false);
  CHECK(idem["certificates"].contains("split"));
  CHECK(idem["certificates"]["split"]["witness"] == 1);

  auto pm = run({"classify", "ring Z[x]/(x^2 - 1)"}).json();
  CHECK(pm["certificates"]["split"]["witness"] == 2);

  auto axes = run({"classify", "ring Z[x,y]/(x*y)"}).json();
  CHECK(axes["verdict"] == "BIINTERPRETABLE_WITH_Z");
  CHECK(axes["graph"]["vertices"].size() == 2);
  CHECK(axes["graph"]["edges"].size() == 1);

  auto finite = run({"classify", "ring Z[x]/(3, x^2+1)"}).json();
  CHECK(finite["verdict"] == "NOT_BIINTERPRETABLE");
  CHECK(finite["conditions"]["finite"] == true);

  for (const char* key : {"input", "status", "verdict", "conditions", "is_zero_ring", "reasons", "nilradical",
                          "minimal_primes", "graph", "certificates", "assumptions"})
    CHECK_MESSAGE(axes.contains(key), key);
}

TEST_CASE("output is deterministic") {
  auto a = run({"classify", "ring Z[x,y]/(x*y, 2*x)"});
  auto b = run({"classify", "ring Z[x,y]/(x*y, 2*x)"});
  CHECK(a.out == b.out);
}

TEST_CASE("refusal and error exit codes") {
  auto cubic = run({"classify", "ring Z[x,y,z]/(x^3 + 2*y^3 + 3*z^3 + x*y*z + x^2*y + y^2*z + z^2*x + x + y + z + 1)"});
  CHECK(cubic.code == 2);
  Json j = cubic.json();
  CHECK(j["status"] == "refused");
  CHECK(j["error"] == "DECOMPOSITION_INCOMPLETE");
  CHECK(j["verdict"] == "UNDECIDED_DECOMPOSITION_INCOMPLETE");
  CHECK_FALSE(j.contains("conditions"));

  CHECK(run({"minprimes", "ring Z[x,y,z]/(x^3 + y^3 + z^3 + x*y*z + 1)"}).code == 2);
  CHECK(run({"classify", "ring Z[x /"}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);

  auto capped = run({"classify", "ring Z[x,y]/(x^2 - y^3, x*y - 1)", "--max-steps", "3"});
  CHECK(capped.code == 2);
  CHECK(capped.json()["error"] == "RESOURCE_CAP");
}

TEST_CASE("batch keeps input order") {
  std::string path = temp_file("batch.txt", "ring Z[x]/(4)\n\n# skipped\nring Z[x]/(x^2 - x)\nring Z[e]/(e^2)\nring Z[x,y]/(x*y)\n");
  auto r = run({"classify", "--batch", path});
  CHECK(r.code == 0);
  Json j = r.json();
  REQUIRE(j.size() == 4);
  CHECK(j[0]["input"] == "ring Z[x] / (4)");
  CHECK(j[0]["conditions"]["d"] == 2);
  CHECK(j[1]["conditions"]["connected"] == false);
  CHECK(j[2]["reasons"] == Json::array({"d=0"}));
  CHECK(j[3]["verdict"] == "BIINTERPRETABLE_WITH_Z");
  CHECK(run({"classify", "--batch", path}).out == r.out);

  std::string mixed = temp_file("mixed.txt", "ring Z[x]\nring Z[x,y,z]/(x^3 + y^3 + z^3 + x*y*z + 1)\n");
  auto m = run({"classify", "--batch", mixed});
  CHECK(m.code == 2);
  CHECK(m.json()[0]["verdict"] == "BIINTERPRETABLE_WITH_Z");
  CHECK(m.json()[1]["status"] == "refused");
  std::remove(path.c_str());
  std::remove(mixed.c_str());
}

TEST_CASE("config file with flag override") {
  std::string cfg = temp_file("config.json", R"({"groebner": {"max_reduction_steps": 3}, "finite_ring_cap": 4})");
  CHECK(run({"classify", "ring Z[x,y]/(x^2 - y^3, x*y - 1)", "--config", cfg}).code == 2);
  CHECK(run({"classify", "ring Z[x,y]/(x^2 - y^3, x*y - 1)", "--config", cfg, "--max-steps", "1000000"}).code == 0);
  CHECK(run({"eval-formula", "ring Z/(6)", "--formula", "(= x x)", "--config", cfg}).code == 2);
  CHECK(run({"eval-formula", "ring Z/(6)", "--formula", "(= x x)", "--config", cfg, "--finite-cap", "8"}).code == 0);
  CHECK(run({"classify", "ring Z", "--config", "/nonexistent/config.json"}).code == 1);
  std::remove(cfg.c_str());
}

TEST_CASE("other ring commands") {
  auto mp = run({"minprimes", "ring Z[x]/(x^2 - x)"}).json();
  CHECK(mp["minimal_primes"].size() == 2);
  auto nil = run({"nilradical", "ring Z[x]/(4, x^2)"}).json();
  CHECK(nil["nilradical"] == Json::array({"2", "x"}));
  CHECK(nil["d"] == 4);  // 2*x is not zero
  auto g = run({"graph", "ring Z[x,y]/(x*y)"}).json();
  CHECK(g["connected"] == true);
  CHECK(run({"check-finite", "ring Z[x]/(6, x^3)"}).json()["finite"] == true);
  CHECK(run({"check-finite", "ring Z[x]/(6*x)"}).json()["finite"] == false);
}

TEST_CASE("witt commands") {
  auto t = run({"witt-table", "--d", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.json()["S"]["2"] == "-X1*Y1 + X2 + Y2");
  auto text = run({"witt-table", "--d", "3", "--text"});
  CHECK(text.out.find("S_3 = -X1^2*Y1 - X1*Y1^2 + X3 + Y3") != std::string::npos);
  CHECK(run({"witt-table", "--d", "0"}).code == 1);

  auto g = run({"witt-eval", "--d", "2", "--a", "3", "1", "--op", "ghost"}).json();
  CHECK(g["result"] == Json::array({"3", "11"}));
  auto sum = run({"witt-eval", "--d", "2", "--a", "1", "0", "--b", "1", "0"}).json();
  CHECK(sum["result"] == Json::array({"2", "-1"}));
  auto inv = run({"witt-eval", "ring Z/(5)", "--d", "2", "--a", "3", "1", "--op", "from-ghost"});
  CHECK(inv.code == 0);
  CHECK(run({"witt-eval", "--d", "2", "--a", "3", "1", "--op", "from-ghost"}).code == 2);
  CHECK(run({"witt-eval", "--d", "2", "--a", "3"}).code == 1);
}

TEST_CASE("formula commands") {
  auto e = run({"emit", "--formula", "jac", "--n", "0"}).json();
  CHECK(e["formula"] == "(forall u (exists v (exists w (and (= (* (- 1 (* x u)) v) (+ 1 w)) (= w 0)))))");
  auto g2 = run({"emit", "--formula", "gamma", "--n", "2"}).json();
  CHECK(g2["slots"] == Json::array({"x", "y1", "y2"}));
  auto m = run({"emit", "--formula", "morphism", "ring Z[x]/(x^2 - x)"}).json();
  CHECK(m["formula"] == "(= (- (^ x 2) x) 0)");
  auto phi = run({"emit", "--formula", "jac-phi", "--phi", "(= w 0)"}).json();
  CHECK(phi["formula"] == e["formula"]);
  CHECK(run({"emit", "--formula", "sigma"}).code == 1);

  auto jac = run({"eval-formula", "ring Z/(12)", "--formula", "jac", "--n", "0"}).json();
  CHECK(jac["tuples"] == Json::array({Json::array({"0"}), Json::array({"6"})}));
  auto one = run({"eval-formula", "ring Z/(12)", "--formula", "jac", "--assign", "x=6"}).json();
  CHECK(one["value"] == true);
  auto mu = run({"eval-formula", "ring Z[x]/(2, x^2+x+1)", "--formula", "mu", "--assign", "y1=0"}).json();
  CHECK(mu["value"] == true);
  CHECK(run({"eval-formula", "ring Z[x]/(x)", "--formula", "(= x x)"}).code == 2);
  CHECK(run({"eval-formula", "ring Z/(6)", "--formula", "(= x"}).code == 1);
}
