#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "tdc");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = tdc::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants") {
  const Run r = run({"invariants", "--graph", "path:4"});
  REQUIRE(r.code == 0);
  const auto j = parse(r.out);
  CHECK(j["tdc"] == 3);
  CHECK(j["chi"] == 2);
  CHECK(parse(run({"invariants", "--graph", "friendship:2"}).out)["tdc"] == 3);
  CHECK(parse(run({"invariants", "--graph", "cycle:6"}).out)["tdc"] == 4);
  CHECK(parse(run({"invariants", "--graph", "-"}, "A_\n").out)["tdc"] == 2);
  CHECK(parse(run({"invariants", "--graph", "empty:3"}).out)["tdc"] == "undefined");
  CHECK(run({"invariants", "--graph", "cycle:8"}).out == run({"invariants", "--graph", "cycle:8"}).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"invariants", "--graph", "nonsense:3"}).code == 2);
  CHECK(run({"invariants", "--graph", "A"}).code == 2);
  CHECK(run({"invariants", "--graph", "path:40"}).code == 3);
  CHECK(run({"invariants", "--graph", "path:6", "--max-n", "5"}).code == 3);
  CHECK(run({"perturb", "--graph", "empty:2", "--kind", "stability"}).code == 4);
  CHECK(run({"perturb", "--graph", "path:3", "--kind", "other"}).code == 2);
  CHECK(run({"invariants", "--help"}).code == 0);
}

TEST_CASE("perturb") {
  const auto st = parse(run({"perturb", "--graph", "path:6", "--kind", "stability"}).out);
  CHECK(st["value"] == 1);
  CHECK(st["witness"].size() == 1);
  CHECK(parse(run({"perturb", "--graph", "complete_bipartite:3:3", "--kind", "stability"}).out)["value"] == 3);
  const auto skip = parse(run({"perturb", "--graph", "cycle:4", "--kind", "stability", "--convention", "skip"}).out);
  CHECK(skip["value"].is_null());
  const auto trace = parse(run({"perturb", "--graph", "cycle:4", "--kind", "stability", "--trace", "1"}).out);
  REQUIRE(trace["trace"].size() == 4);
  for (const auto& row : trace["trace"]) CHECK(row["after_value"] == 2);
}

TEST_CASE("build") {
  CHECK(run({"build", "glue", "complete:4", "complete:5", "--r", "4"}).out == "D~{\n");
  const Run corona = run({"build", "ncorona", "path:4", "path:3"});
  CHECK(parse(run({"invariants", "--graph", "-", "--max-n", "16"}, corona.out).out)["n"] == 16);
  CHECK(parse(run({"invariants", "--graph", "-"}, corona.out).out)["m"] == 29);
  CHECK(run({"build", "complement", "-"}, "A_\n").out == "A?\n");
  CHECK(run({"build", "delete-vertices", "path:4", "--remove", "0"}).out == run({"build", "show", "path:3"}).out);
  CHECK(run({"build", "glue", "cycle:4", "complete:3", "--clique1", "0", "--clique2", "2"}).code == 0);
  CHECK(run({"build", "ncorona", "path:4"}).code == 2);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--claims", "paths"});
  std::istringstream lines(r.out);
  std::string line;
  int holds = 0;
  while (std::getline(lines, line)) {
    const auto j = parse(line);
    if (j["type"] == "claim" && j["verdict"] == "holds") ++holds;
  }
  CHECK(holds == 10);
  CHECK(run({"verify", "--claims", "henning", "--format", "table"}).code == 0);
  CHECK(run({"verify", "--claims", "nothing"}).code == 2);
}

TEST_CASE("verify a colouring file") {
  const std::string path = "cli_test_coloring.txt";
  {
    std::ofstream f(path);
    f << "3\n0 0\n1 1\n2 2\n3 0\n";
  }
  const Run ok = run({"verify", "--graph", "path:4", "--coloring", path});
  CHECK(ok.code == 0);
  CHECK(parse(ok.out)["td_coloring"] == true);
  {
    std::ofstream f(path);
    f << "2\n0 0\n1 1\n2 0\n3 1\n";
  }
  CHECK(parse(run({"verify", "--graph", "path:4", "--coloring", path}).out)["td_coloring"] == false);
  std::remove(path.c_str());
}

TEST_CASE("explore") {
  const Run r = run({"explore", "--max-n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexample") == std::string::npos);
  CHECK(r.out == run({"explore", "--max-n", "5"}).out);
  CHECK(run({"explore", "--max-n", "9"}).code == 2);
}

}
