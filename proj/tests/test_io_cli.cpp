#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "deca/catalog.hpp"
#include "deca/json_io.hpp"
#include "deca/loopgroup.hpp"

using namespace deca;

TEST_CASE("simplicial set survives a JSON round trip") {
  SSetPtr X = catalog_sset("s1xs1");
  Json j = to_json(*X);
  SimplicialSet back = sset_from_json(j);
  CHECK(equal_bit_exact(back, *X));
  CHECK(to_json(back) == j);
}

TEST_CASE("bisimplicial set round trip is stable") {
  Json j = to_json(*catalog_bis("dec.delta1"));
  CHECK(to_json(bisset_from_json(j)) == j);
}

TEST_CASE("group-like objects round trip") {
  Json g = to_json(catalog_group("c2"));
  CHECK(to_json(sgroup_from_json(g)) == g);

  Json p = to_json(free_loop_group(*catalog_sset("s1")));
  CHECK(to_json(psgroup_from_json(p)) == p);

  FpGroup F{{"a", "b"}, {Word{{1, 2, -1, -2}}}};
  Json f = to_json(F);
  CHECK(to_json(fpgroup_from_json(f)) == f);

  Json t = to_json(double_cover_circle(3));
  CHECK(to_json(ptcp_from_json(t)) == t);
}

TEST_CASE("chain data round trips with matrices intact") {
  ChainComplex C = normalized_chains(*catalog_sset("s2"));
  Json j = to_json(C);
  ChainComplex back = chain_from_json(j);
  CHECK(back.top == C.top);
  CHECK(back.trusted == C.trusted);
  CHECK(back.rank == C.rank);
  for (int k = 1; k <= C.top; ++k) CHECK(back.boundary[k] == C.boundary[k]);

  IntMat M(2, 2);
  M.at(0, 0) = BigInt("123456789012345678901234567890");
  M.at(1, 1) = -7;
  CHECK(intmat_from_json(to_json(M)) == M);

  ChainMap cm = chains_of_map(identity_map(catalog_sset("delta1")));
  Json jm = to_json(cm);
  CHECK(to_json(chainmap_from_json(jm)) == jm);
}

TEST_CASE("readers name missing fields and reject foreign kinds") {
  Json j;
  j["kind"] = "sset";
  j["truncation"] = 1;
  CHECK_THROWS_AS(sset_from_json(j), Error);
  Json notmine;
  notmine["kind"] = "bisset";
  CHECK_THROWS_AS(sset_from_json(notmine), Error);
  CHECK(json_kind(Json::object()) == "");
}

#ifdef DECA_BIN

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(DECA_BIN) + " " + args + " >> cli_tmp/log.txt 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("command line round trips, dispatch, and exit codes") {
  std::filesystem::remove_all("cli_tmp");
  std::filesystem::create_directories("cli_tmp");

  // builders and functor pipeline
  CHECK(run_cli("build sphere --dim 1 --trunc 5 --out cli_tmp/s1.json") == 0);
  CHECK(sset_from_json(read_json_file("cli_tmp/s1.json")).truncation == 5);
  CHECK(run_cli("apply dec --in cli_tmp/s1.json --out cli_tmp/dec.json") == 0);
  CHECK(json_kind(read_json_file("cli_tmp/dec.json")) == "bisset");
  CHECK(run_cli("apply total --in cli_tmp/dec.json --out cli_tmp/tot.json") == 0);
  CHECK(json_kind(read_json_file("cli_tmp/tot.json")) == "sset");
  CHECK(run_cli("tot --in cli_tmp/dec.json --out cli_tmp/totc.json") == 0);
  CHECK(json_kind(read_json_file("cli_tmp/totc.json")) == "chain");
  CHECK(run_cli("invariants --in cli_tmp/dec.json") == 0);
  CHECK(run_cli("homology --in cli_tmp/s1.json --max-degree 2") == 0);
  CHECK(run_cli("pi1 --in cli_tmp/s1.json") == 0);

  // group pipeline
  CHECK(run_cli("build cyclic --n 2 --trunc 3 --out cli_tmp/c2.json") == 0);
  CHECK(run_cli("wbar --in cli_tmp/c2.json --out cli_tmp/w.json") == 0);
  CHECK(json_kind(read_json_file("cli_tmp/w.json")) == "sset");
  CHECK(run_cli("homology --in cli_tmp/w.json --max-degree 1") == 0);
  CHECK(run_cli("duskin-check c2") == 0);
  CHECK(run_cli("build doublecover --trunc 3 --out cli_tmp/dc.json") == 0);
  CHECK(run_cli("classify --in cli_tmp/dc.json") == 0);

  // chain map verbs
  write_json_file("cli_tmp/idmap.json", to_json(chains_of_map(identity_map(catalog_sset("delta1")))));
  CHECK(run_cli("cone --in cli_tmp/idmap.json") == 0);

  // scoped verification with a JSON report
  CHECK(run_cli("verify structure delta0 --out cli_tmp/rep.json") == 0);
  Json rep = read_json_file("cli_tmp/rep.json");
  CHECK(rep.at("kind") == "report");
  CHECK(rep.at("counts").at("fail") == 0);
  CHECK(rep.at("counts").at("pass").get<int>() >= 1);

  // usage errors exit 2
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("verify nosuchsuite") == 2);
  CHECK(run_cli("apply nosuchfunctor --in cli_tmp/s1.json") == 2);
  CHECK(run_cli("apply total --in cli_tmp/s1.json") == 2);

  // data errors exit 1
  std::ofstream("cli_tmp/bad.json") << "this is not json";
  CHECK(run_cli("invariants --in cli_tmp/bad.json") == 1);
}

#endif
