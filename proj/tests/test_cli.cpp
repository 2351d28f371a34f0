#include <string>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using testsupport::data_file;
using testsupport::read_file;
using testsupport::run_cli;
using testsupport::write_file;

namespace {

std::string godel3() { return data_file("godel3.json"); }
std::string classical2() { return data_file("classical2.json"); }

}  // namespace

TEST_CASE("validate accepts the shipped definitions") {
  auto r = run_cli("validate --logic " + godel3());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ok\n");
  auto r4 = run_cli("validate --logic " + data_file("four.json"));
  CHECK(r4.exit_code == 0);
}

TEST_CASE("axioms output matches the golden file for one connective") {
  auto r = run_cli("axioms --logic " + godel3() + " --connective imp");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(data_file("godel3_imp_axioms.golden")));
}

TEST_CASE("axioms filters to one value symbol") {
  auto r = run_cli("axioms --logic " + godel3() +
                   " --connective imp --value half");
  CHECK(r.exit_code == 0);
  auto intro_pos = r.output.find("intro(imp,half): ");
  auto elim_pos = r.output.find("elim(imp,half): ");
  CHECK(intro_pos != std::string::npos);
  CHECK(elim_pos != std::string::npos);
  CHECK(r.output.find("intro(imp,0)") == std::string::npos);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 2);
}

TEST_CASE("reduce prints the canonical normal form") {
  auto r = run_cli("reduce --logic " + godel3() +
                   " --value 0 --formula 'imp(A,B)'");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "(([half](A) & [0](B)) | ([1](A) & [0](B)))\n");

  auto rt = run_cli("reduce --logic " + godel3() +
                    " --value 0 --formula 'imp(A,B)' --trace");
  CHECK(rt.exit_code == 0);
  CHECK(rt.output.find("~>") != std::string::npos);
  auto tail = rt.output.rfind('\n', rt.output.size() - 2);
  CHECK(rt.output.substr(tail + 1) ==
        "(([half](A) & [0](B)) | ([1](A) & [0](B)))\n");
}

TEST_CASE("entail reports the three verdicts with matching exit codes") {
  auto gamma = data_file("ex2.gamma");

  SUBCASE("entailed") {
    auto r = run_cli("entail --logic " + godel3() + " --gamma " + gamma +
                     " --sequent 'T |- [half](imp(A,B))'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "entailed\n");
  }
  SUBCASE("refuted, with a countermodel witness") {
    auto r = run_cli("entail --logic " + godel3() + " --gamma " + gamma +
                     " --sequent 'T |- [1](imp(A,B))'");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("refuted\n") == 0);
    CHECK(r.output.find("countermodel: A=1, B=half") != std::string::npos);
  }
  SUBCASE("vacuous when no valuation satisfies the theory") {
    write_file("/tmp/mvseq_absurd.gamma", "T |- F\n");
    auto r = run_cli("entail --logic " + godel3() +
                     " --gamma /tmp/mvseq_absurd.gamma"
                     " --sequent 'T |- [1](A)'");
    CHECK(r.exit_code == 2);
    CHECK(r.output == "vacuous\n");
  }
}

TEST_CASE("invariance reports the fixed value or two witnesses") {
  auto gamma = data_file("ex2.gamma");
  auto r = run_cli("invariance --logic " + godel3() + " --gamma " + gamma +
                   " --phi 'imp(A,B)'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "invariant: half\n");

  write_file("/tmp/mvseq_empty.gamma", "# no constraints\n");
  auto rv = run_cli("invariance --logic " + godel3() +
                    " --gamma /tmp/mvseq_empty.gamma --phi 'A'");
  CHECK(rv.exit_code == 1);
  CHECK(rv.output.find("varying\n") == 0);
  int witnesses = 0;
  size_t pos = 0;
  while ((pos = rv.output.find("witness: ", pos)) != std::string::npos) {
    ++witnesses;
    pos += 9;
  }
  CHECK(witnesses == 2);
}

TEST_CASE("matrix decides designated-value entailment") {
  write_file("/tmp/mvseq_premises.txt", "A\nimp(A,B)\n");
  auto r = run_cli("matrix --logic " + classical2() +
                   " --premises /tmp/mvseq_premises.txt --phi B"
                   " --designated 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "entailed\n");

  auto rr = run_cli("matrix --logic " + classical2() +
                    " --premises /tmp/mvseq_premises.txt --phi 'not(B)'"
                    " --designated 1");
  CHECK(rr.exit_code == 1);
  CHECK(rr.output.find("refuted\n") == 0);
  CHECK(rr.output.find("countermodel: ") != std::string::npos);
}

TEST_CASE("check-proof accepts the shipped fixture and names bad nodes") {
  auto r = run_cli("check-proof --logic " + godel3() + " --gamma " +
                   data_file("ex2.gamma") + " " + data_file("ex2_proof.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ok\n");

  auto text = read_file(data_file("ex2_proof.json"));
  auto pos = text.find("hyp:1");
  REQUIRE(pos != std::string::npos);
  auto bad = text;
  bad.replace(pos, 5, "hyp:7");
  write_file("/tmp/mvseq_bad_proof.json", bad);
  auto rb = run_cli("check-proof --logic " + godel3() + " --gamma " +
                    data_file("ex2.gamma") + " /tmp/mvseq_bad_proof.json");
  CHECK(rb.exit_code == 1);
  CHECK(rb.output.find("invalid at root.0.0.0.1: ") == 0);
}

TEST_CASE("prove finds small derivations and reports the depth bound") {
  auto r = run_cli("prove --logic " + godel3() +
                   " --sequent '[1](A) |- [1](A)' --depth 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("axiom:reflexive") != std::string::npos);

  auto rn = run_cli("prove --logic " + godel3() +
                    " --sequent 'T |- [1](A)' --depth 3");
  CHECK(rn.exit_code == 2);
  CHECK(rn.output == "no proof within depth 3\n");
}

TEST_CASE("kripke prints the extension and the two-valued verdict") {
  auto r = run_cli("kripke --logic " + godel3() + " --valuation " +
                   data_file("ex2_valuation.json") + " --formula '[1](A)'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "extension: 0 half 1\ntwo-valued: yes\n");

  auto re = run_cli("kripke --logic " + godel3() + " --valuation " +
                    data_file("ex2_valuation.json") +
                    " --formula '[half](A)'");
  CHECK(re.exit_code == 0);
  CHECK(re.output == "extension: (empty)\ntwo-valued: yes\n");
}

TEST_CASE("json format carries the verdict and timing fields") {
  auto r = run_cli("entail --logic " + godel3() + " --gamma " +
                   data_file("ex2.gamma") +
                   " --sequent 'T |- [half](imp(A,B))' --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "entailed");
  CHECK(j["witness"].is_null());
  CHECK(j["counts"]["models_checked"].get<int>() >= 1);
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("usage and input errors use distinct exit codes") {
  SUBCASE("unknown flag") {
    auto r = run_cli("entail --logic " + godel3() + " --nope");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("missing subcommand") {
    auto r = run_cli("");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("value symbol outside the many-valued domain") {
    auto r = run_cli("reduce --logic " + godel3() +
                     " --value 2 --formula A");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("missing input file") {
    auto r = run_cli("validate --logic /tmp/mvseq_no_such_file.json");
    CHECK(r.exit_code == 4);
  }
  SUBCASE("formula syntax error") {
    auto r = run_cli("reduce --logic " + godel3() +
                     " --value 0 --formula 'imp(A'");
    CHECK(r.exit_code == 4);
  }
}
