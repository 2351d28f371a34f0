#include <doctest.h>

#include <array>

#include "mvseq/selftest.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"
#include "support.hpp"

using namespace mvseq;
using testsupport::make_classical2;
using testsupport::make_godel3;

namespace {

const Atom kA{"A", {}};
const Atom kB{"B", {}};

Valuation val(int a, int b) {
  return Valuation(std::map<Atom, int>{{kA, a}, {kB, b}});
}

}  // namespace

TEST_CASE("homomorphic evaluation of many-valued formulas") {
  LogicSignature sig = make_godel3();
  MvFormula f = parse_mv(sig, "imp(A,B)");
  CHECK(eval_mv(sig, val(1, 0), f) == 0);
  CHECK(eval_mv(sig, val(2, 1), f) == 1);
  CHECK(eval_mv(sig, val(0, 1), f) == 2);
  CHECK(eval_mv(sig, val(2, 0), parse_mv(sig, "imp(A,imp(A,A))")) == 2);
  CHECK(eval_mv(sig, val(0, 0), parse_mv(sig, "#half")) == 1);
  CHECK_THROWS_AS(eval_mv(sig, val(0, 0), parse_mv(sig, "C")), MvError);
}

TEST_CASE("homomorphism law over all table cells") {
  LogicSignature sig = make_godel3();
  MvFormula f = parse_mv(sig, "imp(A,B)");
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      std::array<int, 2> args{a, b};
      CHECK(eval_mv(sig, val(a, b), f) == eval_connective(sig, "imp", args));
    }
  }
}

TEST_CASE("modal evaluation decides value membership and lattice ops") {
  LogicSignature sig = make_godel3();
  Valuation v = val(2, 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "[1](A)")) == 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "[0](A)")) == 0);
  CHECK(eval_modal(sig, v, parse_modal(sig, "[half](imp(A,B))")) == 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "T")) == 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "F")) == 0);
  CHECK(eval_modal(sig, v, parse_modal(sig, "([1](A) & [half](B))")) == 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "([0](A) | [half](B))")) == 1);
  // False anchor flips, true anchor preserves.
  CHECK(eval_modal(sig, v, parse_modal(sig, "[0]([0](A))")) == 1);
  CHECK(eval_modal(sig, v, parse_modal(sig, "[1]([1](A))")) == 1);
}

TEST_CASE("lifting and inversion are mutually inverse") {
  LogicSignature sig = make_godel3();
  Valuation v = val(1, 0);
  ModalValuation alpha = lift(v);
  CHECK(alpha(sig, parse_modal(sig, "[half](A)")) == 1);
  CHECK(alpha(sig, parse_modal(sig, "[1](A)")) == 0);
  Valuation back = invert(sig, alpha);
  CHECK(back == v);
}

TEST_CASE("sequent satisfaction compares lifted values") {
  LogicSignature sig = make_godel3();
  Sequent s = parse_sequent(sig, "T |- [half](imp(A,B))");
  CHECK(satisfies_sequent(sig, val(2, 1), s) == 1);
  CHECK(satisfies_sequent(sig, val(2, 2), s) == 0);
  CHECK(satisfies_sequent(sig, val(0, 0),
                          parse_sequent(sig, "[1](A) |- F")) == 1);
  CHECK(satisfies_sequent(sig, val(0, 0), parse_sequent(sig, "F |- T")) == 1);
}

TEST_CASE("valuation enumeration is lexicographic with last atom fastest") {
  LogicSignature sig = make_godel3();
  std::vector<Valuation> vals = all_valuations(sig, {kA, kB});
  REQUIRE(vals.size() == 9);
  CHECK(vals[0] == val(0, 0));
  CHECK(vals[1] == val(0, 1));
  CHECK(vals[3] == val(1, 0));
  CHECK(vals[8] == val(2, 2));
  int stops = 0;
  for_each_valuation(sig, {kA}, [&](const Valuation&) {
    ++stops;
    return false;
  });
  CHECK(stops == 1);
}

TEST_CASE("entailment over a theory with a unique model") {
  LogicSignature sig = make_godel3();
  TheoryGamma gamma = {parse_sequent(sig, "T |- [1](A)"),
                       parse_sequent(sig, "T |- [half](B)")};
  Sequent s = parse_sequent(sig, "T |- [half](imp(A,B))");
  EntailResult r = entails_m(sig, gamma, s, query_universe(gamma, s));
  CHECK(r.entailed);
  CHECK(!r.vacuous);
  // Only valuations satisfying the theory are counted, and the theory pins
  // both atoms, so exactly one model is examined.
  CHECK(r.models_checked == 1);
  CHECK(!r.countermodel.has_value());
}

TEST_CASE("entailment failure yields the first countermodel") {
  LogicSignature sig = make_godel3();
  Sequent s = parse_sequent(sig, "T |- [1](A)");
  EntailResult r = entails_m(sig, {}, s, query_universe({}, s));
  CHECK(!r.entailed);
  REQUIRE(r.countermodel.has_value());
  CHECK(r.countermodel->value_of(kA) == 0);
}

TEST_CASE("entailment from an unsatisfiable theory is vacuous") {
  LogicSignature sig = make_godel3();
  TheoryGamma gamma = {parse_sequent(sig, "T |- F")};
  Sequent s = parse_sequent(sig, "T |- [1](A)");
  EntailResult r = entails_m(sig, gamma, s, query_universe(gamma, s));
  CHECK(r.entailed);
  CHECK(r.vacuous);
}

TEST_CASE("truth invariance detects constant-valued formulas") {
  LogicSignature sig = make_godel3();
  MvFormula taut = parse_mv(sig, "imp(A,A)");
  InvarianceResult r = truth_invariant(sig, {}, taut, {kA});
  CHECK(r.invariant);
  CHECK(r.value == 2);

  InvarianceResult r2 = truth_invariant(sig, {}, parse_mv(sig, "A"), {kA});
  CHECK(!r2.invariant);
  REQUIRE(r2.witnesses.size() == 2);
  CHECK(r2.witnesses[0].second != r2.witnesses[1].second);

  TheoryGamma unsat = {parse_sequent(sig, "T |- F")};
  InvarianceResult r3 = truth_invariant(sig, unsat, taut, {kA});
  CHECK(r3.vacuous);
}

TEST_CASE("truth invariance pinned by a theory") {
  LogicSignature sig = make_godel3();
  TheoryGamma gamma = {parse_sequent(sig, "T |- [1](A)"),
                       parse_sequent(sig, "T |- [half](B)")};
  InvarianceResult r =
      truth_invariant(sig, gamma, parse_mv(sig, "imp(A,B)"), {kA, kB});
  CHECK(r.invariant);
  CHECK(r.value == 1);
}

TEST_CASE("designated-value entailment on the classical signature") {
  LogicSignature sig = make_classical2();
  std::vector<int> designated = {1};
  MatrixResult r1 = matrix_entails(sig, {parse_mv(sig, "A")},
                                   parse_mv(sig, "imp(B,A)"), designated,
                                   {kA, kB});
  CHECK(r1.entailed);
  MatrixResult r2 = matrix_entails(sig, {}, parse_mv(sig, "imp(A,A)"),
                                   designated, {kA});
  CHECK(r2.entailed);
  MatrixResult r3 =
      matrix_entails(sig, {}, parse_mv(sig, "A"), designated, {kA});
  CHECK(!r3.entailed);
  REQUIRE(r3.countermodel.has_value());
  CHECK(r3.countermodel->value_of(kA) == 0);
  CHECK_THROWS_AS(
      matrix_entails(sig, {}, parse_mv(sig, "A"), {}, {kA}), MvError);
  CHECK_THROWS_AS(
      matrix_entails(sig, {}, parse_mv(sig, "A"), {9}, {kA}), MvError);
}

TEST_CASE("query universe collects atoms from theory and sequent") {
  LogicSignature sig = make_godel3();
  TheoryGamma gamma = {parse_sequent(sig, "T |- [1](A)")};
  Sequent s = parse_sequent(sig, "[0](B) |- [1](p(a))");
  std::vector<Atom> u = query_universe(gamma, s);
  REQUIRE(u.size() == 3);
  CHECK(u[0] == kA);
  CHECK(u[1] == kB);
  CHECK(u[2] == Atom{"p", {"a"}});
}
