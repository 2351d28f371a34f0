#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "mvseq/json_io.hpp"
#include "mvseq/kripke.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"
#include "support.hpp"

using namespace mvseq;
using testsupport::data_file;
using testsupport::make_godel3;

namespace {

Valuation val_ab(int a, int b) {
  return Valuation{std::map<Atom, int>{{Atom{"A", {}}, a}, {Atom{"B", {}}, b}}};
}

Valuation val_a(int a) {
  return Valuation{std::map<Atom, int>{{Atom{"A", {}}, a}}};
}

}  // namespace

TEST_CASE("model of a valuation puts each atom at its value world") {
  auto sig = make_godel3();
  Valuation v = val_ab(2, 1);
  auto m = build_model(sig, v);
  CHECK(m.num_worlds() == 3);
  CHECK(m.interp().size() == 2);
  CHECK(m.bit(2, Atom{"A", {}}) == 1);
  CHECK(m.bit(0, Atom{"A", {}}) == 0);
  CHECK(m.bit(1, Atom{"A", {}}) == 0);
  CHECK(m.bit(1, Atom{"B", {}}) == 1);

  auto back = extract_valuation(sig, m);
  CHECK(back.value_of(Atom{"A", {}}) == 2);
  CHECK(back.value_of(Atom{"B", {}}) == 1);
}

TEST_CASE("fresh anchors add worlds beyond the value domain") {
  auto sig = load_signature_file(data_file("four.json"));
  Valuation v = val_a(3);
  auto m = build_model(sig, v);
  CHECK(m.num_worlds() == 6);
  CHECK(m.bit(3, Atom{"A", {}}) == 1);
  CHECK(m.bit(4, Atom{"A", {}}) == 0);
  CHECK(m.bit(5, Atom{"A", {}}) == 0);
  auto back = extract_valuation(sig, m);
  CHECK(back.value_of(Atom{"A", {}}) == 3);
}

TEST_CASE("extraction rejects interpretations that are not valuations") {
  auto sig = make_godel3();

  SUBCASE("true at two worlds") {
    KripkeModel m{3, {{Atom{"A", {}}, {1, 0, 1}}}};
    CHECK_THROWS_AS(extract_valuation(sig, m), MvError);
  }
  SUBCASE("true nowhere") {
    KripkeModel m{3, {{Atom{"A", {}}, {0, 0, 0}}}};
    CHECK_THROWS_AS(extract_valuation(sig, m), MvError);
  }
  SUBCASE("true only at an anchor world outside the value domain") {
    auto four = load_signature_file(data_file("four.json"));
    KripkeModel m{6, {{Atom{"A", {}}, {0, 0, 0, 0, 1, 0}}}};
    CHECK_THROWS_AS(extract_valuation(four, m), MvError);
  }
}

TEST_CASE("satisfaction clauses") {
  auto sig = make_godel3();
  Valuation v = val_ab(2, 1);
  auto m = build_model(sig, v);

  SUBCASE("many-valued formula holds exactly at its value world") {
    auto a = parse_mv(sig, "A");
    CHECK(sat(sig, m, 2, a) == 1);
    CHECK(sat(sig, m, 0, a) == 0);
    CHECK(sat(sig, m, 1, a) == 0);
    auto f = parse_mv(sig, "imp(A,B)");
    CHECK(sat(sig, m, 1, f) == 1);
    CHECK(sat(sig, m, 2, f) == 0);
  }
  SUBCASE("prefix jumps to the named world, so truth is world-independent") {
    auto f = parse_modal(sig, "[1](A)");
    for (int w = 0; w < 3; ++w) CHECK(sat(sig, m, w, f) == 1);
    auto g = parse_modal(sig, "[half](A)");
    for (int w = 0; w < 3; ++w) CHECK(sat(sig, m, w, g) == 0);
  }
  SUBCASE("conjunction and disjunction are pointwise") {
    auto f = parse_modal(sig, "([1](A) & [half](B))");
    CHECK(sat(sig, m, 0, f) == 1);
    auto g = parse_modal(sig, "([0](A) | [half](B))");
    CHECK(sat(sig, m, 2, g) == 1);
    auto h = parse_modal(sig, "([0](A) | [0](B))");
    CHECK(sat(sig, m, 1, h) == 0);
  }
  SUBCASE("unknown world is rejected") {
    CHECK_THROWS_AS(sat(sig, m, 5, parse_modal(sig, "T")), MvError);
    CHECK_THROWS_AS(sat(sig, m, -1, parse_mv(sig, "A")), MvError);
  }
}

TEST_CASE("prefixed formulas have everywhere-or-nowhere extensions") {
  auto sig = make_godel3();
  Valuation v = val_ab(2, 1);
  auto m = build_model(sig, v);

  auto full = std::set<int>{0, 1, 2};
  CHECK(extension(sig, m, parse_modal(sig, "[1](A)")) == full);
  CHECK(extension(sig, m, parse_modal(sig, "[half](A)")).empty());
  CHECK(extension(sig, m, parse_modal(sig, "([1](A) & [half](B))")) == full);
  CHECK(check_two_valued(sig, m, parse_modal(sig, "[1](A)")));
  CHECK(check_two_valued(sig, m, parse_modal(sig, "([0](A) | [half](B))")));
}

TEST_CASE("agreement of the two readings on value prefixes") {
  auto sig = make_godel3();
  Valuation v = val_ab(2, 1);
  auto phi = parse_mv(sig, "imp(A,B)");
  for (int x = 0; x < 3; ++x) CHECK(correspondence_check(sig, v, phi, x));
  for (int x = 0; x < 3; ++x) {
    CHECK(correspondence_check(sig, v, parse_mv(sig, "A"), x));
  }
}

TEST_CASE("zero-indexed boolean prefix diverges from the evaluation reading") {
  auto sig = make_godel3();
  Valuation v = val_a(2);
  auto m = build_model(sig, v);
  auto f = parse_modal(sig, "[0]([0](A))");

  // Evaluation reading: [0](A) is false, and the outer boolean prefix asks
  // for falsity, so the whole formula evaluates true.
  CHECK(eval_modal(sig, v, f) == 1);

  // Frame reading: the outer prefix jumps to world 0, where [0](A) fails
  // because A does not hold at world 0. Extension is empty, not full.
  CHECK(extension(sig, m, f).empty());
}
