#include <doctest.h>

#include "mvseq/syntax.hpp"
#include "support.hpp"

using namespace mvseq;
using testsupport::make_godel3;

namespace {

void check_mv_roundtrip(const LogicSignature& sig, const std::string& text) {
  MvFormula f = parse_mv(sig, text);
  CHECK(print(sig, f) == text);
  CHECK(parse_mv(sig, print(sig, f)) == f);
}

void check_modal_roundtrip(const LogicSignature& sig, const std::string& text) {
  ModalFormula f = parse_modal(sig, text);
  CHECK(print(sig, f) == text);
  CHECK(parse_modal(sig, print(sig, f)) == f);
}

}  // namespace

TEST_CASE("many-valued parse and print round trips") {
  LogicSignature sig = make_godel3();
  check_mv_roundtrip(sig, "A");
  check_mv_roundtrip(sig, "imp(A,B)");
  check_mv_roundtrip(sig, "imp(A,imp(B,A))");
  check_mv_roundtrip(sig, "#half");
  check_mv_roundtrip(sig, "imp(#0,p(a,b))");
}

TEST_CASE("modal parse and print round trips") {
  LogicSignature sig = make_godel3();
  check_modal_roundtrip(sig, "T");
  check_modal_roundtrip(sig, "F");
  check_modal_roundtrip(sig, "[half](imp(A,B))");
  check_modal_roundtrip(sig, "(([1](A) & [half](B)) | T)");
  check_modal_roundtrip(sig, "[0]([1](A))");
  check_modal_roundtrip(sig, "((T & F) | ([0](A) & [1](B)))");
}

TEST_CASE("sequent parse and print round trip") {
  LogicSignature sig = make_godel3();
  std::string text = "T |- [half](imp(A,B))";
  Sequent s = parse_sequent(sig, text);
  CHECK(print(sig, s) == text);
  CHECK(s.lhs.kind() == ModalFormula::Kind::Top);
  CHECK(s.rhs.kind() == ModalFormula::Kind::Box);
  CHECK(s.rhs.index() == 1);
}

TEST_CASE("parser rejects malformed input") {
  LogicSignature sig = make_godel3();
  CHECK_THROWS_AS(parse_mv(sig, "imp(A)"), ParseError);
  CHECK_THROWS_AS(parse_mv(sig, "imp(A,B,A)"), ParseError);
  CHECK_THROWS_AS(parse_mv(sig, "#nope"), ParseError);
  CHECK_THROWS_AS(parse_modal(sig, "[2](A)"), ParseError);
  CHECK_THROWS_AS(parse_modal(sig, "[1](A"), ParseError);
  CHECK_THROWS_AS(parse_sequent(sig, "T |-"), ParseError);
  CHECK_THROWS_AS(parse_sequent(sig, "T [1](A)"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  LogicSignature sig = make_godel3();
  try {
    parse_mv(sig, "imp(A,\n#zzz)");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col >= 1);
  }
}

TEST_CASE("prefix operator nesting parses inside out") {
  LogicSignature sig = make_godel3();
  ModalFormula f = parse_modal(sig, "[0]([1]([half](A)))");
  REQUIRE(f.kind() == ModalFormula::Kind::BBox);
  CHECK(f.index() == 0);
  REQUIRE(f.child().kind() == ModalFormula::Kind::BBox);
  CHECK(f.child().index() == 2);
  REQUIRE(f.child().child().kind() == ModalFormula::Kind::Box);
  CHECK(f.child().child().index() == 1);
}

TEST_CASE("modal literal chains convert both ways") {
  LogicSignature sig = make_godel3();
  Atom a{"A", {}};
  ModalLiteral lit{{0, 2, 1}, a};
  ModalFormula f = to_formula(lit);
  CHECK(print(sig, f) == "[0]([1]([half](A)))");
  auto back = literal_of(f);
  REQUIRE(back.has_value());
  CHECK(back->prefix == lit.prefix);
  CHECK(back->atom == a);
  CHECK(!literal_of(parse_modal(sig, "([1](A) & T)")).has_value());
  CHECK(!literal_of(parse_modal(sig, "T")).has_value());
}

TEST_CASE("modal literal ordering sorts by atom then prefix") {
  Atom a{"A", {}};
  Atom b{"B", {}};
  ModalLiteral la{{1}, a};
  ModalLiteral lb{{0}, b};
  ModalLiteral la2{{0, 1}, a};
  CHECK(la < lb);
  CHECK(la2 < lb);
  CHECK((la < la2) != (la2 < la));
}

TEST_CASE("well-formedness checks operator indices") {
  LogicSignature sig = make_godel3();
  CHECK(well_formed(sig, parse_modal(sig, "[half](imp(A,B))")).ok);
  CHECK(well_formed(sig, parse_sequent(sig, "T |- [1](A)")).ok);

  ModalFormula bad_box = ModalFormula::box(7, MvFormula::atom(Atom{"A", {}}));
  CHECK(!well_formed(sig, bad_box).ok);
  ModalFormula bad_bbox = ModalFormula::bbox(1, ModalFormula::top());
  CHECK(!well_formed(sig, bad_bbox).ok);
  MvFormula bad_arity = MvFormula::app("imp", {MvFormula::atom(Atom{"A", {}})});
  CHECK(!well_formed(sig, bad_arity).ok);
  MvFormula bad_const = MvFormula::constant(9);
  CHECK(!well_formed(sig, bad_const).ok);
}

TEST_CASE("atom collection and atom-freeness") {
  LogicSignature sig = make_godel3();
  Sequent s = parse_sequent(sig, "([1](A) & [0](B)) |- [half](imp(A,C))");
  std::set<Atom> atoms = atoms_of(s);
  CHECK(atoms.size() == 3);
  CHECK(atoms.count(Atom{"C", {}}) == 1);
  CHECK(atom_free(parse_mv(sig, "imp(#0,#1)")));
  CHECK(!atom_free(parse_mv(sig, "imp(#0,A)")));
  CHECK(atom_free(parse_modal(sig, "[1](#half)")));
  CHECK(!atom_free(parse_modal(sig, "[1](A)")));
}

TEST_CASE("structural comparison orders formulas consistently") {
  LogicSignature sig = make_godel3();
  MvFormula a = parse_mv(sig, "A");
  MvFormula b = parse_mv(sig, "B");
  CHECK(a == parse_mv(sig, "A"));
  CHECK(a != b);
  CHECK((a < b) != (b < a));
  ModalFormula f = parse_modal(sig, "[1](A)");
  ModalFormula g = parse_modal(sig, "[1](B)");
  CHECK((f < g) != (g < f));
  CHECK(f == parse_modal(sig, "[1](A)"));
}
