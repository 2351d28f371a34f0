#pragma once

// Formula syntax for the two layers of the workbench:
//  - MvFormula: many-valued formulae built from atoms, value constants and
//    the signature's connectives.
//  - ModalFormula: the positive two-valued layer built from T, F, value
//    operators [x](.) over many-valued formulae, boolean operators [b](.)
//    over modal formulae, and binary & / |.
// Plus sequents, modal literals, a parser for the canonical text grammar and
// the matching printer (parse . print == identity).

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvseq/core.hpp"

namespace mvseq {

class MvFormula {
 public:
  enum class Kind { Atom, Const, App };

  static MvFormula atom(Atom a);
  static MvFormula constant(int value_id);
  static MvFormula app(std::string conn, std::vector<MvFormula> args);

  Kind kind() const { return rep_->kind; }
  const Atom& atom_ref() const { return rep_->atom; }
  int value() const { return rep_->value; }
  const std::string& conn() const { return rep_->conn; }
  const std::vector<MvFormula>& args() const { return rep_->args; }

 private:
  struct Rep {
    Kind kind;
    Atom atom;
    int value = -1;
    std::string conn;
    std::vector<MvFormula> args;
  };
  std::shared_ptr<const Rep> rep_;
};

int compare(const MvFormula& a, const MvFormula& b);
inline bool operator==(const MvFormula& a, const MvFormula& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const MvFormula& a, const MvFormula& b) {
  return compare(a, b) < 0;
}

class ModalFormula {
 public:
  enum class Kind { Top, Bot, Box, BBox, And, Or };

  static ModalFormula top();
  static ModalFormula bottom();
  // [x](phi) with x a value of X over a many-valued formula.
  static ModalFormula box(int value_id, MvFormula inner);
  // [b](Phi) with b a boolean anchor over a modal formula.
  static ModalFormula bbox(int anchor_id, ModalFormula inner);
  static ModalFormula conj(ModalFormula l, ModalFormula r);
  static ModalFormula disj(ModalFormula l, ModalFormula r);

  Kind kind() const { return rep_->kind; }
  int index() const { return rep_->index; }
  const MvFormula& inner_mv() const { return rep_->inner_mv; }
  const ModalFormula& child() const { return rep_->kids[0]; }
  const ModalFormula& left() const { return rep_->kids[0]; }
  const ModalFormula& right() const { return rep_->kids[1]; }

 private:
  struct Rep {
    Kind kind;
    int index = -1;
    MvFormula inner_mv;
    std::vector<ModalFormula> kids;
  };
  std::shared_ptr<const Rep> rep_;
};

int compare(const ModalFormula& a, const ModalFormula& b);
inline bool operator==(const ModalFormula& a, const ModalFormula& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const ModalFormula& a, const ModalFormula& b) {
  return compare(a, b) < 0;
}

// A modal literal [y1]...[yk]A, k >= 1: the prefix is stored outermost first,
// the innermost index lies in X, every outer index is a boolean anchor.
struct ModalLiteral {
  std::vector<int> prefix;
  Atom atom;

  auto operator<=>(const ModalLiteral& other) const {
    // Sort key is (atom, prefix).
    if (auto c = atom <=> other.atom; c != 0) return c;
    return prefix <=> other.prefix;
  }
  bool operator==(const ModalLiteral&) const = default;
};

ModalFormula to_formula(const ModalLiteral& lit);
// Recognizes formulas of the literal shape; nullopt otherwise.
std::optional<ModalLiteral> literal_of(const ModalFormula& f);

struct Sequent {
  ModalFormula lhs;
  ModalFormula rhs;
};

inline bool operator==(const Sequent& a, const Sequent& b) {
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

// Canonical fully parenthesized text forms.
std::string print(const LogicSignature& sig, const MvFormula& f);
std::string print(const LogicSignature& sig, const ModalFormula& f);
std::string print(const LogicSignature& sig, const Sequent& s);

struct ParseError : MvError {
  ParseError(const std::string& what, int line, int col)
      : MvError("parse error at " + std::to_string(line) + ":" +
                std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

MvFormula parse_mv(const LogicSignature& sig, const std::string& text);
ModalFormula parse_modal(const LogicSignature& sig, const std::string& text);
Sequent parse_sequent(const LogicSignature& sig, const std::string& text);
Atom parse_atom(const std::string& text);

struct WellFormedResult {
  bool ok = true;
  std::vector<std::string> problems;
};

WellFormedResult well_formed(const LogicSignature& sig, const MvFormula& f);
WellFormedResult well_formed(const LogicSignature& sig, const ModalFormula& f);
WellFormedResult well_formed(const LogicSignature& sig, const Sequent& s);

void collect_atoms(const MvFormula& f, std::set<Atom>& out);
void collect_atoms(const ModalFormula& f, std::set<Atom>& out);
std::set<Atom> atoms_of(const Sequent& s);

bool atom_free(const MvFormula& f);
bool atom_free(const ModalFormula& f);

}  // namespace mvseq
