#pragma once

// Canonical reduction of modal formulae to disjunctive normal form over
// modal literals. Value operators over compound many-valued formulae expand
// through the truth table; boolean operators over compound modal formulae
// expand through the two-valued meet/join tables; boolean prefixes collapse
// eagerly ([true] is the identity, two [false] cancel).

#include <optional>
#include <string>
#include <vector>

#include "mvseq/core.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

class Dnf {
 public:
  enum class Kind { Top, Bottom, Disjunction };

  static Dnf top();
  static Dnf bottom();
  // Sorts literals inside each conjunction (dropping duplicates), sorts the
  // disjunct list, drops duplicate disjuncts. An empty conjunction collapses
  // the whole form to Top; an empty disjunct list is Bottom.
  static Dnf of_disjuncts(std::vector<std::vector<ModalLiteral>> disjuncts);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<ModalLiteral>>& disjuncts() const {
    return disjuncts_;
  }

  bool operator==(const Dnf&) const = default;

 private:
  Kind kind_ = Kind::Bottom;
  std::vector<std::vector<ModalLiteral>> disjuncts_;
};

// Left-nested embedding back into the modal language: Top -> T, Bottom -> F,
// otherwise ((d1 | d2) | ...) of ((l1 & l2) & ...) conjunctions.
ModalFormula embed(const Dnf& d);

// Applies one rewrite at the root, which must be a value or boolean operator
// over a reducible body (connective application, constant, T/F, & or |).
// The result enumerates index tuples in ascending id order; an empty index
// set yields F and a singleton yields the bare conjunct. Throws MvError
// ("already literal") when the body is atomic.
ModalFormula reduce_step(const LogicSignature& sig, const ModalFormula& f);

// Full canonical form. When trace is non-null, each rewrite and each prefix
// collapse appends one "before ~> after" line.
Dnf canonical(const LogicSignature& sig, const ModalFormula& f,
              std::vector<std::string>* trace = nullptr);

// Structural well-formedness of a normal form: literal prefixes end in X and
// are boolean elsewhere (length at most 2 after collapse), conjunctions and
// the disjunct list are sorted and duplicate-free.
bool dnf_shape_ok(const LogicSignature& sig, const Dnf& d);

}  // namespace mvseq
