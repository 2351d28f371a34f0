#pragma once

// The binary sequent system over the positive modal language: the structural
// lattice axioms, the truth-table-driven introduction/elimination axiom
// families, the cut/bound/substitution rules, a proof checker, a bounded
// backward search, and a synthesizer that derives any satisfied sequent from
// the literal theory of a valuation.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvseq/core.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

enum class AxiomTag {
  Reflexive,
  Top,
  Bottom,
  MeetProjL,
  MeetProjR,
  JoinInjL,
  JoinInjR,
  Distrib,
  IntroBool,
  IntroUnary,
  IntroBinary,
  IntroConst,
  ElimBool,
  ElimUnary,
  ElimBinary,
  ElimConst,
};

// True for the purely structural lattice schemas, the ones valid under any
// two-valued reading of their placeholders.
bool is_structural(AxiomTag tag);

struct AxiomId {
  AxiomTag tag;
  // Connective symbol for the Unary/Binary families; "&" or "|" for Bool.
  std::string conn;
  // Target value id: an X value for Unary/Binary, a boolean anchor for Bool.
  int value = -1;
};

std::string to_string(const LogicSignature& sig, const AxiomId& id);

// Placeholder formulas the schemas are instantiated with. phi/psi feed the
// many-valued slots, Phi/Psi/Ups the modal ones. Missing placeholders that a
// schema needs raise MvError.
struct Placeholders {
  std::optional<MvFormula> phi, psi;
  std::optional<ModalFormula> Phi, Psi, Ups;
};

// Instantiates one axiom schema. Disjunctions enumerate table preimages in
// ascending value-id order; an empty preimage set becomes F. The Const
// schemas take the rigid (atom-free) literal itself as Phi.
Sequent generate_axiom(const LogicSignature& sig, const AxiomId& id,
                       const Placeholders& ph);

// Matches s against every schema modulo flattening and multiset-sorting of
// nested conjunction/disjunction arguments, in the declaration order of
// AxiomTag; returns the first match.
std::optional<AxiomId> is_axiom(const LogicSignature& sig, const Sequent& s);

// Rebuilds a formula with nested &/| chains flattened, sorted, and re-nested
// left-to-right: the matching normal form used by is_axiom.
ModalFormula acnorm(const ModalFormula& f);

// The constant bit of a rigid literal: a prefix chain over an atom-free
// many-valued body. nullopt when f has no such shape.
std::optional<int> rigid_bit(const LogicSignature& sig, const ModalFormula& f);

// Uniform substitution: many-valued letters (atoms) to many-valued formulas,
// and modal letters (whole literal chains) to modal formulas. Longer chains
// match before their sub-chains; replacement is single-pass.
struct Substitution {
  std::map<Atom, MvFormula> mv;
  std::vector<std::pair<ModalLiteral, ModalFormula>> modal;

  bool empty() const { return mv.empty() && modal.empty(); }
};

MvFormula apply(const Substitution& sigma, const MvFormula& f);
ModalFormula apply(const Substitution& sigma, const ModalFormula& f);
Sequent apply(const Substitution& sigma, const Sequent& s);

enum class RuleKind { Cut, LowerBound, UpperBound, Subst };

std::optional<RuleKind> rule_kind_of(const std::string& name);
std::string to_string(RuleKind kind);

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;
using Proof = ProofPtr;

// Leaf justified as an axiom instance; the claimed label is informational,
// the checker always revalidates through is_axiom.
struct AxiomJust {
  std::string claimed;
};

// Leaf citing a theory member by index.
struct HypJust {
  int index = -1;
};

struct RuleJust {
  RuleKind kind;
  Substitution sigma;  // Subst only
};

struct ProofNode {
  Sequent conclusion;
  std::variant<AxiomJust, HypJust, RuleJust> just;
  std::vector<ProofPtr> premises;
  // Optional annotation naming the derived step this subtree expands;
  // never consulted by the checker.
  std::string macro;
};

ProofPtr make_axiom(const LogicSignature& sig, Sequent s);
ProofPtr make_hyp(int index, Sequent s);
ProofPtr make_rule(RuleKind kind, Sequent conclusion,
                   std::vector<ProofPtr> premises,
                   Substitution sigma = Substitution{});

struct CheckVerdict {
  bool ok = true;
  std::string message;
  // Child indices from the root to the first failing node,
  // leftmost-innermost order.
  std::vector<int> path;
};

// Validates every node: axiom leaves through is_axiom, hypothesis leaves
// against gamma, rule nodes by shape. Substitution nodes additionally demand
// a hypothesis-free premise subtree, and, when modal letters are substituted,
// structural-only axiom leaves beneath.
CheckVerdict check_proof(const LogicSignature& sig, const TheoryGamma& gamma,
                         const Proof& p);

// Backward search over axiom/hypothesis closure and the cut/bound rules,
// with cut formulas drawn from the subformulas of gamma and s plus their
// canonical reducts. Returns a proof of height <= depth or nullopt.
std::optional<Proof> prove_bounded(const LogicSignature& sig,
                                   const TheoryGamma& gamma, const Sequent& s,
                                   int depth);

struct SynthesisResult {
  Proof proof;
  // The literal theory the proof's hypothesis leaves cite: T |- L for the
  // literals the valuation makes true, L |- F for the ones it makes false,
  // in first-use order.
  TheoryGamma theory;
};

// Constructive completeness at one valuation: given satisfies_sequent(v,s),
// derives s from the literal theory of v. Supports sequents whose boolean
// operators range over conjunctions/disjunctions of literal chains and rigid
// literals; throws MvError outside that fragment or when the precondition
// fails.
SynthesisResult synthesize_completeness_proof(const LogicSignature& sig,
                                              const Valuation& v,
                                              const Sequent& s);

}  // namespace mvseq
