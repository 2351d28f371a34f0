#pragma once

// Valuation semantics for both languages: homomorphic many-valued evaluation,
// the induced two-valued modal valuation with its inverse, sequent
// satisfaction, model enumeration, and the entailment relations.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mvseq/core.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

// Homomorphic extension of v: atoms via v, constants to themselves,
// applications via the truth table. Throws MvError on unbound atoms.
int eval_mv(const LogicSignature& sig, const Valuation& v, const MvFormula& f);

// The two-valued valuation induced by v on modal formulas:
// [x](phi) holds iff v(phi) = x; [b](Phi) holds iff Phi's bit equals b's;
// &, | are min, max; T holds, F fails. Returns 0 or 1.
int eval_modal(const LogicSignature& sig, const Valuation& v,
               const ModalFormula& f);

// The lifted valuation as a first-class function on modal formulas.
class ModalValuation {
 public:
  explicit ModalValuation(Valuation v) : v_(std::move(v)) {}

  const Valuation& underlying() const { return v_; }
  int operator()(const LogicSignature& sig, const ModalFormula& f) const {
    return eval_modal(sig, v_, f);
  }

 private:
  Valuation v_;
};

ModalValuation lift(const Valuation& v);

// Reconstructs the many-valued valuation by probing [x](A) for every atom of
// the universe; inverse of lift. Throws MvError if no value fits an atom.
Valuation invert(const LogicSignature& sig, const ModalValuation& alpha);

// 1 iff the lifted value of lhs is <= the lifted value of rhs.
int satisfies_sequent(const LogicSignature& sig, const Valuation& v,
                      const Sequent& s);

using TheoryGamma = std::vector<Sequent>;

bool satisfies_all(const LogicSignature& sig, const Valuation& v,
                   const TheoryGamma& gamma);

// Calls fn for every total valuation of the universe, in ascending
// lexicographic order of assigned value ids (last atom varies fastest).
// fn returning false stops the enumeration early.
void for_each_valuation(const LogicSignature& sig,
                        const std::vector<Atom>& universe,
                        const std::function<bool(const Valuation&)>& fn);

// All valuations over the universe satisfying every sequent of gamma,
// in enumeration order.
std::vector<Valuation> enumerate_models(const LogicSignature& sig,
                                        const TheoryGamma& gamma,
                                        const std::vector<Atom>& universe);

struct EntailResult {
  bool entailed = false;
  // True when gamma has no model over the universe (entailed holds vacuously).
  bool vacuous = false;
  std::optional<Valuation> countermodel;
  long long models_checked = 0;
};

// Sequent entailment: every model of gamma satisfies s. The countermodel,
// when present, is the enumeration-first model of gamma refuting s.
EntailResult entails_m(const LogicSignature& sig, const TheoryGamma& gamma,
                       const Sequent& s, const std::vector<Atom>& universe);

struct InvarianceResult {
  bool invariant = false;
  bool vacuous = false;
  // The shared value id, present iff invariant and not vacuous.
  std::optional<int> value;
  // Two models with distinct values when not invariant.
  std::vector<std::pair<Valuation, int>> witnesses;
  long long models_checked = 0;
};

// Truth invariance: phi takes one single value across all models of gamma.
InvarianceResult truth_invariant(const LogicSignature& sig,
                                 const TheoryGamma& gamma, const MvFormula& phi,
                                 const std::vector<Atom>& universe);

struct MatrixResult {
  bool entailed = false;
  std::optional<Valuation> countermodel;
};

// Designated-value entailment: whenever every premise evaluates into
// designated, so does phi. designated must be a nonempty subset of X.
MatrixResult matrix_entails(const LogicSignature& sig,
                            const std::vector<MvFormula>& premises,
                            const MvFormula& phi,
                            const std::vector<int>& designated,
                            const std::vector<Atom>& universe);

// Union of the atoms of gamma and s, sorted; the default enumeration universe.
std::vector<Atom> query_universe(const TheoryGamma& gamma, const Sequent& s);

}  // namespace mvseq
