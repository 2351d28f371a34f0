#pragma once

// Kripke reading of the modal language over the frame whose worlds are the
// value ids of Y and whose accessibility relations are the constant maps
// R_w = W x {w}: satisfaction, extensions, the everywhere-or-nowhere law,
// and the agreement check against the valuation semantics.

#include <map>
#include <set>

#include "mvseq/core.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

// Immutable interpretation: for each atom, one membership bit per world.
class KripkeModel {
 public:
  KripkeModel(int num_worlds, std::map<Atom, std::vector<char>> interp);

  int num_worlds() const { return num_worlds_; }
  const std::map<Atom, std::vector<char>>& interp() const { return interp_; }
  bool bit(int world, const Atom& a) const;

 private:
  int num_worlds_ = 0;
  std::map<Atom, std::vector<char>> interp_;
};

// The model of a valuation: atom A is true exactly at world v(A).
KripkeModel build_model(const LogicSignature& sig, const Valuation& v);

// Inverse of build_model. Throws MvError when some atom is not true at
// exactly one world, or its world lies outside the many-valued domain.
Valuation extract_valuation(const LogicSignature& sig, const KripkeModel& m);

// Satisfaction at a world. A many-valued formula holds at w iff it evaluates
// to w under the extracted valuation; a prefixed formula holds anywhere iff
// its body holds at the world named by the prefix index; conjunction and
// disjunction are pointwise. Throws MvError on an unknown world.
int sat(const LogicSignature& sig, const KripkeModel& m, int world,
        const MvFormula& f);
int sat(const LogicSignature& sig, const KripkeModel& m, int world,
        const ModalFormula& f);

// All worlds satisfying f, ascending.
std::set<int> extension(const LogicSignature& sig, const KripkeModel& m,
                        const ModalFormula& f);

// True iff the extension is empty or the full world set.
bool check_two_valued(const LogicSignature& sig, const KripkeModel& m,
                      const ModalFormula& f);

// Three-way agreement for one instance: v(phi) = x, the lifted valuation
// satisfies [x](phi), and the extension of [x](phi) is the full world set
// must all hold or all fail.
bool correspondence_check(const LogicSignature& sig, const Valuation& v,
                          const MvFormula& phi, int x);

}  // namespace mvseq
