#pragma once

// Exhaustive and seeded property suites over formula pools: reduction
// preservation and shape, axiom and rule soundness, synthesis completeness,
// entailment coincidence on the classical signature, the frame-semantics
// laws, and value-order independence.

#include <string>
#include <vector>

#include "mvseq/calculus.hpp"
#include "mvseq/core.hpp"
#include "mvseq/kripke.hpp"
#include "mvseq/reduction.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  long long violations = 0;
  // Scope note, or a description of the first failure.
  std::string detail = {};
  double elapsed_ms = 0.0;
};

// All many-valued formulas over the given atom leaves up to the given
// connective nesting depth, deterministic order.
std::vector<MvFormula> mv_pool(const LogicSignature& sig, int depth,
                               const std::vector<Atom>& atoms);

// All modal formulas with at most max_ops operator nodes over the leaves
// T, F, and [x]A per value and atom. Layers stop early at the cap.
std::vector<ModalFormula> modal_pool(const LogicSignature& sig, int max_ops,
                                     const std::vector<Atom>& atoms,
                                     size_t cap = 300000);

// A deterministic pool of sequents inside the synthesizer's fragment.
std::vector<Sequent> sequent_pool(const LogicSignature& sig, int count);

std::vector<Valuation> all_valuations(const LogicSignature& sig,
                                      const std::vector<Atom>& atoms);

// True when some false-anchored prefix operator occurs in f.
bool has_zero_prefix(const LogicSignature& sig, const ModalFormula& f);

// Presentation permutation: value j of the result is value perm[j] of the
// input; tables are re-indexed, symbols and anchors follow their values.
LogicSignature permute_signature(const LogicSignature& sig,
                                 const std::vector<int>& perm);

// Seeded signature with num_values values, fresh boolean anchors, one unary
// and one binary connective with random total tables.
LogicSignature random_signature(int num_values, unsigned seed);

// Truth preservation, normal-form shape, and value preservation of the
// canonical rewriting, in one pass (exhaustive pools for small domains,
// 1000 seeded cases otherwise).
std::vector<SuiteResult> reduction_suites(const LogicSignature& sig,
                                          unsigned seed);

// Generated axiom instances hold in every model, accepted pool sequents hold
// in every model, and rule applications preserve satisfaction.
SuiteResult soundness_suite(const LogicSignature& sig);

// Synthesis over every satisfied (valuation, sequent) pair of the pool, with
// checker acceptance, plus semantic validity of each synthesized proof.
std::vector<SuiteResult> completeness_suites(const LogicSignature& sig);

// Truth-invariance vs designated-value entailment on a classical two-valued
// signature. Premise sets: empty, and singletons from the depth-2 subpool.
SuiteResult coincidence_suite(const LogicSignature& sig);

// Everywhere-or-nowhere extensions, the three-way agreement on formulas free
// of false-anchored prefixes, and the discrepancy report for the rest.
std::vector<SuiteResult> kripke_suites(const LogicSignature& sig);

// Reruns the cheap suites under a seeded value permutation and compares
// verdicts against the supplied baseline results.
SuiteResult permutation_suite(const LogicSignature& sig, unsigned seed,
                              const std::vector<SuiteResult>& baseline);

struct SelftestReport {
  std::vector<SuiteResult> suites;

  bool all_pass() const {
    for (const SuiteResult& s : suites) {
      if (!s.pass) return false;
    }
    return true;
  }
};

SelftestReport run_selftest(const LogicSignature& sig, unsigned seed);

// Text report: one line per suite, no timings (byte-stable across runs).
std::string format_report(const SelftestReport& report);

}  // namespace mvseq
