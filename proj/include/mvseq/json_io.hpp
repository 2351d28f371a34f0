#pragma once

// File formats: logic definitions and valuations as JSON, theories and
// formula lists as line-oriented text, proofs as JSON trees.

#include <string>
#include <vector>

#include "mvseq/calculus.hpp"
#include "mvseq/core.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"

namespace mvseq {

// {"name": ..., "values": [...], "bool_false": ..., "bool_true": ...,
//  "connectives": [{"symbol", "arity", "table"}]}. Tables hold value symbols;
// binary tables are row-major nested lists, unary flat lists, nullary a
// single symbol. Unresolvable cells load as defects for validate_signature
// to report. Structural problems raise MvError.
LogicSignature load_signature_json(const std::string& text);
LogicSignature load_signature_file(const std::string& path);

// JSON object mapping atom text to value symbol.
Valuation load_valuation_file(const LogicSignature& sig,
                              const std::string& path);

// One sequent per line; blank lines and lines starting with '#' are skipped.
TheoryGamma load_gamma_file(const LogicSignature& sig,
                            const std::string& path);

// One many-valued formula per line; same comment convention.
std::vector<MvFormula> load_mv_formulas_file(const LogicSignature& sig,
                                             const std::string& path);

// Proof node: {"sequent": text, "by": "axiom:<tag>" | "hyp:<i>" |
// "rule:<cut|lower|upper|subst>", "subst": {letter: formula}?,
// "premises": [node...]?, "macro": name?}.
Proof proof_from_json_text(const LogicSignature& sig, const std::string& text);
Proof load_proof_file(const LogicSignature& sig, const std::string& path);
std::string proof_to_json_text(const LogicSignature& sig, const Proof& p);

std::string read_text_file(const std::string& path);

}  // namespace mvseq
