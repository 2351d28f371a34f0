#pragma once

// Core domain types for finite truth-functional many-valued logics:
// truth values, connectives given by total truth tables, logic signatures,
// ground atoms, and valuations.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvseq {

struct MvError : std::runtime_error {
  explicit MvError(const std::string& what) : std::runtime_error(what) {}
};

// One element of the unified value domain Y = X u {false,true}. Ids are dense
// indices into the owning signature's value list; the first |X| ids form the
// many-valued domain X, any ids past that are fresh boolean anchors.
struct TruthValue {
  int id = 0;
  std::string symbol;
};

// Total truth table for one connective, stored row-major over X:
// arity 0 -> table[0], arity 1 -> table[a], arity 2 -> table[a * |X| + b].
// Hand-built tables may carry missing (< 0) or out-of-domain cells;
// validate_signature reports those instead of the constructor throwing.
struct Connective {
  std::string symbol;
  int arity = 0;
  std::vector<int> table;
};

struct Diagnostic {
  std::string code;
  std::string message;
};

// A ground atom: a predicate symbol applied to constant arguments. A plain
// propositional letter is an atom with no arguments.
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a);

class LogicSignature {
 public:
  LogicSignature(std::string name, const std::vector<std::string>& x_symbols,
                 const std::string& bool_false_symbol,
                 const std::string& bool_true_symbol,
                 std::vector<Connective> connectives);

  const std::string& name() const { return name_; }
  // All of Y: the declared X values first, then any fresh boolean anchors.
  const std::vector<TruthValue>& values() const { return values_; }
  int num_x() const { return num_x_; }
  int num_y() const { return static_cast<int>(values_.size()); }
  int bool_false() const { return bool_false_; }
  int bool_true() const { return bool_true_; }
  const std::vector<Connective>& connectives() const { return connectives_; }

  bool is_x(int id) const { return id >= 0 && id < num_x_; }
  bool is_bool_anchor(int id) const {
    return id == bool_false_ || id == bool_true_;
  }
  // Maps a boolean anchor id to its bit.
  int bool_bit(int id) const;
  int anchor_of_bit(int bit) const { return bit ? bool_true_ : bool_false_; }

  std::optional<int> find_value(const std::string& symbol) const;
  const std::string& value_symbol(int id) const;
  const Connective* find_connective(const std::string& symbol) const;

 private:
  std::string name_;
  std::vector<TruthValue> values_;
  int num_x_ = 0;
  int bool_false_ = 0;
  int bool_true_ = 0;
  std::vector<Connective> connectives_;
};

// Reports every violated signature invariant: |X| >= 2, distinct boolean
// anchors, unique symbols, arities within 0..2, total tables with outputs
// inside X. An empty result means the signature is sound.
std::vector<Diagnostic> validate_signature(const LogicSignature& sig);

// Table lookup for a connective applied to value ids from X.
// Throws MvError on unknown connective, arity mismatch, or defective cell.
int eval_connective(const LogicSignature& sig, const std::string& symbol,
                    std::span<const int> args);

// Total assignment of X values to a finite universe of atoms.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::map<Atom, int> assignment)
      : assignment_(std::move(assignment)) {}

  int value_of(const Atom& a) const;
  bool contains(const Atom& a) const { return assignment_.count(a) != 0; }
  const std::map<Atom, int>& assignment() const { return assignment_; }
  std::vector<Atom> universe() const;
  Valuation with(const Atom& a, int value) const;

  bool operator==(const Valuation& other) const = default;

 private:
  std::map<Atom, int> assignment_;
};

std::string to_string(const LogicSignature& sig, const Valuation& v);

}  // namespace mvseq
