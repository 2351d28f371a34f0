#include "mvseq/core.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace mvseq {

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += a.args[i];
  }
  return out + ")";
}

LogicSignature::LogicSignature(std::string name,
                               const std::vector<std::string>& x_symbols,
                               const std::string& bool_false_symbol,
                               const std::string& bool_true_symbol,
                               std::vector<Connective> connectives)
    : name_(std::move(name)), connectives_(std::move(connectives)) {
  for (const auto& sym : x_symbols) {
    values_.push_back({static_cast<int>(values_.size()), sym});
  }
  num_x_ = static_cast<int>(values_.size());
  auto resolve_anchor = [&](const std::string& sym) {
    for (int i = 0; i < num_x_; ++i) {
      if (values_[i].symbol == sym) return i;
    }
    // Anchor symbol not declared in X: append a fresh value to Y.
    for (int i = num_x_; i < static_cast<int>(values_.size()); ++i) {
      if (values_[i].symbol == sym) return i;
    }
    values_.push_back({static_cast<int>(values_.size()), sym});
    return static_cast<int>(values_.size()) - 1;
  };
  bool_false_ = resolve_anchor(bool_false_symbol);
  bool_true_ = resolve_anchor(bool_true_symbol);
}

int LogicSignature::bool_bit(int id) const {
  if (id == bool_false_) return 0;
  if (id == bool_true_) return 1;
  throw MvError("value '" + value_symbol(id) + "' is not a boolean anchor");
}

std::optional<int> LogicSignature::find_value(const std::string& symbol) const {
  for (const auto& tv : values_) {
    if (tv.symbol == symbol) return tv.id;
  }
  return std::nullopt;
}

const std::string& LogicSignature::value_symbol(int id) const {
  if (id < 0 || id >= static_cast<int>(values_.size())) {
    throw MvError("value id out of range: " + std::to_string(id));
  }
  return values_[id].symbol;
}

const Connective* LogicSignature::find_connective(
    const std::string& symbol) const {
  for (const auto& c : connectives_) {
    if (c.symbol == symbol) return &c;
  }
  return nullptr;
}

namespace {

long table_size_for(int num_x, int arity) {
  long n = 1;
  for (int i = 0; i < arity; ++i) n *= num_x;
  return n;
}

std::string cell_name(const LogicSignature& sig, const Connective& c,
                      long index) {
  if (c.arity == 0) return "()";
  if (c.arity == 1) return "(" + sig.value_symbol(static_cast<int>(index)) + ")";
  int row = static_cast<int>(index) / sig.num_x();
  int col = static_cast<int>(index) % sig.num_x();
  return "(" + sig.value_symbol(row) + "," + sig.value_symbol(col) + ")";
}

}  // namespace

std::vector<Diagnostic> validate_signature(const LogicSignature& sig) {
  std::vector<Diagnostic> out;
  if (sig.num_x() < 2) {
    out.push_back({"domain-too-small",
                   "the value domain X must contain at least 2 values, got " +
                       std::to_string(sig.num_x())});
  }
  {
    std::set<std::string> seen;
    for (const auto& tv : sig.values()) {
      if (!seen.insert(tv.symbol).second) {
        out.push_back({"duplicate-value-symbol",
                       "value symbol '" + tv.symbol + "' declared twice"});
      }
    }
  }
  if (sig.bool_false() == sig.bool_true()) {
    out.push_back({"boolean-anchors-coincide",
                   "bool_false and bool_true resolve to the same value '" +
                       sig.value_symbol(sig.bool_false()) + "'"});
  }
  std::set<std::string> conn_seen;
  for (const auto& c : sig.connectives()) {
    if (!conn_seen.insert(c.symbol).second) {
      out.push_back({"duplicate-connective",
                     "connective '" + c.symbol + "' declared twice"});
    }
    if (c.arity < 0 || c.arity > 2) {
      out.push_back({"bad-arity", "connective '" + c.symbol +
                                      "' has unsupported arity " +
                                      std::to_string(c.arity)});
      continue;
    }
    long want = table_size_for(sig.num_x(), c.arity);
    for (long i = 0; i < want; ++i) {
      if (i >= static_cast<long>(c.table.size()) || c.table[i] < 0) {
        out.push_back({"missing-cell", "connective '" + c.symbol +
                                           "' has no result for cell " +
                                           cell_name(sig, c, i)});
      } else if (c.table[i] >= sig.num_x()) {
        out.push_back(
            {"illegal-output",
             "connective '" + c.symbol + "' maps cell " + cell_name(sig, c, i) +
                 " outside the value domain X"});
      }
    }
    if (static_cast<long>(c.table.size()) > want) {
      out.push_back({"extra-cells",
                     "connective '" + c.symbol + "' declares " +
                         std::to_string(c.table.size()) + " cells, expected " +
                         std::to_string(want)});
    }
  }
  return out;
}

int eval_connective(const LogicSignature& sig, const std::string& symbol,
                    std::span<const int> args) {
  const Connective* c = sig.find_connective(symbol);
  if (!c) throw MvError("unknown connective '" + symbol + "'");
  if (static_cast<int>(args.size()) != c->arity) {
    throw MvError("connective '" + symbol + "' expects " +
                  std::to_string(c->arity) + " arguments, got " +
                  std::to_string(args.size()));
  }
  long index = 0;
  for (int a : args) {
    if (!sig.is_x(a)) {
      throw MvError("argument value id " + std::to_string(a) +
                    " outside the domain X");
    }
    index = index * sig.num_x() + a;
  }
  if (index >= static_cast<long>(c->table.size()) || c->table[index] < 0 ||
      c->table[index] >= sig.num_x()) {
    throw MvError("connective '" + symbol + "' has a defective table cell");
  }
  return c->table[index];
}

int Valuation::value_of(const Atom& a) const {
  auto it = assignment_.find(a);
  if (it == assignment_.end()) {
    throw MvError("unbound atom: " + to_string(a));
  }
  return it->second;
}

std::vector<Atom> Valuation::universe() const {
  std::vector<Atom> out;
  out.reserve(assignment_.size());
  for (const auto& [a, _] : assignment_) out.push_back(a);
  return out;
}

Valuation Valuation::with(const Atom& a, int value) const {
  auto m = assignment_;
  m[a] = value;
  return Valuation(std::move(m));
}

std::string to_string(const LogicSignature& sig, const Valuation& v) {
  std::string out;
  for (const auto& [a, id] : v.assignment()) {
    if (!out.empty()) out += ", ";
    out += to_string(a) + "=" + sig.value_symbol(id);
  }
  return out;
}

}  // namespace mvseq
