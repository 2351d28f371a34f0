#include "mvseq/reduction.hpp"

#include <algorithm>

namespace mvseq {

Dnf Dnf::top() {
  Dnf d;
  d.kind_ = Kind::Top;
  return d;
}

Dnf Dnf::bottom() {
  Dnf d;
  d.kind_ = Kind::Bottom;
  return d;
}

Dnf Dnf::of_disjuncts(std::vector<std::vector<ModalLiteral>> disjuncts) {
  for (auto& conj : disjuncts) {
    std::sort(conj.begin(), conj.end());
    conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
    if (conj.empty()) return top();
  }
  std::sort(disjuncts.begin(), disjuncts.end());
  disjuncts.erase(std::unique(disjuncts.begin(), disjuncts.end()),
                  disjuncts.end());
  if (disjuncts.empty()) return bottom();
  Dnf d;
  d.kind_ = Kind::Disjunction;
  d.disjuncts_ = std::move(disjuncts);
  return d;
}

ModalFormula embed(const Dnf& d) {
  switch (d.kind()) {
    case Dnf::Kind::Top:
      return ModalFormula::top();
    case Dnf::Kind::Bottom:
      return ModalFormula::bottom();
    case Dnf::Kind::Disjunction:
      break;
  }
  std::optional<ModalFormula> out;
  for (const auto& conj : d.disjuncts()) {
    std::optional<ModalFormula> c;
    for (const auto& lit : conj) {
      ModalFormula lf = to_formula(lit);
      c = c ? ModalFormula::conj(std::move(*c), std::move(lf)) : std::move(lf);
    }
    out = out ? ModalFormula::disj(std::move(*out), std::move(*c))
              : std::move(*c);
  }
  return *out;
}

namespace {

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  if (a.kind() == Dnf::Kind::Bottom || b.kind() == Dnf::Kind::Bottom) {
    return Dnf::bottom();
  }
  if (a.kind() == Dnf::Kind::Top) return b;
  if (b.kind() == Dnf::Kind::Top) return a;
  std::vector<std::vector<ModalLiteral>> out;
  out.reserve(a.disjuncts().size() * b.disjuncts().size());
  for (const auto& ca : a.disjuncts()) {
    for (const auto& cb : b.disjuncts()) {
      std::vector<ModalLiteral> merged;
      merged.reserve(ca.size() + cb.size());
      std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(),
                 std::back_inserter(merged));
      out.push_back(std::move(merged));
    }
  }
  return Dnf::of_disjuncts(std::move(out));
}

Dnf dnf_or(const Dnf& a, const Dnf& b) {
  if (a.kind() == Dnf::Kind::Top || b.kind() == Dnf::Kind::Top) {
    return Dnf::top();
  }
  if (a.kind() == Dnf::Kind::Bottom) return b;
  if (b.kind() == Dnf::Kind::Bottom) return a;
  std::vector<std::vector<ModalLiteral>> out = a.disjuncts();
  out.insert(out.end(), b.disjuncts().begin(), b.disjuncts().end());
  return Dnf::of_disjuncts(std::move(out));
}

// Anchor ids of the two-valued domain in ascending id order.
std::vector<int> anchors_ascending(const LogicSignature& sig) {
  std::vector<int> out{sig.bool_false(), sig.bool_true()};
  std::sort(out.begin(), out.end());
  return out;
}

int bool_op(bool is_and, int a, int b) {
  return is_and ? (a & b) : (a | b);
}

ModalFormula fold_or(std::vector<ModalFormula> items) {
  if (items.empty()) return ModalFormula::bottom();
  ModalFormula acc = std::move(items.front());
  for (size_t i = 1; i < items.size(); ++i) {
    acc = ModalFormula::disj(std::move(acc), std::move(items[i]));
  }
  return acc;
}

struct Reducer {
  const LogicSignature& sig;
  std::vector<std::string>* trace;

  void log(const ModalFormula& before, const ModalFormula& after) const {
    if (trace) {
      trace->push_back(print(sig, before) + " ~> " + print(sig, after));
    }
  }

  Dnf canon(const ModalFormula& f) {
    switch (f.kind()) {
      case ModalFormula::Kind::Top:
        return Dnf::top();
      case ModalFormula::Kind::Bot:
        return Dnf::bottom();
      case ModalFormula::Kind::And:
        return dnf_and(canon(f.left()), canon(f.right()));
      case ModalFormula::Kind::Or:
        return dnf_or(canon(f.left()), canon(f.right()));
      case ModalFormula::Kind::Box:
        return canon_box(f.index(), f.inner_mv());
      case ModalFormula::Kind::BBox: {
        Dnf inner = canon(f.child());
        int bit = sig.bool_bit(f.index());
        if (inner.kind() == Dnf::Kind::Top) {
          Dnf out = bit == 1 ? Dnf::top() : Dnf::bottom();
          log(ModalFormula::bbox(f.index(), ModalFormula::top()), embed(out));
          return out;
        }
        if (inner.kind() == Dnf::Kind::Bottom) {
          Dnf out = bit == 0 ? Dnf::top() : Dnf::bottom();
          log(ModalFormula::bbox(f.index(), ModalFormula::bottom()),
              embed(out));
          return out;
        }
        return apply_bit(bit, embed(inner));
      }
    }
    return Dnf::bottom();
  }

  // [bit] pushed through an embedded normal form.
  Dnf apply_bit(int bit, const ModalFormula& g) {
    if (g.kind() == ModalFormula::Kind::And ||
        g.kind() == ModalFormula::Kind::Or) {
      bool is_and = g.kind() == ModalFormula::Kind::And;
      if (trace) {
        log(ModalFormula::bbox(sig.anchor_of_bit(bit), g),
            step_bool(bit, is_and, g.left(), g.right()));
      }
      Dnf acc = Dnf::bottom();
      for (int y : anchors_ascending(sig)) {
        for (int z : anchors_ascending(sig)) {
          if (bool_op(is_and, sig.bool_bit(y), sig.bool_bit(z)) != bit) {
            continue;
          }
          acc = dnf_or(acc, dnf_and(apply_bit(sig.bool_bit(y), g.left()),
                                    apply_bit(sig.bool_bit(z), g.right())));
        }
      }
      return acc;
    }
    ModalLiteral lit = *literal_of(g);
    if (bit == 1) {
      log(ModalFormula::bbox(sig.bool_true(), g), g);
      return Dnf::of_disjuncts({{lit}});
    }
    // A leading [false] toggles: cancel an existing one, else prepend.
    ModalLiteral out = lit;
    if (out.prefix.size() >= 2 && out.prefix.front() == sig.bool_false()) {
      out.prefix.erase(out.prefix.begin());
    } else {
      out.prefix.insert(out.prefix.begin(), sig.bool_false());
    }
    log(ModalFormula::bbox(sig.bool_false(), g), to_formula(out));
    return Dnf::of_disjuncts({{out}});
  }

  Dnf canon_box(int x, const MvFormula& phi) {
    switch (phi.kind()) {
      case MvFormula::Kind::Atom:
        return Dnf::of_disjuncts({{ModalLiteral{{x}, phi.atom_ref()}}});
      case MvFormula::Kind::Const: {
        Dnf out = x == phi.value() ? Dnf::top() : Dnf::bottom();
        log(ModalFormula::box(x, phi), embed(out));
        return out;
      }
      case MvFormula::Kind::App:
        break;
    }
    const Connective* c = sig.find_connective(phi.conn());
    if (!c) throw MvError("unknown connective '" + phi.conn() + "'");
    if (c->arity == 0) {
      int v = eval_connective(sig, phi.conn(), {});
      Dnf out = x == v ? Dnf::top() : Dnf::bottom();
      log(ModalFormula::box(x, phi), embed(out));
      return out;
    }
    if (trace) log(ModalFormula::box(x, phi), step_box(x, phi, *c));
    Dnf acc = Dnf::bottom();
    if (c->arity == 1) {
      for (int y = 0; y < sig.num_x(); ++y) {
        int args[] = {y};
        if (eval_connective(sig, phi.conn(), args) != x) continue;
        acc = dnf_or(acc, canon_box(y, phi.args()[0]));
      }
      return acc;
    }
    for (int y = 0; y < sig.num_x(); ++y) {
      for (int z = 0; z < sig.num_x(); ++z) {
        int args[] = {y, z};
        if (eval_connective(sig, phi.conn(), args) != x) continue;
        acc = dnf_or(acc, dnf_and(canon_box(y, phi.args()[0]),
                                  canon_box(z, phi.args()[1])));
      }
    }
    return acc;
  }

  // One-step expansion of [x](conn(...)), for traces and for reduce_step.
  ModalFormula step_box(int x, const MvFormula& phi, const Connective& c) {
    std::vector<ModalFormula> parts;
    if (c.arity == 1) {
      for (int y = 0; y < sig.num_x(); ++y) {
        int args[] = {y};
        if (eval_connective(sig, phi.conn(), args) != x) continue;
        parts.push_back(ModalFormula::box(y, phi.args()[0]));
      }
    } else {
      for (int y = 0; y < sig.num_x(); ++y) {
        for (int z = 0; z < sig.num_x(); ++z) {
          int args[] = {y, z};
          if (eval_connective(sig, phi.conn(), args) != x) continue;
          parts.push_back(
              ModalFormula::conj(ModalFormula::box(y, phi.args()[0]),
                                 ModalFormula::box(z, phi.args()[1])));
        }
      }
    }
    return fold_or(std::move(parts));
  }

  // One-step expansion of [bit](l op r) over modal operands.
  ModalFormula step_bool(int bit, bool is_and, const ModalFormula& l,
                         const ModalFormula& r) {
    std::vector<ModalFormula> parts;
    for (int y : anchors_ascending(sig)) {
      for (int z : anchors_ascending(sig)) {
        if (bool_op(is_and, sig.bool_bit(y), sig.bool_bit(z)) != bit) continue;
        parts.push_back(ModalFormula::conj(ModalFormula::bbox(y, l),
                                           ModalFormula::bbox(z, r)));
      }
    }
    return fold_or(std::move(parts));
  }
};

}  // namespace

ModalFormula reduce_step(const LogicSignature& sig, const ModalFormula& f) {
  Reducer red{sig, nullptr};
  switch (f.kind()) {
    case ModalFormula::Kind::Box: {
      const MvFormula& phi = f.inner_mv();
      switch (phi.kind()) {
        case MvFormula::Kind::Atom:
          throw MvError("already literal: cannot reduce " + print(sig, f));
        case MvFormula::Kind::Const:
          return f.index() == phi.value() ? ModalFormula::top()
                                          : ModalFormula::bottom();
        case MvFormula::Kind::App: {
          const Connective* c = sig.find_connective(phi.conn());
          if (!c) throw MvError("unknown connective '" + phi.conn() + "'");
          if (c->arity == 0) {
            return f.index() == eval_connective(sig, phi.conn(), {})
                       ? ModalFormula::top()
                       : ModalFormula::bottom();
          }
          return red.step_box(f.index(), phi, *c);
        }
      }
      break;
    }
    case ModalFormula::Kind::BBox: {
      const ModalFormula& inner = f.child();
      int bit = sig.bool_bit(f.index());
      switch (inner.kind()) {
        case ModalFormula::Kind::Top:
          return bit == 1 ? ModalFormula::top() : ModalFormula::bottom();
        case ModalFormula::Kind::Bot:
          return bit == 0 ? ModalFormula::top() : ModalFormula::bottom();
        case ModalFormula::Kind::And:
        case ModalFormula::Kind::Or:
          return red.step_bool(bit, inner.kind() == ModalFormula::Kind::And,
                               inner.left(), inner.right());
        case ModalFormula::Kind::Box:
        case ModalFormula::Kind::BBox:
          if (literal_of(f)) {
            throw MvError("already literal: cannot reduce " + print(sig, f));
          }
          throw MvError("not reducible: boolean operator over a nested " +
                        std::string("operator in ") + print(sig, f));
      }
      break;
    }
    default:
      break;
  }
  throw MvError("not reducible: root of " + print(sig, f) +
                " is not an operator application");
}

Dnf canonical(const LogicSignature& sig, const ModalFormula& f,
              std::vector<std::string>* trace) {
  Reducer red{sig, trace};
  return red.canon(f);
}

bool dnf_shape_ok(const LogicSignature& sig, const Dnf& d) {
  if (d.kind() != Dnf::Kind::Disjunction) return d.disjuncts().empty();
  if (d.disjuncts().empty()) return false;
  for (const auto& conj : d.disjuncts()) {
    if (conj.empty()) return false;
    for (size_t i = 0; i < conj.size(); ++i) {
      const ModalLiteral& lit = conj[i];
      if (lit.prefix.empty() || lit.prefix.size() > 2) return false;
      if (!sig.is_x(lit.prefix.back())) return false;
      for (size_t k = 0; k + 1 < lit.prefix.size(); ++k) {
        if (lit.prefix[k] != sig.bool_false()) return false;
      }
      if (lit.atom.predicate.empty()) return false;
      if (i > 0 && !(conj[i - 1] < lit)) return false;
    }
  }
  for (size_t i = 1; i < d.disjuncts().size(); ++i) {
    if (!(d.disjuncts()[i - 1] < d.disjuncts()[i])) return false;
  }
  return true;
}

}  // namespace mvseq
