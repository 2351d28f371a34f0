#include "mvseq/semantics.hpp"

#include <algorithm>
#include <set>

namespace mvseq {

int eval_mv(const LogicSignature& sig, const Valuation& v,
            const MvFormula& f) {
  switch (f.kind()) {
    case MvFormula::Kind::Atom:
      return v.value_of(f.atom_ref());
    case MvFormula::Kind::Const:
      return f.value();
    case MvFormula::Kind::App:
      break;
  }
  std::vector<int> args;
  args.reserve(f.args().size());
  for (const MvFormula& sub : f.args()) {
    args.push_back(eval_mv(sig, v, sub));
  }
  return eval_connective(sig, f.conn(), args);
}

int eval_modal(const LogicSignature& sig, const Valuation& v,
               const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
      return 1;
    case ModalFormula::Kind::Bot:
      return 0;
    case ModalFormula::Kind::Box:
      return eval_mv(sig, v, f.inner_mv()) == f.index() ? 1 : 0;
    case ModalFormula::Kind::BBox:
      return eval_modal(sig, v, f.child()) == sig.bool_bit(f.index()) ? 1 : 0;
    case ModalFormula::Kind::And:
      return std::min(eval_modal(sig, v, f.left()),
                      eval_modal(sig, v, f.right()));
    case ModalFormula::Kind::Or:
      return std::max(eval_modal(sig, v, f.left()),
                      eval_modal(sig, v, f.right()));
  }
  throw MvError("corrupt modal formula");
}

ModalValuation lift(const Valuation& v) { return ModalValuation(v); }

Valuation invert(const LogicSignature& sig, const ModalValuation& alpha) {
  std::map<Atom, int> out;
  for (const Atom& a : alpha.underlying().universe()) {
    std::optional<int> found;
    for (int x = 0; x < sig.num_x(); ++x) {
      if (alpha(sig, ModalFormula::box(x, MvFormula::atom(a))) == 1) {
        found = x;
        break;
      }
    }
    if (!found) throw MvError("no value probes true for atom " + to_string(a));
    out.emplace(a, *found);
  }
  return Valuation(std::move(out));
}

int satisfies_sequent(const LogicSignature& sig, const Valuation& v,
                      const Sequent& s) {
  return eval_modal(sig, v, s.lhs) <= eval_modal(sig, v, s.rhs) ? 1 : 0;
}

bool satisfies_all(const LogicSignature& sig, const Valuation& v,
                   const TheoryGamma& gamma) {
  for (const Sequent& s : gamma) {
    if (satisfies_sequent(sig, v, s) != 1) return false;
  }
  return true;
}

void for_each_valuation(const LogicSignature& sig,
                        const std::vector<Atom>& universe,
                        const std::function<bool(const Valuation&)>& fn) {
  std::vector<Atom> atoms = universe;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  const size_t n = atoms.size();
  std::vector<int> digits(n, 0);
  for (;;) {
    std::map<Atom, int> m;
    for (size_t i = 0; i < n; ++i) m.emplace(atoms[i], digits[i]);
    if (!fn(Valuation(std::move(m)))) return;
    // Odometer over value ids, last atom fastest.
    size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < sig.num_x()) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<Valuation> enumerate_models(const LogicSignature& sig,
                                        const TheoryGamma& gamma,
                                        const std::vector<Atom>& universe) {
  std::vector<Valuation> out;
  for_each_valuation(sig, universe, [&](const Valuation& v) {
    if (satisfies_all(sig, v, gamma)) out.push_back(v);
    return true;
  });
  return out;
}

EntailResult entails_m(const LogicSignature& sig, const TheoryGamma& gamma,
                       const Sequent& s, const std::vector<Atom>& universe) {
  EntailResult res;
  res.entailed = true;
  for_each_valuation(sig, universe, [&](const Valuation& v) {
    if (!satisfies_all(sig, v, gamma)) return true;
    ++res.models_checked;
    if (satisfies_sequent(sig, v, s) != 1) {
      res.entailed = false;
      res.countermodel = v;
      return false;
    }
    return true;
  });
  res.vacuous = res.models_checked == 0 && res.entailed;
  return res;
}

InvarianceResult truth_invariant(const LogicSignature& sig,
                                 const TheoryGamma& gamma,
                                 const MvFormula& phi,
                                 const std::vector<Atom>& universe) {
  InvarianceResult res;
  res.invariant = true;
  std::optional<std::pair<Valuation, int>> first;
  for_each_valuation(sig, universe, [&](const Valuation& v) {
    if (!satisfies_all(sig, v, gamma)) return true;
    ++res.models_checked;
    int value = eval_mv(sig, v, phi);
    if (!first) {
      first = {v, value};
      return true;
    }
    if (value != first->second) {
      res.invariant = false;
      res.witnesses = {*first, {v, value}};
      return false;
    }
    return true;
  });
  if (res.models_checked == 0) {
    res.vacuous = true;
  } else if (res.invariant) {
    res.value = first->second;
  }
  return res;
}

MatrixResult matrix_entails(const LogicSignature& sig,
                            const std::vector<MvFormula>& premises,
                            const MvFormula& phi,
                            const std::vector<int>& designated,
                            const std::vector<Atom>& universe) {
  if (designated.empty()) throw MvError("designated set must be nonempty");
  for (int d : designated) {
    if (!sig.is_x(d)) throw MvError("designated value outside the domain");
  }
  auto is_designated = [&](int x) {
    return std::find(designated.begin(), designated.end(), x) !=
           designated.end();
  };
  MatrixResult res;
  res.entailed = true;
  for_each_valuation(sig, universe, [&](const Valuation& v) {
    for (const MvFormula& psi : premises) {
      if (!is_designated(eval_mv(sig, v, psi))) return true;
    }
    if (!is_designated(eval_mv(sig, v, phi))) {
      res.entailed = false;
      res.countermodel = v;
      return false;
    }
    return true;
  });
  return res;
}

std::vector<Atom> query_universe(const TheoryGamma& gamma, const Sequent& s) {
  std::set<Atom> atoms = atoms_of(s);
  for (const Sequent& g : gamma) {
    collect_atoms(g.lhs, atoms);
    collect_atoms(g.rhs, atoms);
  }
  return {atoms.begin(), atoms.end()};
}

}  // namespace mvseq
