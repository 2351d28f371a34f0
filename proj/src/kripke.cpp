#include "mvseq/kripke.hpp"

namespace mvseq {

KripkeModel::KripkeModel(int num_worlds,
                         std::map<Atom, std::vector<char>> interp)
    : num_worlds_(num_worlds), interp_(std::move(interp)) {
  for (auto& [atom, bits] : interp_) {
    if (static_cast<int>(bits.size()) != num_worlds_) {
      throw MvError("interpretation row for " + to_string(atom) +
                    " does not cover every world");
    }
  }
}

bool KripkeModel::bit(int world, const Atom& a) const {
  if (world < 0 || world >= num_worlds_) throw MvError("unknown world");
  auto it = interp_.find(a);
  if (it == interp_.end()) {
    throw MvError("atom " + to_string(a) + " not interpreted");
  }
  return it->second[world] != 0;
}

KripkeModel build_model(const LogicSignature& sig, const Valuation& v) {
  std::map<Atom, std::vector<char>> interp;
  for (const auto& [atom, value] : v.assignment()) {
    std::vector<char> bits(sig.num_y(), 0);
    bits[value] = 1;
    interp.emplace(atom, std::move(bits));
  }
  return KripkeModel(sig.num_y(), std::move(interp));
}

Valuation extract_valuation(const LogicSignature& sig, const KripkeModel& m) {
  std::map<Atom, int> out;
  for (const auto& [atom, bits] : m.interp()) {
    int found = -1;
    int count = 0;
    for (int w = 0; w < m.num_worlds(); ++w) {
      if (bits[w]) {
        found = w;
        ++count;
      }
    }
    if (count != 1) {
      throw MvError("non-unique world for atom " + to_string(atom));
    }
    if (!sig.is_x(found)) {
      throw MvError("world outside the many-valued domain for atom " +
                    to_string(atom));
    }
    out.emplace(atom, found);
  }
  return Valuation(std::move(out));
}

namespace {

int sat_impl(const LogicSignature& sig, const Valuation& extracted, int world,
             const MvFormula& f) {
  return eval_mv(sig, extracted, f) == world ? 1 : 0;
}

int sat_impl(const LogicSignature& sig, const Valuation& extracted, int world,
             const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
      return 1;
    case ModalFormula::Kind::Bot:
      return 0;
    case ModalFormula::Kind::Box:
      // The successors of any world under R_x are exactly {x}.
      return sat_impl(sig, extracted, f.index(), f.inner_mv());
    case ModalFormula::Kind::BBox:
      return sat_impl(sig, extracted, f.index(), f.child());
    case ModalFormula::Kind::And:
      return std::min(sat_impl(sig, extracted, world, f.left()),
                      sat_impl(sig, extracted, world, f.right()));
    case ModalFormula::Kind::Or:
      return std::max(sat_impl(sig, extracted, world, f.left()),
                      sat_impl(sig, extracted, world, f.right()));
  }
  throw MvError("corrupt modal formula");
}

void require_world(const KripkeModel& m, int world) {
  if (world < 0 || world >= m.num_worlds()) throw MvError("unknown world");
}

}  // namespace

int sat(const LogicSignature& sig, const KripkeModel& m, int world,
        const MvFormula& f) {
  require_world(m, world);
  return sat_impl(sig, extract_valuation(sig, m), world, f);
}

int sat(const LogicSignature& sig, const KripkeModel& m, int world,
        const ModalFormula& f) {
  require_world(m, world);
  return sat_impl(sig, extract_valuation(sig, m), world, f);
}

std::set<int> extension(const LogicSignature& sig, const KripkeModel& m,
                        const ModalFormula& f) {
  Valuation extracted = extract_valuation(sig, m);
  std::set<int> out;
  for (int w = 0; w < m.num_worlds(); ++w) {
    if (sat_impl(sig, extracted, w, f)) out.insert(w);
  }
  return out;
}

bool check_two_valued(const LogicSignature& sig, const KripkeModel& m,
                      const ModalFormula& f) {
  std::set<int> ext = extension(sig, m, f);
  return ext.empty() || static_cast<int>(ext.size()) == m.num_worlds();
}

bool correspondence_check(const LogicSignature& sig, const Valuation& v,
                          const MvFormula& phi, int x) {
  ModalFormula boxed = ModalFormula::box(x, phi);
  bool algebraic = eval_mv(sig, v, phi) == x;
  bool lifted = eval_modal(sig, v, boxed) == 1;
  KripkeModel m = build_model(sig, v);
  bool full =
      static_cast<int>(extension(sig, m, boxed).size()) == m.num_worlds();
  return algebraic == lifted && lifted == full;
}

}  // namespace mvseq
