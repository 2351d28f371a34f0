#include "mvseq/calculus.hpp"

#include <algorithm>
#include <functional>

#include "mvseq/reduction.hpp"

namespace mvseq {

bool is_structural(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::Reflexive:
    case AxiomTag::Top:
    case AxiomTag::Bottom:
    case AxiomTag::MeetProjL:
    case AxiomTag::MeetProjR:
    case AxiomTag::JoinInjL:
    case AxiomTag::JoinInjR:
    case AxiomTag::Distrib:
      return true;
    default:
      return false;
  }
}

std::string to_string(const LogicSignature& sig, const AxiomId& id) {
  auto mv_suffix = [&](const char* head) {
    return std::string(head) + "(" + id.conn + "," +
           sig.value_symbol(id.value) + ")";
  };
  switch (id.tag) {
    case AxiomTag::Reflexive:
      return "reflexive";
    case AxiomTag::Top:
      return "top";
    case AxiomTag::Bottom:
      return "bottom";
    case AxiomTag::MeetProjL:
      return "meet-proj-l";
    case AxiomTag::MeetProjR:
      return "meet-proj-r";
    case AxiomTag::JoinInjL:
      return "join-inj-l";
    case AxiomTag::JoinInjR:
      return "join-inj-r";
    case AxiomTag::Distrib:
      return "distrib";
    case AxiomTag::IntroBool:
      return mv_suffix("intro-bool");
    case AxiomTag::IntroUnary:
    case AxiomTag::IntroBinary:
      return mv_suffix("intro");
    case AxiomTag::IntroConst:
      return "intro-const";
    case AxiomTag::ElimBool:
      return mv_suffix("elim-bool");
    case AxiomTag::ElimUnary:
    case AxiomTag::ElimBinary:
      return mv_suffix("elim");
    case AxiomTag::ElimConst:
      return "elim-const";
  }
  return "?";
}

std::optional<RuleKind> rule_kind_of(const std::string& name) {
  if (name == "cut") return RuleKind::Cut;
  if (name == "lower") return RuleKind::LowerBound;
  if (name == "upper") return RuleKind::UpperBound;
  if (name == "subst") return RuleKind::Subst;
  return std::nullopt;
}

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Cut:
      return "cut";
    case RuleKind::LowerBound:
      return "lower";
    case RuleKind::UpperBound:
      return "upper";
    case RuleKind::Subst:
      return "subst";
  }
  return "?";
}

namespace {

ModalFormula fold_or(std::vector<ModalFormula> parts) {
  if (parts.empty()) return ModalFormula::bottom();
  ModalFormula acc = std::move(parts.front());
  for (size_t i = 1; i < parts.size(); ++i) {
    acc = ModalFormula::disj(std::move(acc), std::move(parts[i]));
  }
  return acc;
}

ModalFormula fold_same(ModalFormula::Kind kind,
                       const std::vector<ModalFormula>& parts) {
  ModalFormula acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) {
    acc = kind == ModalFormula::Kind::And ? ModalFormula::conj(acc, parts[i])
                                          : ModalFormula::disj(acc, parts[i]);
  }
  return acc;
}

// Maximal same-kind nesting flattened into a part list (left to right).
void flat_into(const ModalFormula& f, ModalFormula::Kind kind,
               std::vector<ModalFormula>& out) {
  if (f.kind() == kind) {
    flat_into(f.left(), kind, out);
    flat_into(f.right(), kind, out);
  } else {
    out.push_back(f);
  }
}

std::vector<ModalFormula> flat(const ModalFormula& f, ModalFormula::Kind kind) {
  std::vector<ModalFormula> out;
  flat_into(f, kind, out);
  return out;
}

bool formula_less(const ModalFormula& a, const ModalFormula& b) {
  return compare(a, b) < 0;
}

bool multiset_includes(const std::vector<ModalFormula>& big,
                       const std::vector<ModalFormula>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                       formula_less);
}

std::vector<int> anchors_ascending(const LogicSignature& sig) {
  std::vector<int> out{sig.bool_false(), sig.bool_true()};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ModalFormula acnorm(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bot:
    case ModalFormula::Kind::Box:
      return f;
    case ModalFormula::Kind::BBox:
      return ModalFormula::bbox(f.index(), acnorm(f.child()));
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Or: {
      std::vector<ModalFormula> parts;
      flat_into(acnorm(f.left()), f.kind(), parts);
      flat_into(acnorm(f.right()), f.kind(), parts);
      std::sort(parts.begin(), parts.end(), formula_less);
      return fold_same(f.kind(), parts);
    }
  }
  return f;
}

std::optional<int> rigid_bit(const LogicSignature& sig,
                             const ModalFormula& f) {
  if (f.kind() == ModalFormula::Kind::Box) {
    if (!atom_free(f.inner_mv())) return std::nullopt;
    return eval_mv(sig, Valuation{}, f.inner_mv()) == f.index() ? 1 : 0;
  }
  if (f.kind() == ModalFormula::Kind::BBox) {
    auto inner = rigid_bit(sig, f.child());
    if (!inner) return std::nullopt;
    return sig.bool_bit(f.index()) == *inner ? 1 : 0;
  }
  return std::nullopt;
}

Sequent generate_axiom(const LogicSignature& sig, const AxiomId& id,
                       const Placeholders& ph) {
  auto need_modal = [&](const std::optional<ModalFormula>& slot,
                        const char* name) -> const ModalFormula& {
    if (!slot) {
      throw MvError(std::string("schema needs modal placeholder ") + name);
    }
    return *slot;
  };
  auto need_mv = [&](const std::optional<MvFormula>& slot,
                     const char* name) -> const MvFormula& {
    if (!slot) throw MvError(std::string("schema needs placeholder ") + name);
    return *slot;
  };

  switch (id.tag) {
    case AxiomTag::Reflexive: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      return {p, p};
    }
    case AxiomTag::Top:
      return {need_modal(ph.Phi, "Phi"), ModalFormula::top()};
    case AxiomTag::Bottom:
      return {ModalFormula::bottom(), need_modal(ph.Phi, "Phi")};
    case AxiomTag::MeetProjL:
    case AxiomTag::MeetProjR: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      const ModalFormula& q = need_modal(ph.Psi, "Psi");
      return {ModalFormula::conj(p, q),
              id.tag == AxiomTag::MeetProjL ? p : q};
    }
    case AxiomTag::JoinInjL:
    case AxiomTag::JoinInjR: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      const ModalFormula& q = need_modal(ph.Psi, "Psi");
      return {id.tag == AxiomTag::JoinInjL ? p : q, ModalFormula::disj(p, q)};
    }
    case AxiomTag::Distrib: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      const ModalFormula& q = need_modal(ph.Psi, "Psi");
      const ModalFormula& u = need_modal(ph.Ups, "Ups");
      return {ModalFormula::conj(p, ModalFormula::disj(q, u)),
              ModalFormula::disj(ModalFormula::conj(p, q),
                                 ModalFormula::conj(p, u))};
    }
    case AxiomTag::IntroBool:
    case AxiomTag::ElimBool: {
      if (id.conn != "&" && id.conn != "|") {
        throw MvError("boolean schema connective must be & or |");
      }
      if (!sig.is_bool_anchor(id.value)) {
        throw MvError("boolean schema target must be a boolean anchor");
      }
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      const ModalFormula& q = need_modal(ph.Psi, "Psi");
      bool is_and = id.conn == "&";
      int bit = sig.bool_bit(id.value);
      std::vector<ModalFormula> parts;
      for (int y : anchors_ascending(sig)) {
        for (int z : anchors_ascending(sig)) {
          int yz = is_and ? (sig.bool_bit(y) & sig.bool_bit(z))
                          : (sig.bool_bit(y) | sig.bool_bit(z));
          if (yz != bit) continue;
          parts.push_back(ModalFormula::conj(ModalFormula::bbox(y, p),
                                             ModalFormula::bbox(z, q)));
        }
      }
      ModalFormula dis = fold_or(std::move(parts));
      ModalFormula boxed = ModalFormula::bbox(
          id.value, is_and ? ModalFormula::conj(p, q) : ModalFormula::disj(p, q));
      if (id.tag == AxiomTag::IntroBool) return {dis, boxed};
      return {boxed, dis};
    }
    case AxiomTag::IntroUnary:
    case AxiomTag::ElimUnary: {
      const Connective* c = sig.find_connective(id.conn);
      if (!c || c->arity != 1) throw MvError("schema needs a unary connective");
      if (!sig.is_x(id.value)) throw MvError("schema target must lie in X");
      const MvFormula& a = need_mv(ph.phi, "phi");
      std::vector<ModalFormula> parts;
      for (int y = 0; y < sig.num_x(); ++y) {
        int args[] = {y};
        if (eval_connective(sig, id.conn, args) != id.value) continue;
        parts.push_back(ModalFormula::box(y, a));
      }
      ModalFormula dis = fold_or(std::move(parts));
      ModalFormula boxed =
          ModalFormula::box(id.value, MvFormula::app(id.conn, {a}));
      if (id.tag == AxiomTag::IntroUnary) return {dis, boxed};
      return {boxed, dis};
    }
    case AxiomTag::IntroBinary:
    case AxiomTag::ElimBinary: {
      const Connective* c = sig.find_connective(id.conn);
      if (!c || c->arity != 2) {
        throw MvError("schema needs a binary connective");
      }
      if (!sig.is_x(id.value)) throw MvError("schema target must lie in X");
      const MvFormula& a = need_mv(ph.phi, "phi");
      const MvFormula& b = need_mv(ph.psi, "psi");
      std::vector<ModalFormula> parts;
      for (int y = 0; y < sig.num_x(); ++y) {
        for (int z = 0; z < sig.num_x(); ++z) {
          int args[] = {y, z};
          if (eval_connective(sig, id.conn, args) != id.value) continue;
          parts.push_back(ModalFormula::conj(ModalFormula::box(y, a),
                                             ModalFormula::box(z, b)));
        }
      }
      ModalFormula dis = fold_or(std::move(parts));
      ModalFormula boxed =
          ModalFormula::box(id.value, MvFormula::app(id.conn, {a, b}));
      if (id.tag == AxiomTag::IntroBinary) return {dis, boxed};
      return {boxed, dis};
    }
    case AxiomTag::IntroConst: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      auto bit = rigid_bit(sig, p);
      if (!bit || *bit != 1) {
        throw MvError("constant intro needs a rigid literal of constant bit 1");
      }
      return {ModalFormula::top(), p};
    }
    case AxiomTag::ElimConst: {
      const ModalFormula& p = need_modal(ph.Phi, "Phi");
      auto bit = rigid_bit(sig, p);
      if (!bit || *bit != 0) {
        throw MvError("constant elim needs a rigid literal of constant bit 0");
      }
      return {p, ModalFormula::bottom()};
    }
  }
  throw MvError("unknown axiom tag");
}

namespace {

std::optional<AxiomId> match_distrib(const ModalFormula& lhs_n,
                                     const ModalFormula& rhs_n) {
  if (lhs_n.kind() != ModalFormula::Kind::And) return std::nullopt;
  std::vector<ModalFormula> conj = flat(lhs_n, ModalFormula::Kind::And);
  for (size_t pick = 0; pick < conj.size(); ++pick) {
    if (conj[pick].kind() != ModalFormula::Kind::Or) continue;
    std::vector<ModalFormula> rest;
    for (size_t i = 0; i < conj.size(); ++i) {
      if (i != pick) rest.push_back(conj[i]);
    }
    if (rest.empty()) continue;
    ModalFormula head = fold_same(ModalFormula::Kind::And, rest);
    std::vector<ModalFormula> parts =
        flat(conj[pick], ModalFormula::Kind::Or);
    if (parts.size() > 12) continue;
    unsigned n = static_cast<unsigned>(parts.size());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<ModalFormula> a, b;
      for (unsigned i = 0; i < n; ++i) {
        ((mask >> i) & 1u ? a : b).push_back(parts[i]);
      }
      ModalFormula left = fold_same(ModalFormula::Kind::Or, a);
      ModalFormula right = fold_same(ModalFormula::Kind::Or, b);
      ModalFormula expect = ModalFormula::disj(ModalFormula::conj(head, left),
                                               ModalFormula::conj(head, right));
      if (acnorm(expect) == rhs_n) {
        return AxiomId{AxiomTag::Distrib, "", -1};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomId> is_axiom(const LogicSignature& sig, const Sequent& s) {
  using K = ModalFormula::Kind;
  ModalFormula lhs_n = acnorm(s.lhs);
  ModalFormula rhs_n = acnorm(s.rhs);

  if (lhs_n == rhs_n) return AxiomId{AxiomTag::Reflexive, "", -1};
  if (s.rhs.kind() == K::Top) return AxiomId{AxiomTag::Top, "", -1};
  if (s.lhs.kind() == K::Bot) return AxiomId{AxiomTag::Bottom, "", -1};

  if (lhs_n.kind() == K::And &&
      multiset_includes(flat(lhs_n, K::And), flat(rhs_n, K::And))) {
    return AxiomId{AxiomTag::MeetProjL, "", -1};
  }
  if (rhs_n.kind() == K::Or &&
      multiset_includes(flat(rhs_n, K::Or), flat(lhs_n, K::Or))) {
    return AxiomId{AxiomTag::JoinInjL, "", -1};
  }
  if (auto d = match_distrib(lhs_n, rhs_n)) return d;

  // Table-driven families: rebuild the expected opposite side and compare.
  if (s.rhs.kind() == K::BBox &&
      (s.rhs.child().kind() == K::And || s.rhs.child().kind() == K::Or)) {
    AxiomId id{AxiomTag::IntroBool,
               s.rhs.child().kind() == K::And ? "&" : "|", s.rhs.index()};
    Placeholders ph;
    ph.Phi = s.rhs.child().left();
    ph.Psi = s.rhs.child().right();
    if (acnorm(generate_axiom(sig, id, ph).lhs) == lhs_n) return id;
  }
  if (s.rhs.kind() == K::Box &&
      s.rhs.inner_mv().kind() == MvFormula::Kind::App) {
    const MvFormula& app = s.rhs.inner_mv();
    const Connective* c = sig.find_connective(app.conn());
    if (c && (c->arity == 1 || c->arity == 2)) {
      AxiomId id{c->arity == 1 ? AxiomTag::IntroUnary : AxiomTag::IntroBinary,
                 app.conn(), s.rhs.index()};
      Placeholders ph;
      ph.phi = app.args()[0];
      if (c->arity == 2) ph.psi = app.args()[1];
      if (acnorm(generate_axiom(sig, id, ph).lhs) == lhs_n) return id;
    }
  }
  if (s.lhs.kind() == K::Top && rigid_bit(sig, s.rhs) == 1) {
    return AxiomId{AxiomTag::IntroConst, "", -1};
  }
  if (s.lhs.kind() == K::BBox &&
      (s.lhs.child().kind() == K::And || s.lhs.child().kind() == K::Or)) {
    AxiomId id{AxiomTag::ElimBool,
               s.lhs.child().kind() == K::And ? "&" : "|", s.lhs.index()};
    Placeholders ph;
    ph.Phi = s.lhs.child().left();
    ph.Psi = s.lhs.child().right();
    if (acnorm(generate_axiom(sig, id, ph).rhs) == rhs_n) return id;
  }
  if (s.lhs.kind() == K::Box &&
      s.lhs.inner_mv().kind() == MvFormula::Kind::App) {
    const MvFormula& app = s.lhs.inner_mv();
    const Connective* c = sig.find_connective(app.conn());
    if (c && (c->arity == 1 || c->arity == 2)) {
      AxiomId id{c->arity == 1 ? AxiomTag::ElimUnary : AxiomTag::ElimBinary,
                 app.conn(), s.lhs.index()};
      Placeholders ph;
      ph.phi = app.args()[0];
      if (c->arity == 2) ph.psi = app.args()[1];
      if (acnorm(generate_axiom(sig, id, ph).rhs) == rhs_n) return id;
    }
  }
  if (s.rhs.kind() == K::Bot && rigid_bit(sig, s.lhs) == 0) {
    return AxiomId{AxiomTag::ElimConst, "", -1};
  }
  return std::nullopt;
}

MvFormula apply(const Substitution& sigma, const MvFormula& f) {
  switch (f.kind()) {
    case MvFormula::Kind::Atom: {
      auto it = sigma.mv.find(f.atom_ref());
      return it != sigma.mv.end() ? it->second : f;
    }
    case MvFormula::Kind::Const:
      return f;
    case MvFormula::Kind::App: {
      std::vector<MvFormula> args;
      args.reserve(f.args().size());
      for (const MvFormula& a : f.args()) args.push_back(apply(sigma, a));
      return MvFormula::app(f.conn(), std::move(args));
    }
  }
  return f;
}

ModalFormula apply(const Substitution& sigma, const ModalFormula& f) {
  if (auto lit = literal_of(f)) {
    for (const auto& [key, image] : sigma.modal) {
      if (key == *lit) return image;
    }
  }
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bot:
      return f;
    case ModalFormula::Kind::Box:
      return ModalFormula::box(f.index(), apply(sigma, f.inner_mv()));
    case ModalFormula::Kind::BBox:
      return ModalFormula::bbox(f.index(), apply(sigma, f.child()));
    case ModalFormula::Kind::And:
      return ModalFormula::conj(apply(sigma, f.left()),
                                apply(sigma, f.right()));
    case ModalFormula::Kind::Or:
      return ModalFormula::disj(apply(sigma, f.left()),
                                apply(sigma, f.right()));
  }
  return f;
}

Sequent apply(const Substitution& sigma, const Sequent& s) {
  return {apply(sigma, s.lhs), apply(sigma, s.rhs)};
}

ProofPtr make_axiom(const LogicSignature& sig, Sequent s) {
  auto id = is_axiom(sig, s);
  if (!id) throw MvError("not an axiom instance: " + print(sig, s));
  auto node = std::make_shared<ProofNode>();
  node->conclusion = std::move(s);
  node->just = AxiomJust{to_string(sig, *id)};
  return node;
}

ProofPtr make_hyp(int index, Sequent s) {
  auto node = std::make_shared<ProofNode>();
  node->conclusion = std::move(s);
  node->just = HypJust{index};
  return node;
}

ProofPtr make_rule(RuleKind kind, Sequent conclusion,
                   std::vector<ProofPtr> premises, Substitution sigma) {
  auto node = std::make_shared<ProofNode>();
  node->conclusion = std::move(conclusion);
  node->just = RuleJust{kind, std::move(sigma)};
  node->premises = std::move(premises);
  return node;
}

namespace {

bool subtree_has_hyp(const ProofNode& n) {
  if (std::holds_alternative<HypJust>(n.just)) return true;
  for (const ProofPtr& p : n.premises) {
    if (p && subtree_has_hyp(*p)) return true;
  }
  return false;
}

bool axiom_leaves_structural(const LogicSignature& sig, const ProofNode& n) {
  if (std::holds_alternative<AxiomJust>(n.just)) {
    auto id = is_axiom(sig, n.conclusion);
    return id && is_structural(id->tag);
  }
  for (const ProofPtr& p : n.premises) {
    if (p && !axiom_leaves_structural(sig, *p)) return false;
  }
  return true;
}

struct Checker {
  const LogicSignature& sig;
  const TheoryGamma& gamma;
  CheckVerdict verdict;
  std::vector<int> path;

  bool fail(const std::string& msg) {
    verdict.ok = false;
    verdict.message = msg;
    verdict.path = path;
    return false;
  }

  bool visit(const ProofNode& n) {
    for (size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!n.premises[i]) return fail("missing premise");
      if (!visit(*n.premises[i])) return false;
      path.pop_back();
    }
    if (const auto* ax = std::get_if<AxiomJust>(&n.just)) {
      (void)ax;
      if (!n.premises.empty()) return fail("axiom leaf carries premises");
      if (!is_axiom(sig, n.conclusion)) {
        return fail("not an axiom instance: " + print(sig, n.conclusion));
      }
      return true;
    }
    if (const auto* hy = std::get_if<HypJust>(&n.just)) {
      if (!n.premises.empty()) return fail("hypothesis leaf carries premises");
      if (hy->index < 0 || hy->index >= static_cast<int>(gamma.size())) {
        return fail("hypothesis index out of range");
      }
      if (!(gamma[hy->index] == n.conclusion)) {
        return fail("conclusion differs from cited hypothesis");
      }
      return true;
    }
    const auto& rule = std::get<RuleJust>(n.just);
    switch (rule.kind) {
      case RuleKind::Cut: {
        if (n.premises.size() != 2) return fail("cut needs two premises");
        const Sequent& a = n.premises[0]->conclusion;
        const Sequent& b = n.premises[1]->conclusion;
        if (!(a.rhs == b.lhs)) return fail("cut formulas do not meet");
        if (!(n.conclusion == Sequent{a.lhs, b.rhs})) {
          return fail("cut conclusion mismatch");
        }
        return true;
      }
      case RuleKind::LowerBound: {
        if (n.premises.size() != 2) return fail("lower needs two premises");
        const Sequent& a = n.premises[0]->conclusion;
        const Sequent& b = n.premises[1]->conclusion;
        if (!(a.lhs == b.lhs)) return fail("lower premises differ on the left");
        Sequent want{a.lhs, ModalFormula::conj(a.rhs, b.rhs)};
        if (!(n.conclusion == want)) return fail("lower conclusion mismatch");
        return true;
      }
      case RuleKind::UpperBound: {
        if (n.premises.size() != 2) return fail("upper needs two premises");
        const Sequent& a = n.premises[0]->conclusion;
        const Sequent& b = n.premises[1]->conclusion;
        if (!(a.rhs == b.rhs)) {
          return fail("upper premises differ on the right");
        }
        Sequent want{ModalFormula::disj(a.lhs, b.lhs), a.rhs};
        if (!(n.conclusion == want)) return fail("upper conclusion mismatch");
        return true;
      }
      case RuleKind::Subst: {
        if (n.premises.size() != 1) return fail("subst needs one premise");
        const ProofNode& prem = *n.premises[0];
        if (!(n.conclusion == apply(rule.sigma, prem.conclusion))) {
          return fail("substitution image mismatch");
        }
        if (subtree_has_hyp(prem)) {
          return fail("substitution over a hypothesis-dependent subproof");
        }
        if (!rule.sigma.modal.empty() &&
            !axiom_leaves_structural(sig, prem)) {
          return fail(
              "modal-letter substitution over table-driven axiom leaves");
        }
        return true;
      }
    }
    return fail("unknown rule");
  }
};

}  // namespace

CheckVerdict check_proof(const LogicSignature& sig, const TheoryGamma& gamma,
                         const Proof& p) {
  Checker ck{sig, gamma, CheckVerdict{}, {}};
  if (!p) {
    ck.fail("empty proof");
    return ck.verdict;
  }
  ck.visit(*p);
  return ck.verdict;
}

namespace {

void modal_subformulas(const LogicSignature& sig, const ModalFormula& f,
                       std::map<std::string, ModalFormula>& out) {
  out.emplace(print(sig, f), f);
  switch (f.kind()) {
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Or:
      modal_subformulas(sig, f.left(), out);
      modal_subformulas(sig, f.right(), out);
      break;
    case ModalFormula::Kind::BBox:
      modal_subformulas(sig, f.child(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::optional<Proof> prove_bounded(const LogicSignature& sig,
                                   const TheoryGamma& gamma, const Sequent& s,
                                   int depth) {
  if (depth < 0) return std::nullopt;

  std::map<std::string, ModalFormula> pool;
  pool.emplace("T", ModalFormula::top());
  pool.emplace("F", ModalFormula::bottom());
  auto feed = [&](const Sequent& q) {
    modal_subformulas(sig, q.lhs, pool);
    modal_subformulas(sig, q.rhs, pool);
  };
  feed(s);
  for (const Sequent& g : gamma) feed(g);
  std::vector<ModalFormula> collected;
  collected.reserve(pool.size());
  for (const auto& [key, f] : pool) collected.push_back(f);
  for (const ModalFormula& f : collected) {
    ModalFormula red = embed(canonical(sig, f));
    pool.emplace(print(sig, red), red);
  }

  std::vector<ModalFormula> cuts;
  for (const auto& [key, f] : pool) {
    cuts.push_back(f);
    if (cuts.size() == 64) break;
  }

  std::map<std::string, int> failed;
  std::function<ProofPtr(const Sequent&, int)> rec =
      [&](const Sequent& q, int d) -> ProofPtr {
    if (is_axiom(sig, q)) return make_axiom(sig, q);
    for (size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i] == q) return make_hyp(static_cast<int>(i), q);
    }
    if (d <= 0) return nullptr;
    std::string key = print(sig, q);
    if (auto it = failed.find(key); it != failed.end() && it->second >= d) {
      return nullptr;
    }
    if (q.rhs.kind() == ModalFormula::Kind::And) {
      ProofPtr a = rec({q.lhs, q.rhs.left()}, d - 1);
      if (a) {
        ProofPtr b = rec({q.lhs, q.rhs.right()}, d - 1);
        if (b) return make_rule(RuleKind::LowerBound, q, {a, b});
      }
    }
    if (q.lhs.kind() == ModalFormula::Kind::Or) {
      ProofPtr a = rec({q.lhs.left(), q.rhs}, d - 1);
      if (a) {
        ProofPtr b = rec({q.lhs.right(), q.rhs}, d - 1);
        if (b) return make_rule(RuleKind::UpperBound, q, {a, b});
      }
    }
    for (const ModalFormula& m : cuts) {
      if (m == q.lhs || m == q.rhs) continue;
      ProofPtr a = rec({q.lhs, m}, d - 1);
      if (!a) continue;
      ProofPtr b = rec({m, q.rhs}, d - 1);
      if (b) return make_rule(RuleKind::Cut, q, {a, b});
    }
    int& mark = failed[key];
    mark = std::max(mark, d);
    return nullptr;
  };

  ProofPtr found = rec(s, depth);
  if (!found) return std::nullopt;
  return found;
}

namespace {

// Interns the literal sequents a synthesized proof cites, in first-use order.
class TheoryBuilder {
 public:
  explicit TheoryBuilder(const LogicSignature& sig) : sig_(sig) {}

  ProofPtr hyp_for(const Sequent& s) {
    auto [it, fresh] =
        index_.emplace(print(sig_, s), static_cast<int>(theory_.size()));
    if (fresh) theory_.push_back(s);
    return make_hyp(it->second, s);
  }

  TheoryGamma take() { return std::move(theory_); }

 private:
  const LogicSignature& sig_;
  TheoryGamma theory_;
  std::map<std::string, int> index_;
};

struct Synthesizer {
  const LogicSignature& sig;
  const Valuation& v;
  TheoryBuilder& theory;

  int alpha(const ModalFormula& f) const { return eval_modal(sig, v, f); }

  [[noreturn]] void unsupported(const ModalFormula& f) const {
    throw MvError("unsupported fragment: no derivation rule covers " +
                  print(sig, f));
  }

  // Expansion axiom for a non-literal operator formula: the table-driven
  // sequent <disjunction> |- f (intro) used forward, or f |- <disjunction>
  // (elim) used backward.
  Sequent expansion(const ModalFormula& f, bool intro) const {
    if (f.kind() == ModalFormula::Kind::Box) {
      const MvFormula& mv = f.inner_mv();
      if (mv.kind() != MvFormula::Kind::App) unsupported(f);
      const Connective* c = sig.find_connective(mv.conn());
      if (!c || c->arity == 0) unsupported(f);
      AxiomId id{c->arity == 1
                     ? (intro ? AxiomTag::IntroUnary : AxiomTag::ElimUnary)
                     : (intro ? AxiomTag::IntroBinary : AxiomTag::ElimBinary),
                 mv.conn(), f.index()};
      Placeholders ph;
      ph.phi = mv.args()[0];
      if (c->arity == 2) ph.psi = mv.args()[1];
      return generate_axiom(sig, id, ph);
    }
    const ModalFormula& inner = f.child();
    if (inner.kind() != ModalFormula::Kind::And &&
        inner.kind() != ModalFormula::Kind::Or) {
      unsupported(f);
    }
    AxiomId id{intro ? AxiomTag::IntroBool : AxiomTag::ElimBool,
               inner.kind() == ModalFormula::Kind::And ? "&" : "|", f.index()};
    Placeholders ph;
    ph.Phi = inner.left();
    ph.Psi = inner.right();
    return generate_axiom(sig, id, ph);
  }

  // T |- f, for alpha(f) = 1.
  ProofPtr derive_true(const ModalFormula& f) {
    if (alpha(f) != 1) {
      throw MvError("internal: derive_true on a falsified formula");
    }
    switch (f.kind()) {
      case ModalFormula::Kind::Top:
        return make_axiom(sig, {ModalFormula::top(), ModalFormula::top()});
      case ModalFormula::Kind::Bot:
        break;
      case ModalFormula::Kind::And:
        return make_rule(RuleKind::LowerBound, {ModalFormula::top(), f},
                         {derive_true(f.left()), derive_true(f.right())});
      case ModalFormula::Kind::Or: {
        const ModalFormula& side =
            alpha(f.left()) == 1 ? f.left() : f.right();
        ProofPtr p = derive_true(side);
        ProofPtr inj = make_axiom(sig, {side, f});
        return make_rule(RuleKind::Cut, {ModalFormula::top(), f}, {p, inj});
      }
      case ModalFormula::Kind::Box:
      case ModalFormula::Kind::BBox: {
        if (literal_of(f)) {
          return theory.hyp_for({ModalFormula::top(), f});
        }
        if (rigid_bit(sig, f)) {
          return make_axiom(sig, {ModalFormula::top(), f});
        }
        Sequent ax = expansion(f, /*intro=*/true);
        ProofPtr dis = derive_true_disjunction(ax.lhs);
        return make_rule(RuleKind::Cut, {ModalFormula::top(), f},
                         {dis, make_axiom(sig, ax)});
      }
    }
    unsupported(f);
  }

  // f |- F, for alpha(f) = 0.
  ProofPtr derive_false(const ModalFormula& f) {
    if (alpha(f) != 0) {
      throw MvError("internal: derive_false on a satisfied formula");
    }
    switch (f.kind()) {
      case ModalFormula::Kind::Bot:
        return make_axiom(sig,
                          {ModalFormula::bottom(), ModalFormula::bottom()});
      case ModalFormula::Kind::Top:
        break;
      case ModalFormula::Kind::Or:
        return make_rule(RuleKind::UpperBound, {f, ModalFormula::bottom()},
                         {derive_false(f.left()), derive_false(f.right())});
      case ModalFormula::Kind::And: {
        const ModalFormula& side =
            alpha(f.left()) == 0 ? f.left() : f.right();
        ProofPtr proj = make_axiom(sig, {f, side});
        return make_rule(RuleKind::Cut, {f, ModalFormula::bottom()},
                         {proj, derive_false(side)});
      }
      case ModalFormula::Kind::Box:
      case ModalFormula::Kind::BBox: {
        if (literal_of(f)) {
          return theory.hyp_for({f, ModalFormula::bottom()});
        }
        if (rigid_bit(sig, f)) {
          return make_axiom(sig, {f, ModalFormula::bottom()});
        }
        Sequent ax = expansion(f, /*intro=*/false);
        if (ax.rhs.kind() == ModalFormula::Kind::Bot) {
          return make_axiom(sig, ax);
        }
        ProofPtr dis = derive_false_disjunction(ax.rhs);
        return make_rule(RuleKind::Cut, {f, ModalFormula::bottom()},
                         {make_axiom(sig, ax), dis});
      }
    }
    unsupported(f);
  }

  // T |- dis, for a generated expansion disjunction with alpha(dis) = 1:
  // proves the first satisfied disjunct and injects it stepwise.
  ProofPtr derive_true_disjunction(const ModalFormula& dis) {
    std::vector<ModalFormula> parts = flat(dis, ModalFormula::Kind::Or);
    size_t hit = parts.size();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (alpha(parts[i]) == 1) {
        hit = i;
        break;
      }
    }
    if (hit == parts.size()) {
      throw MvError("internal: no satisfied disjunct in expansion");
    }
    std::vector<ModalFormula> prefixes{parts[0]};
    for (size_t k = 1; k < parts.size(); ++k) {
      prefixes.push_back(ModalFormula::disj(prefixes.back(), parts[k]));
    }
    ProofPtr cur = derive_true(parts[hit]);
    if (hit > 0) {
      ProofPtr inj = make_axiom(sig, {parts[hit], prefixes[hit]});
      cur = make_rule(RuleKind::Cut, {ModalFormula::top(), prefixes[hit]},
                      {cur, inj});
    }
    for (size_t k = hit + 1; k < parts.size(); ++k) {
      ProofPtr inj = make_axiom(sig, {prefixes[k - 1], prefixes[k]});
      cur = make_rule(RuleKind::Cut, {ModalFormula::top(), prefixes[k]},
                      {cur, inj});
    }
    return cur;
  }

  // dis |- F, for a generated expansion disjunction with alpha(dis) = 0.
  ProofPtr derive_false_disjunction(const ModalFormula& dis) {
    std::vector<ModalFormula> parts = flat(dis, ModalFormula::Kind::Or);
    ProofPtr cur = derive_false(parts[0]);
    ModalFormula cur_form = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) {
      ProofPtr next = derive_false(parts[k]);
      cur_form = ModalFormula::disj(cur_form, parts[k]);
      cur = make_rule(RuleKind::UpperBound, {cur_form, ModalFormula::bottom()},
                      {cur, next});
    }
    return cur;
  }
};

}  // namespace

SynthesisResult synthesize_completeness_proof(const LogicSignature& sig,
                                              const Valuation& v,
                                              const Sequent& s) {
  if (satisfies_sequent(sig, v, s) != 1) {
    throw MvError("sequent is not satisfied by the valuation");
  }
  TheoryBuilder theory(sig);
  Synthesizer synth{sig, v, theory};
  ProofPtr root;
  if (eval_modal(sig, v, s.lhs) == 0) {
    ProofPtr refute = synth.derive_false(s.lhs);
    ProofPtr bottom = make_axiom(sig, {ModalFormula::bottom(), s.rhs});
    root = make_rule(RuleKind::Cut, s, {refute, bottom});
  } else {
    ProofPtr top = make_axiom(sig, {s.lhs, ModalFormula::top()});
    ProofPtr establish = synth.derive_true(s.rhs);
    root = make_rule(RuleKind::Cut, s, {top, establish});
  }
  return {root, theory.take()};
}

}  // namespace mvseq
