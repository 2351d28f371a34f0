// mvseq: command-line workbench over finite many-valued logic signatures.
// Subcommands: validate, axioms, reduce, entail, invariance, matrix,
// check-proof, prove, kripke, selftest. Exit codes: 0 success/entailed,
// 1 refuted/invalid, 2 vacuous/none, 3 usage error, 4 input format error.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvseq/calculus.hpp"
#include "mvseq/core.hpp"
#include "mvseq/json_io.hpp"
#include "mvseq/kripke.hpp"
#include "mvseq/reduction.hpp"
#include "mvseq/selftest.hpp"
#include "mvseq/semantics.hpp"
#include "mvseq/syntax.hpp"

namespace {

using nlohmann::json;
using namespace mvseq;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kVacuous = 2;
constexpr int kUsage = 3;
constexpr int kFormat = 4;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kUsage;
}

std::string valuation_text(const LogicSignature& sig, const Valuation& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [atom, x] : v.assignment()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(atom) << "=" << sig.value_symbol(x);
  }
  return os.str();
}

json valuation_json(const LogicSignature& sig, const Valuation& v) {
  json out = json::object();
  for (const auto& [atom, x] : v.assignment()) {
    out[to_string(atom)] = sig.value_symbol(x);
  }
  return out;
}

void emit_json(json j, double elapsed) {
  j["elapsed_ms"] = elapsed;
  std::cout << j.dump(2) << "\n";
}

// Resolves a --value argument to an id in the many-valued domain.
int resolve_x_value(const LogicSignature& sig, const std::string& symbol) {
  std::optional<int> id = sig.find_value(symbol);
  if (!id || !sig.is_x(*id)) {
    throw CLI::ValidationError(
        "--value", "'" + symbol + "' is not a value of the many-valued domain");
  }
  return *id;
}

std::vector<Atom> sorted_universe(std::set<Atom> atoms) {
  return std::vector<Atom>(atoms.begin(), atoms.end());
}

struct AxiomLine {
  std::string tag;
  std::string sequent;
};

// The printable introduction/elimination axioms of one connective: intro
// lines for every value in ascending order, then the elimination mirrors.
// Nullary connectives yield their rigid constant axioms instead.
std::vector<AxiomLine> axiom_lines(const LogicSignature& sig,
                                   const Connective& c,
                                   std::optional<int> only_value) {
  Placeholders ph;
  ph.phi = MvFormula::atom(Atom{"phi", {}});
  ph.psi = MvFormula::atom(Atom{"psi", {}});
  std::vector<AxiomLine> out;
  auto add = [&](const AxiomId& id) {
    Sequent s = generate_axiom(sig, id, ph);
    out.push_back({to_string(sig, id), print(sig, s)});
  };
  if (c.arity == 0) {
    for (int x = 0; x < sig.num_x(); ++x) {
      if (only_value && *only_value != x) continue;
      Placeholders rigid;
      rigid.Phi = ModalFormula::box(x, MvFormula::app(c.symbol, {}));
      AxiomTag tag =
          c.table[0] == x ? AxiomTag::IntroConst : AxiomTag::ElimConst;
      Sequent s = generate_axiom(sig, {tag, "", -1}, rigid);
      out.push_back({to_string(sig, {tag, "", -1}), print(sig, s)});
    }
    return out;
  }
  AxiomTag intro = c.arity == 1 ? AxiomTag::IntroUnary : AxiomTag::IntroBinary;
  AxiomTag elim = c.arity == 1 ? AxiomTag::ElimUnary : AxiomTag::ElimBinary;
  for (int x = 0; x < sig.num_x(); ++x) {
    if (only_value && *only_value != x) continue;
    add({intro, c.symbol, x});
  }
  for (int x = 0; x < sig.num_x(); ++x) {
    if (only_value && *only_value != x) continue;
    add({elim, c.symbol, x});
  }
  return out;
}

struct Options {
  std::string logic;
  std::string gamma;
  std::string valuation;
  std::string premises;
  std::string proof;
  std::string sequent;
  std::string formula;
  std::string phi;
  std::string connective;
  std::string value;
  std::string designated;
  std::string format = "text";
  bool trace = false;
  bool random4 = false;
  int depth = 6;
  unsigned seed = 0;

  bool json_out() const { return format == "json"; }
};

int run_validate(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  std::vector<Diagnostic> diags = validate_signature(sig);
  if (opt.json_out()) {
    json j;
    j["verdict"] = diags.empty() ? "ok" : "invalid";
    j["counts"] = {{"diagnostics", diags.size()}};
    json list = json::array();
    for (const Diagnostic& d : diags) {
      list.push_back({{"code", d.code}, {"message", d.message}});
    }
    j["witness"] = list;
    emit_json(j, ms_since(start));
  } else if (diags.empty()) {
    std::cout << "ok\n";
  } else {
    for (const Diagnostic& d : diags) {
      std::cout << d.code << ": " << d.message << "\n";
    }
  }
  return diags.empty() ? kOk : kRefuted;
}

int run_axioms(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  std::optional<int> only_value;
  if (!opt.value.empty()) only_value = resolve_x_value(sig, opt.value);
  std::vector<const Connective*> conns;
  if (!opt.connective.empty()) {
    const Connective* c = sig.find_connective(opt.connective);
    if (!c) {
      throw CLI::ValidationError(
          "--connective", "unknown connective '" + opt.connective + "'");
    }
    conns.push_back(c);
  } else {
    for (const Connective& c : sig.connectives()) conns.push_back(&c);
  }
  std::vector<AxiomLine> lines;
  for (const Connective* c : conns) {
    for (AxiomLine& l : axiom_lines(sig, *c, only_value)) {
      lines.push_back(std::move(l));
    }
  }
  if (opt.json_out()) {
    json j;
    j["verdict"] = "ok";
    j["counts"] = {{"axioms", lines.size()}};
    json list = json::array();
    for (const AxiomLine& l : lines) {
      list.push_back({{"tag", l.tag}, {"sequent", l.sequent}});
    }
    j["axioms"] = list;
    emit_json(j, ms_since(start));
  } else {
    for (const AxiomLine& l : lines) {
      std::cout << l.tag << ": " << l.sequent << "\n";
    }
  }
  return kOk;
}

int run_reduce(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  int x = resolve_x_value(sig, opt.value);
  MvFormula phi = parse_mv(sig, opt.formula);
  ModalFormula f = ModalFormula::box(x, phi);
  std::vector<std::string> trace;
  Dnf d = canonical(sig, f, opt.trace ? &trace : nullptr);
  std::string result = print(sig, embed(d));
  if (opt.json_out()) {
    json j;
    j["verdict"] = "ok";
    j["dnf"] = result;
    j["counts"] = {{"steps", trace.size()},
                   {"disjuncts", d.disjuncts().size()}};
    if (opt.trace) j["trace"] = trace;
    emit_json(j, ms_since(start));
  } else {
    for (const std::string& line : trace) std::cout << line << "\n";
    std::cout << result << "\n";
  }
  return kOk;
}

int run_entail(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  TheoryGamma gamma = load_gamma_file(sig, opt.gamma);
  Sequent s = parse_sequent(sig, opt.sequent);
  EntailResult r = entails_m(sig, gamma, s, query_universe(gamma, s));
  if (opt.json_out()) {
    json j;
    j["verdict"] = r.vacuous ? "vacuous" : (r.entailed ? "entailed" : "refuted");
    j["witness"] =
        r.countermodel ? valuation_json(sig, *r.countermodel) : json(nullptr);
    j["counts"] = {{"models_checked", r.models_checked}};
    emit_json(j, ms_since(start));
  } else if (r.vacuous) {
    std::cout << "vacuous\n";
  } else if (r.entailed) {
    std::cout << "entailed\n";
  } else {
    std::cout << "refuted\n";
    std::cout << "countermodel: " << valuation_text(sig, *r.countermodel)
              << "\n";
  }
  return r.vacuous ? kVacuous : (r.entailed ? kOk : kRefuted);
}

int run_invariance(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  TheoryGamma gamma = load_gamma_file(sig, opt.gamma);
  MvFormula phi = parse_mv(sig, opt.phi);
  std::set<Atom> atoms;
  collect_atoms(phi, atoms);
  for (const Sequent& s : gamma) {
    for (const Atom& a : atoms_of(s)) atoms.insert(a);
  }
  InvarianceResult r =
      truth_invariant(sig, gamma, phi, sorted_universe(std::move(atoms)));
  if (opt.json_out()) {
    json j;
    j["verdict"] =
        r.vacuous ? "vacuous" : (r.invariant ? "invariant" : "varying");
    if (r.invariant && r.value) {
      j["witness"] = sig.value_symbol(*r.value);
    } else if (!r.invariant) {
      json list = json::array();
      for (const auto& [v, x] : r.witnesses) {
        list.push_back({{"model", valuation_json(sig, v)},
                        {"value", sig.value_symbol(x)}});
      }
      j["witness"] = list;
    } else {
      j["witness"] = nullptr;
    }
    j["counts"] = {{"models_checked", r.models_checked}};
    emit_json(j, ms_since(start));
  } else if (r.vacuous) {
    std::cout << "vacuous\n";
  } else if (r.invariant) {
    std::cout << "invariant: " << sig.value_symbol(*r.value) << "\n";
  } else {
    std::cout << "varying\n";
    for (const auto& [v, x] : r.witnesses) {
      std::cout << "witness: " << valuation_text(sig, v) << " -> "
                << sig.value_symbol(x) << "\n";
    }
  }
  return r.vacuous ? kVacuous : (r.invariant ? kOk : kRefuted);
}

int run_matrix(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  std::vector<MvFormula> premises = load_mv_formulas_file(sig, opt.premises);
  MvFormula phi = parse_mv(sig, opt.phi);
  std::vector<int> designated;
  std::stringstream ss(opt.designated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    designated.push_back(resolve_x_value(sig, item));
  }
  if (designated.empty()) {
    throw CLI::ValidationError("--designated",
                               "at least one designated value is required");
  }
  std::set<Atom> atoms;
  collect_atoms(phi, atoms);
  for (const MvFormula& p : premises) collect_atoms(p, atoms);
  MatrixResult r = matrix_entails(sig, premises, phi, designated,
                                  sorted_universe(std::move(atoms)));
  if (opt.json_out()) {
    json j;
    j["verdict"] = r.entailed ? "entailed" : "refuted";
    j["witness"] =
        r.countermodel ? valuation_json(sig, *r.countermodel) : json(nullptr);
    j["counts"] = {{"premises", premises.size()}};
    emit_json(j, ms_since(start));
  } else if (r.entailed) {
    std::cout << "entailed\n";
  } else {
    std::cout << "refuted\n";
    std::cout << "countermodel: " << valuation_text(sig, *r.countermodel)
              << "\n";
  }
  return r.entailed ? kOk : kRefuted;
}

std::string path_text(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::ostringstream os;
  os << "root";
  for (int i : path) os << "." << i;
  return os.str();
}

int run_check_proof(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  TheoryGamma gamma;
  if (!opt.gamma.empty()) gamma = load_gamma_file(sig, opt.gamma);
  Proof p = load_proof_file(sig, opt.proof);
  CheckVerdict v = check_proof(sig, gamma, p);
  if (opt.json_out()) {
    json j;
    j["verdict"] = v.ok ? "ok" : "invalid";
    j["witness"] = v.ok ? json(nullptr)
                        : json({{"path", v.path}, {"message", v.message}});
    j["counts"] = {{"hypotheses", gamma.size()}};
    emit_json(j, ms_since(start));
  } else if (v.ok) {
    std::cout << "ok\n";
  } else {
    std::cout << "invalid at " << path_text(v.path) << ": " << v.message
              << "\n";
  }
  return v.ok ? kOk : kRefuted;
}

int run_prove(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  TheoryGamma gamma;
  if (!opt.gamma.empty()) gamma = load_gamma_file(sig, opt.gamma);
  Sequent s = parse_sequent(sig, opt.sequent);
  std::optional<Proof> p = prove_bounded(sig, gamma, s, opt.depth);
  if (opt.json_out()) {
    json j;
    j["verdict"] = p ? "found" : "none";
    j["witness"] = p ? json::parse(proof_to_json_text(sig, *p)) : json(nullptr);
    j["counts"] = {{"depth", opt.depth}};
    emit_json(j, ms_since(start));
  } else if (p) {
    std::cout << proof_to_json_text(sig, *p);
  } else {
    std::cout << "no proof within depth " << opt.depth << "\n";
  }
  return p ? kOk : kVacuous;
}

int run_kripke(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = load_signature_file(opt.logic);
  Valuation v = load_valuation_file(sig, opt.valuation);
  ModalFormula f = parse_modal(sig, opt.formula);
  KripkeModel m = build_model(sig, v);
  std::set<int> ext = extension(sig, m, f);
  bool two = check_two_valued(sig, m, f);
  if (opt.json_out()) {
    json j;
    j["verdict"] = "ok";
    json worlds = json::array();
    for (int w : ext) worlds.push_back(sig.value_symbol(w));
    j["witness"] = {{"extension", worlds}, {"two_valued", two}};
    j["counts"] = {{"worlds", sig.num_y()}, {"extension_size", ext.size()}};
    emit_json(j, ms_since(start));
  } else {
    std::cout << "extension:";
    if (ext.empty()) {
      std::cout << " (empty)";
    } else {
      for (int w : ext) std::cout << " " << sig.value_symbol(w);
    }
    std::cout << "\n";
    std::cout << "two-valued: " << (two ? "yes" : "no") << "\n";
  }
  return kOk;
}

int run_selftest_cmd(const Options& opt) {
  auto start = Clock::now();
  LogicSignature sig = opt.random4 ? random_signature(4, opt.seed)
                                   : load_signature_file(opt.logic);
  SelftestReport report = run_selftest(sig, opt.seed);
  if (opt.json_out()) {
    json j;
    j["verdict"] = report.all_pass() ? "pass" : "fail";
    json suites = json::array();
    long long cases = 0;
    for (const SuiteResult& s : report.suites) {
      cases += s.cases;
      suites.push_back({{"name", s.name},
                        {"pass", s.pass},
                        {"cases", s.cases},
                        {"violations", s.violations},
                        {"detail", s.detail},
                        {"elapsed_ms", s.elapsed_ms}});
    }
    j["suites"] = suites;
    j["counts"] = {{"cases", cases}, {"suites", report.suites.size()}};
    emit_json(j, ms_since(start));
  } else {
    std::cout << "signature: " << sig.name() << "\n";
    std::cout << format_report(report);
  }
  return report.all_pass() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite many-valued logics: canonical reduction, "
               "entailment, sequent proofs, and frame semantics"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_logic = [&](CLI::App* cmd) {
    cmd->add_option("--logic", opt.logic, "logic signature JSON file")
        ->required();
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check a logic signature for well-formedness");
  add_logic(validate);
  add_format(validate);

  CLI::App* axioms = app.add_subcommand(
      "axioms", "print introduction/elimination axiom schemas");
  add_logic(axioms);
  axioms->add_option("--connective", opt.connective,
                     "restrict to one connective");
  axioms->add_option("--value", opt.value, "restrict to one value symbol");
  add_format(axioms);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "canonical disjunctive normal form of a value operator");
  add_logic(reduce);
  reduce->add_option("--value", opt.value, "value symbol of the operator")
      ->required();
  reduce->add_option("--formula", opt.formula, "many-valued formula text")
      ->required();
  reduce->add_flag("--trace", opt.trace, "print each rewrite step");
  add_format(reduce);

  CLI::App* entail = app.add_subcommand(
      "entail", "decide sequent entailment from a theory");
  add_logic(entail);
  entail->add_option("--gamma", opt.gamma, "theory file, one sequent per line")
      ->required();
  entail->add_option("--sequent", opt.sequent, "sequent text")->required();
  add_format(entail);

  CLI::App* invariance = app.add_subcommand(
      "invariance", "decide truth invariance of a formula over a theory");
  add_logic(invariance);
  invariance
      ->add_option("--gamma", opt.gamma, "theory file, one sequent per line")
      ->required();
  invariance->add_option("--phi", opt.phi, "many-valued formula text")
      ->required();
  add_format(invariance);

  CLI::App* matrix = app.add_subcommand(
      "matrix", "designated-value entailment between many-valued formulas");
  add_logic(matrix);
  matrix
      ->add_option("--premises", opt.premises,
                   "file with one many-valued formula per line")
      ->required();
  matrix->add_option("--phi", opt.phi, "conclusion formula text")->required();
  matrix
      ->add_option("--designated", opt.designated,
                   "comma-separated designated value symbols")
      ->required();
  add_format(matrix);

  CLI::App* check = app.add_subcommand(
      "check-proof", "validate a derivation tree from a JSON file");
  add_logic(check);
  check->add_option("--gamma", opt.gamma, "optional hypothesis theory file");
  check->add_option("proof", opt.proof, "proof JSON file")->required();
  add_format(check);

  CLI::App* prove = app.add_subcommand(
      "prove", "bounded backward search for a derivation");
  add_logic(prove);
  prove->add_option("--gamma", opt.gamma, "optional hypothesis theory file");
  prove->add_option("--sequent", opt.sequent, "sequent text")->required();
  prove->add_option("--depth", opt.depth, "maximum proof height")
      ->check(CLI::Range(0, 64));
  add_format(prove);

  CLI::App* kripke = app.add_subcommand(
      "kripke", "evaluate a modal formula on the frame of a valuation");
  add_logic(kripke);
  kripke
      ->add_option("--valuation", opt.valuation,
                   "JSON file mapping atoms to value symbols")
      ->required();
  kripke->add_option("--formula", opt.formula, "modal formula text")
      ->required();
  add_format(kripke);

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the property suites over exhaustive pools");
  selftest->add_option("--logic", opt.logic, "logic signature JSON file");
  selftest->add_flag("--random4", opt.random4,
                     "use a seeded random 4-valued signature");
  selftest->add_option("--seed", opt.seed, "seed for randomized suites");
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (axioms->parsed()) return run_axioms(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (entail->parsed()) return run_entail(opt);
    if (invariance->parsed()) return run_invariance(opt);
    if (matrix->parsed()) return run_matrix(opt);
    if (check->parsed()) return run_check_proof(opt);
    if (prove->parsed()) return run_prove(opt);
    if (kripke->parsed()) {
      return run_kripke(opt);
    }
    if (selftest->parsed()) {
      if (!opt.random4 && opt.logic.empty()) {
        return usage_error("selftest requires --logic or --random4");
      }
      return run_selftest_cmd(opt);
    }
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const mvseq::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kFormat;
  } catch (const mvseq::MvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  }
  return usage_error("no subcommand selected");
}
