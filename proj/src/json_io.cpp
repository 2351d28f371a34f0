#include "mvseq/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mvseq {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw MvError("malformed JSON in " + what);
  return j;
}

// Collects every string leaf of a nested table value, row-major.
void flatten_cells(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (j.is_array()) {
    for (const json& item : j) flatten_cells(item, out);
  } else if (!j.is_null()) {
    throw MvError("table cells must be value symbols");
  }
}

const json& member(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw MvError(what + " lacks \"" + key + "\"");
  return *it;
}

}  // namespace

LogicSignature load_signature_json(const std::string& text) {
  json j = parse_json(text, "logic definition");
  if (!j.is_object()) throw MvError("logic definition must be an object");
  std::string name = member(j, "name", "logic definition").get<std::string>();
  std::vector<std::string> values;
  for (const json& v : member(j, "values", "logic definition")) {
    values.push_back(v.get<std::string>());
  }
  std::string bf =
      member(j, "bool_false", "logic definition").get<std::string>();
  std::string bt =
      member(j, "bool_true", "logic definition").get<std::string>();

  // Resolve table cells against the declared X order; unknown symbols become
  // defective cells so validation can name them.
  auto cell_id = [&](const std::string& sym) -> int {
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i] == sym) return static_cast<int>(i);
    }
    return -1;
  };

  std::vector<Connective> conns;
  auto cj = j.find("connectives");
  if (cj != j.end()) {
    for (const json& c : *cj) {
      Connective conn;
      conn.symbol = member(c, "symbol", "connective").get<std::string>();
      conn.arity = member(c, "arity", "connective").get<int>();
      std::vector<std::string> cells;
      flatten_cells(member(c, "table", "connective " + conn.symbol), cells);
      for (const std::string& sym : cells) {
        conn.table.push_back(cell_id(sym));
      }
      conns.push_back(std::move(conn));
    }
  }
  return LogicSignature(name, values, bf, bt, std::move(conns));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MvError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LogicSignature load_signature_file(const std::string& path) {
  return load_signature_json(read_text_file(path));
}

Valuation load_valuation_file(const LogicSignature& sig,
                              const std::string& path) {
  json j = parse_json(read_text_file(path), path);
  if (!j.is_object()) throw MvError("valuation must be a JSON object");
  std::map<Atom, int> out;
  for (const auto& [key, val] : j.items()) {
    Atom a = parse_atom(key);
    auto id = sig.find_value(val.get<std::string>());
    if (!id || !sig.is_x(*id)) {
      throw MvError("unknown value symbol \"" + val.get<std::string>() +
                    "\" for atom " + key);
    }
    out.emplace(std::move(a), *id);
  }
  return Valuation(std::move(out));
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
      out.push_back("");
      continue;
    }
    size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

TheoryGamma load_gamma_file(const LogicSignature& sig,
                            const std::string& path) {
  TheoryGamma out;
  std::vector<std::string> lines = content_lines(read_text_file(path));
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    try {
      out.push_back(parse_sequent(sig, lines[i]));
    } catch (const ParseError& e) {
      throw MvError(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<MvFormula> load_mv_formulas_file(const LogicSignature& sig,
                                             const std::string& path) {
  std::vector<MvFormula> out;
  std::vector<std::string> lines = content_lines(read_text_file(path));
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    try {
      out.push_back(parse_mv(sig, lines[i]));
    } catch (const ParseError& e) {
      throw MvError(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

namespace {

Substitution subst_from_json(const LogicSignature& sig, const json& j) {
  Substitution sigma;
  for (const auto& [key, val] : j.items()) {
    std::string image = val.get<std::string>();
    if (!key.empty() && key[0] == '[') {
      auto lit = literal_of(parse_modal(sig, key));
      if (!lit) {
        throw MvError("substitution key is not a modal literal: " + key);
      }
      sigma.modal.emplace_back(*lit, parse_modal(sig, image));
    } else {
      sigma.mv.emplace(parse_atom(key), parse_mv(sig, image));
    }
  }
  return sigma;
}

ProofPtr node_from_json(const LogicSignature& sig, const json& j) {
  if (!j.is_object()) throw MvError("proof node must be an object");
  auto node = std::make_shared<ProofNode>();
  node->conclusion =
      parse_sequent(sig, member(j, "sequent", "proof node").get<std::string>());
  std::string by = member(j, "by", "proof node").get<std::string>();
  if (by.rfind("axiom:", 0) == 0) {
    node->just = AxiomJust{by.substr(6)};
  } else if (by.rfind("hyp:", 0) == 0) {
    node->just = HypJust{std::stoi(by.substr(4))};
  } else if (by.rfind("rule:", 0) == 0) {
    auto kind = rule_kind_of(by.substr(5));
    if (!kind) throw MvError("unknown rule in \"" + by + "\"");
    Substitution sigma;
    if (auto it = j.find("subst"); it != j.end()) {
      sigma = subst_from_json(sig, *it);
    }
    node->just = RuleJust{*kind, std::move(sigma)};
  } else {
    throw MvError("unknown justification \"" + by + "\"");
  }
  if (auto it = j.find("macro"); it != j.end()) {
    node->macro = it->get<std::string>();
  }
  if (auto it = j.find("premises"); it != j.end()) {
    for (const json& p : *it) {
      node->premises.push_back(node_from_json(sig, p));
    }
  }
  return node;
}

json node_to_json(const LogicSignature& sig, const ProofNode& n) {
  json j;
  j["sequent"] = print(sig, n.conclusion);
  if (const auto* ax = std::get_if<AxiomJust>(&n.just)) {
    j["by"] = "axiom:" + ax->claimed;
  } else if (const auto* hy = std::get_if<HypJust>(&n.just)) {
    j["by"] = "hyp:" + std::to_string(hy->index);
  } else {
    const auto& rule = std::get<RuleJust>(n.just);
    j["by"] = "rule:" + to_string(rule.kind);
    if (!rule.sigma.empty()) {
      json s = json::object();
      for (const auto& [atom, image] : rule.sigma.mv) {
        s[to_string(atom)] = print(sig, image);
      }
      for (const auto& [lit, image] : rule.sigma.modal) {
        s[print(sig, to_formula(lit))] = print(sig, image);
      }
      j["subst"] = std::move(s);
    }
  }
  if (!n.macro.empty()) j["macro"] = n.macro;
  if (!n.premises.empty()) {
    json arr = json::array();
    for (const ProofPtr& p : n.premises) {
      arr.push_back(node_to_json(sig, *p));
    }
    j["premises"] = std::move(arr);
  }
  return j;
}

}  // namespace

Proof proof_from_json_text(const LogicSignature& sig,
                           const std::string& text) {
  return node_from_json(sig, parse_json(text, "proof"));
}

Proof load_proof_file(const LogicSignature& sig, const std::string& path) {
  return proof_from_json_text(sig, read_text_file(path));
}

std::string proof_to_json_text(const LogicSignature& sig, const Proof& p) {
  if (!p) throw MvError("empty proof");
  return node_to_json(sig, *p).dump(2) + "\n";
}

}  // namespace mvseq
