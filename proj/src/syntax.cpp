#include "mvseq/syntax.hpp"

#include <cctype>

namespace mvseq {

MvFormula MvFormula::atom(Atom a) {
  MvFormula f;
  f.rep_ = std::make_shared<Rep>(Rep{Kind::Atom, std::move(a), -1, {}, {}});
  return f;
}

MvFormula MvFormula::constant(int value_id) {
  MvFormula f;
  f.rep_ = std::make_shared<Rep>(Rep{Kind::Const, {}, value_id, {}, {}});
  return f;
}

MvFormula MvFormula::app(std::string conn, std::vector<MvFormula> args) {
  MvFormula f;
  f.rep_ = std::make_shared<Rep>(
      Rep{Kind::App, {}, -1, std::move(conn), std::move(args)});
  return f;
}

int compare(const MvFormula& a, const MvFormula& b) {
  using K = MvFormula::Kind;
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
    case K::Atom: {
      auto c = a.atom_ref() <=> b.atom_ref();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case K::Const:
      return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
    case K::App: {
      if (int c = a.conn().compare(b.conn()); c != 0) return c < 0 ? -1 : 1;
      const auto& xs = a.args();
      const auto& ys = b.args();
      for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
        if (int c = compare(xs[i], ys[i]); c != 0) return c;
      }
      return xs.size() < ys.size() ? -1 : (xs.size() > ys.size() ? 1 : 0);
    }
  }
  return 0;
}

ModalFormula ModalFormula::top() {
  ModalFormula f;
  f.rep_ = std::make_shared<Rep>(Rep{Kind::Top, -1, {}, {}});
  return f;
}

ModalFormula ModalFormula::bottom() {
  ModalFormula f;
  f.rep_ = std::make_shared<Rep>(Rep{Kind::Bot, -1, {}, {}});
  return f;
}

ModalFormula ModalFormula::box(int value_id, MvFormula inner) {
  ModalFormula f;
  f.rep_ = std::make_shared<Rep>(Rep{Kind::Box, value_id, std::move(inner), {}});
  return f;
}

ModalFormula ModalFormula::bbox(int anchor_id, ModalFormula inner) {
  ModalFormula f;
  f.rep_ =
      std::make_shared<Rep>(Rep{Kind::BBox, anchor_id, {}, {std::move(inner)}});
  return f;
}

ModalFormula ModalFormula::conj(ModalFormula l, ModalFormula r) {
  ModalFormula f;
  f.rep_ = std::make_shared<Rep>(
      Rep{Kind::And, -1, {}, {std::move(l), std::move(r)}});
  return f;
}

ModalFormula ModalFormula::disj(ModalFormula l, ModalFormula r) {
  ModalFormula f;
  f.rep_ = std::make_shared<Rep>(
      Rep{Kind::Or, -1, {}, {std::move(l), std::move(r)}});
  return f;
}

int compare(const ModalFormula& a, const ModalFormula& b) {
  using K = ModalFormula::Kind;
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
    case K::Top:
    case K::Bot:
      return 0;
    case K::Box: {
      if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
      return compare(a.inner_mv(), b.inner_mv());
    }
    case K::BBox: {
      if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
      return compare(a.child(), b.child());
    }
    case K::And:
    case K::Or: {
      if (int c = compare(a.left(), b.left()); c != 0) return c;
      return compare(a.right(), b.right());
    }
  }
  return 0;
}

ModalFormula to_formula(const ModalLiteral& lit) {
  ModalFormula f =
      ModalFormula::box(lit.prefix.back(), MvFormula::atom(lit.atom));
  for (int i = static_cast<int>(lit.prefix.size()) - 2; i >= 0; --i) {
    f = ModalFormula::bbox(lit.prefix[i], std::move(f));
  }
  return f;
}

std::optional<ModalLiteral> literal_of(const ModalFormula& f) {
  ModalLiteral lit;
  const ModalFormula* cur = &f;
  while (cur->kind() == ModalFormula::Kind::BBox) {
    lit.prefix.push_back(cur->index());
    cur = &cur->child();
  }
  if (cur->kind() != ModalFormula::Kind::Box ||
      cur->inner_mv().kind() != MvFormula::Kind::Atom) {
    return std::nullopt;
  }
  lit.prefix.push_back(cur->index());
  lit.atom = cur->inner_mv().atom_ref();
  return lit;
}

std::string print(const LogicSignature& sig, const MvFormula& f) {
  switch (f.kind()) {
    case MvFormula::Kind::Atom:
      return to_string(f.atom_ref());
    case MvFormula::Kind::Const:
      return "#" + sig.value_symbol(f.value());
    case MvFormula::Kind::App: {
      if (f.args().empty()) return f.conn();
      std::string out = f.conn() + "(";
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ",";
        out += print(sig, f.args()[i]);
      }
      return out + ")";
    }
  }
  return "";
}

std::string print(const LogicSignature& sig, const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
      return "T";
    case ModalFormula::Kind::Bot:
      return "F";
    case ModalFormula::Kind::Box:
      return "[" + sig.value_symbol(f.index()) + "](" +
             print(sig, f.inner_mv()) + ")";
    case ModalFormula::Kind::BBox:
      return "[" + sig.value_symbol(f.index()) + "](" + print(sig, f.child()) +
             ")";
    case ModalFormula::Kind::And:
      return "(" + print(sig, f.left()) + " & " + print(sig, f.right()) + ")";
    case ModalFormula::Kind::Or:
      return "(" + print(sig, f.left()) + " | " + print(sig, f.right()) + ")";
  }
  return "";
}

std::string print(const LogicSignature& sig, const Sequent& s) {
  return print(sig, s.lhs) + " |- " + print(sig, s.rhs);
}

namespace {

enum class Tok {
  Name,
  Hash,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Amp,
  Pipe,
  Turnstile,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      bump();
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        name += text_[pos_];
        bump();
      }
      tok_.kind = Tok::Name;
      tok_.text = std::move(name);
      return;
    }
    switch (c) {
      case '#': single(Tok::Hash); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case ',': single(Tok::Comma); return;
      case '&': single(Tok::Amp); return;
      case '|':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          bump();
          tok_.kind = Tok::Turnstile;
          tok_.text = "|-";
        } else {
          tok_.kind = Tok::Pipe;
          tok_.text = "|";
        }
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
  }

  void single(Tok k) {
    tok_.kind = k;
    tok_.text = text_[pos_];
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

bool ident_like(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  return true;
}

class Parser {
 public:
  Parser(const LogicSignature& sig, const std::string& text)
      : sig_(sig), lex_(text) {}

  MvFormula mv() {
    MvFormula f = parse_mv();
    expect_end();
    return f;
  }

  ModalFormula modal() {
    ModalFormula f = parse_modal();
    expect_end();
    return f;
  }

  Sequent sequent() {
    ModalFormula l = parse_modal();
    expect(Tok::Turnstile, "'|-'");
    ModalFormula r = parse_modal();
    expect_end();
    return {std::move(l), std::move(r)};
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End) {
      lex_.fail("trailing input after formula");
    }
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) lex_.fail("expected " + what);
    return lex_.take();
  }

  int value_id(const Token& t) {
    auto id = sig_.find_value(t.text);
    if (!id) {
      throw ParseError("unknown truth value '" + t.text + "'", t.line, t.col);
    }
    return *id;
  }

  ModalFormula parse_modal() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Name: {
        Token name = lex_.take();
        if (name.text == "T") return ModalFormula::top();
        if (name.text == "F") return ModalFormula::bottom();
        throw ParseError("expected a modal formula, got '" + name.text + "'",
                         name.line, name.col);
      }
      case Tok::LBracket: {
        lex_.take();
        Token idx = expect(Tok::Name, "a value symbol");
        int id = value_id(idx);
        expect(Tok::RBracket, "']'");
        expect(Tok::LParen, "'('");
        // A boolean anchor followed by a body that opens like a modal
        // formula takes the boolean reading; everything else is a value
        // operator over a many-valued body.
        bool modal_body = false;
        if (sig_.is_bool_anchor(id)) {
          const Token& b = lex_.peek();
          modal_body = b.kind == Tok::LBracket || b.kind == Tok::LParen ||
                       (b.kind == Tok::Name && (b.text == "T" || b.text == "F"));
        }
        if (modal_body) {
          ModalFormula inner = parse_modal();
          expect(Tok::RParen, "')'");
          return ModalFormula::bbox(id, std::move(inner));
        }
        if (!sig_.is_x(id)) {
          throw ParseError("value operator index '" + idx.text +
                               "' is a boolean anchor outside X and its body "
                               "is not a modal formula",
                           idx.line, idx.col);
        }
        MvFormula inner = parse_mv();
        expect(Tok::RParen, "')'");
        return ModalFormula::box(id, std::move(inner));
      }
      case Tok::LParen: {
        lex_.take();
        ModalFormula l = parse_modal();
        const Token& op = lex_.peek();
        if (op.kind != Tok::Amp && op.kind != Tok::Pipe) {
          lex_.fail("expected '&' or '|'");
        }
        bool is_and = lex_.take().kind == Tok::Amp;
        ModalFormula r = parse_modal();
        expect(Tok::RParen, "')'");
        return is_and ? ModalFormula::conj(std::move(l), std::move(r))
                      : ModalFormula::disj(std::move(l), std::move(r));
      }
      default:
        lex_.fail("expected a modal formula");
    }
  }

  MvFormula parse_mv() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Hash) {
      lex_.take();
      Token sym = expect(Tok::Name, "a value symbol");
      int id = value_id(sym);
      if (!sig_.is_x(id)) {
        throw ParseError("constant '" + sym.text + "' is not a value of X",
                         sym.line, sym.col);
      }
      return MvFormula::constant(id);
    }
    if (t.kind != Tok::Name) lex_.fail("expected a many-valued formula");
    Token name = lex_.take();
    if (!ident_like(name.text)) {
      throw ParseError("invalid identifier '" + name.text + "'", name.line,
                       name.col);
    }
    const Connective* c = sig_.find_connective(name.text);
    if (c) {
      if (c->arity == 0) return MvFormula::app(name.text, {});
      expect(Tok::LParen, "'(' after connective '" + name.text + "'");
      std::vector<MvFormula> args;
      args.push_back(parse_mv());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(parse_mv());
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(args.size()) != c->arity) {
        throw ParseError("connective '" + name.text + "' expects " +
                             std::to_string(c->arity) + " arguments, got " +
                             std::to_string(args.size()),
                         name.line, name.col);
      }
      return MvFormula::app(name.text, std::move(args));
    }
    Atom a{name.text, {}};
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Token arg = expect(Tok::Name, "a constant argument");
      if (!ident_like(arg.text)) {
        throw ParseError("invalid identifier '" + arg.text + "'", arg.line,
                         arg.col);
      }
      a.args.push_back(arg.text);
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        arg = expect(Tok::Name, "a constant argument");
        if (!ident_like(arg.text)) {
          throw ParseError("invalid identifier '" + arg.text + "'", arg.line,
                           arg.col);
        }
        a.args.push_back(arg.text);
      }
      expect(Tok::RParen, "')'");
    }
    return MvFormula::atom(std::move(a));
  }

  const LogicSignature& sig_;
  Lexer lex_;
};

}  // namespace

MvFormula parse_mv(const LogicSignature& sig, const std::string& text) {
  return Parser(sig, text).mv();
}

ModalFormula parse_modal(const LogicSignature& sig, const std::string& text) {
  return Parser(sig, text).modal();
}

Sequent parse_sequent(const LogicSignature& sig, const std::string& text) {
  return Parser(sig, text).sequent();
}

Atom parse_atom(const std::string& text) {
  // Atoms in valuation files: NAME or NAME(NAME,...).
  LogicSignature dummy("", {"_a", "_b"}, "_a", "_b", {});
  MvFormula f = parse_mv(dummy, text);
  if (f.kind() != MvFormula::Kind::Atom) {
    throw MvError("not an atom: " + text);
  }
  return f.atom_ref();
}

namespace {

void check_mv(const LogicSignature& sig, const MvFormula& f,
              WellFormedResult& r) {
  switch (f.kind()) {
    case MvFormula::Kind::Atom:
      return;
    case MvFormula::Kind::Const:
      if (!sig.is_x(f.value())) {
        r.ok = false;
        r.problems.push_back("constant value id " + std::to_string(f.value()) +
                             " is not in X");
      }
      return;
    case MvFormula::Kind::App: {
      const Connective* c = sig.find_connective(f.conn());
      if (!c) {
        r.ok = false;
        r.problems.push_back("unknown connective '" + f.conn() + "'");
      } else if (c->arity != static_cast<int>(f.args().size())) {
        r.ok = false;
        r.problems.push_back("connective '" + f.conn() + "' expects " +
                             std::to_string(c->arity) + " arguments");
      }
      for (const auto& a : f.args()) check_mv(sig, a, r);
      return;
    }
  }
}

void check_modal(const LogicSignature& sig, const ModalFormula& f,
                 WellFormedResult& r) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bot:
      return;
    case ModalFormula::Kind::Box:
      if (!sig.is_x(f.index())) {
        r.ok = false;
        r.problems.push_back("value operator index id " +
                             std::to_string(f.index()) + " is not in X");
      }
      check_mv(sig, f.inner_mv(), r);
      return;
    case ModalFormula::Kind::BBox:
      if (!sig.is_bool_anchor(f.index())) {
        r.ok = false;
        r.problems.push_back("boolean operator index id " +
                             std::to_string(f.index()) +
                             " is not a boolean anchor");
      }
      check_modal(sig, f.child(), r);
      return;
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Or:
      check_modal(sig, f.left(), r);
      check_modal(sig, f.right(), r);
      return;
  }
}

}  // namespace

WellFormedResult well_formed(const LogicSignature& sig, const MvFormula& f) {
  WellFormedResult r;
  check_mv(sig, f, r);
  return r;
}

WellFormedResult well_formed(const LogicSignature& sig, const ModalFormula& f) {
  WellFormedResult r;
  check_modal(sig, f, r);
  return r;
}

WellFormedResult well_formed(const LogicSignature& sig, const Sequent& s) {
  WellFormedResult r = well_formed(sig, s.lhs);
  WellFormedResult r2 = well_formed(sig, s.rhs);
  r.ok = r.ok && r2.ok;
  r.problems.insert(r.problems.end(), r2.problems.begin(), r2.problems.end());
  return r;
}

void collect_atoms(const MvFormula& f, std::set<Atom>& out) {
  switch (f.kind()) {
    case MvFormula::Kind::Atom:
      out.insert(f.atom_ref());
      return;
    case MvFormula::Kind::Const:
      return;
    case MvFormula::Kind::App:
      for (const auto& a : f.args()) collect_atoms(a, out);
      return;
  }
}

void collect_atoms(const ModalFormula& f, std::set<Atom>& out) {
  switch (f.kind()) {
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bot:
      return;
    case ModalFormula::Kind::Box:
      collect_atoms(f.inner_mv(), out);
      return;
    case ModalFormula::Kind::BBox:
      collect_atoms(f.child(), out);
      return;
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Or:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

std::set<Atom> atoms_of(const Sequent& s) {
  std::set<Atom> out;
  collect_atoms(s.lhs, out);
  collect_atoms(s.rhs, out);
  return out;
}

bool atom_free(const MvFormula& f) {
  std::set<Atom> atoms;
  collect_atoms(f, atoms);
  return atoms.empty();
}

bool atom_free(const ModalFormula& f) {
  std::set<Atom> atoms;
  collect_atoms(f, atoms);
  return atoms.empty();
}

}  // namespace mvseq
