#include "qgroot_cli/expr.hpp"

#include <cctype>
#include <map>

namespace qgroot::cli {

ExprError::ExprError(Pos pos, const std::string& msg)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg),
      pos_(pos),
      msg_(msg) {}

namespace {

// Separator pattern between the indices of each atom.
const std::map<std::string, std::string>& atom_shapes() {
  static const std::map<std::string, std::string> shapes = {
      {"K", ""},   {"Kinv", ""}, {"kbin", ";;"}, {"k", ";"},    {"h", ";"},
      {"E", ";"},  {"F", ";"},   {"Eij", ",;"},  {"Fij", ",;"},
  };
  return shapes;
}

enum class Tok { Int, Ident, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (i_ >= s_.size()) return t;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) t.text += advance();
    } else if (std::string("()[],;+-*/^").find(c) != std::string::npos) {
      t.kind = Tok::Punct;
      t.text = advance();
    } else {
      throw ExprError(pos_, std::string("unexpected character '") + c + "'");
    }
    return t;
  }

 private:
  char advance() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Pos pos_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { tok_ = lex_.next(); }

  Expr parse_all() {
    Expr e = expr();
    if (tok_.kind != Tok::End) throw ExprError(tok_.pos, "unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  bool at(const char* p) const { return tok_.kind == Tok::Punct && tok_.text == p; }
  void bump() { tok_ = lex_.next(); }
  void expect(const char* p) {
    if (!at(p)) throw ExprError(tok_.pos, std::string("expected '") + p + "'" + found());
    bump();
  }
  std::string found() const { return tok_.kind == Tok::End ? ", found end of input" : ", found '" + tok_.text + "'"; }

  static Expr binary(Expr::Kind k, Pos pos, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr e = term();
    while (at("+") || at("-")) {
      const Expr::Kind k = at("+") ? Expr::Kind::Add : Expr::Kind::Sub;
      const Pos p = tok_.pos;
      bump();
      e = binary(k, p, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (at("*") || at("/")) {
      const Expr::Kind k = at("*") ? Expr::Kind::Mul : Expr::Kind::Div;
      const Pos p = tok_.pos;
      bump();
      e = binary(k, p, std::move(e), factor());
    }
    return e;
  }

  Expr factor() {
    if (at("-")) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.pos = tok_.pos;
      bump();
      e.kids.push_back(factor());
      return e;
    }
    Expr base = primary();
    if (!at("^")) return base;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.pos = tok_.pos;
    bump();
    e.exponent = signed_int("exponent");
    e.kids.push_back(std::move(base));
    return e;
  }

  int signed_int(const char* what) {
    bool neg = false;
    if (at("-")) {
      neg = true;
      bump();
    }
    if (tok_.kind != Tok::Int) throw ExprError(tok_.pos, std::string("expected integer ") + what + found());
    if (tok_.text.size() > 9) throw ExprError(tok_.pos, std::string(what) + " too large");
    const int v = std::stoi(tok_.text);
    bump();
    return neg ? -v : v;
  }

  Expr primary() {
    Expr e;
    e.pos = tok_.pos;
    if (at("(")) {
      bump();
      e = expr();
      expect(")");
      return e;
    }
    if (tok_.kind == Tok::Int) {
      e.kind = Expr::Kind::Number;
      e.value = Integer(tok_.text);
      bump();
      return e;
    }
    if (tok_.kind != Tok::Ident) throw ExprError(tok_.pos, "expected a term" + found());
    e.name = tok_.text;
    if (e.name == "v" || e.name == "xi") {
      e.kind = Expr::Kind::Var;
      bump();
      return e;
    }
    auto shape = atom_shapes().find(e.name);
    if (shape == atom_shapes().end()) throw ExprError(tok_.pos, "unknown atom '" + e.name + "'");
    e.kind = Expr::Kind::Atom;
    bump();
    expect("[");
    e.args.push_back(signed_int("index"));
    for (char sep : shape->second) {
      const char s[2] = {sep, 0};
      expect(s);
      e.args.push_back(signed_int("index"));
    }
    expect("]");
    return e;
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

bool is_atom_name(const std::string& name) { return atom_shapes().count(name) != 0; }

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace qgroot::cli
