#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qgroot/laurent.hpp"

namespace qgroot::cli {

struct Pos {
  int line = 1;
  int column = 1;
};

/// Syntax and evaluation errors, positioned in the input text.
class ExprError : public std::runtime_error {
 public:
  ExprError(Pos pos, const std::string& msg);
  Pos pos() const { return pos_; }
  const std::string& message() const { return msg_; }

 private:
  Pos pos_;
  std::string msg_;
};

struct Expr {
  enum class Kind { Number, Var, Atom, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Number;
  Pos pos;
  Integer value;          // Number
  std::string name;       // Var ("v", "xi") or atom name
  std::vector<int> args;  // atom indices in order
  int exponent = 0;       // Pow
  std::vector<Expr> kids;
};

/// Atom names with their index separators: K[i], Kinv[i], kbin[i;c;t],
/// k[i;t], h[i;n], E[i;N], F[i;N], Eij[i,j;N], Fij[i,j;N].
bool is_atom_name(const std::string& name);

/// Parses the whole input; see docs/grammar.md.
Expr parse(const std::string& text);

}  // namespace qgroot::cli
