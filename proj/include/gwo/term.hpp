#pragma once

#include <string>
#include <vector>

namespace gwo {

/// Term tree for equational identities over a group-with-operations
/// signature. Nodes live in a flat pool; children are pool indices.
struct TermNode {
  enum class Kind { Zero, Var, Neg, Add, Bin, Un };
  Kind kind = Kind::Zero;
  int a = -1;       // first child
  int b = -1;       // second child (Add/Bin)
  int var = -1;     // variable slot (Var)
  std::string op;   // operation name (Bin/Un)

  bool operator==(const TermNode&) const = default;
};

/// An equation lhs = rhs between two terms sharing one variable list.
///
/// Surface syntax:
///   equation := sum '=' sum
///   sum      := prod (('+' | '-') prod)*          left assoc
///   prod     := unary (BINOP unary)*               left assoc
///   unary    := '-' unary | atom
///   atom     := '0' | VAR | NAME '(' sum [',' sum] ')' | '(' sum ')'
/// BINOP is a symbolic operation name (a run of chars from *~^@#&!?%:.|<>),
/// usable infix; any operation may also be applied as NAME(args). An
/// identifier not followed by '(' is a variable. Unary minus binds
/// tighter than infix operations, so -x*y reads ((-x)*y). At most four
/// distinct variables are allowed (evaluation is exhaustive).
struct IdentityTerm {
  std::string text;
  std::vector<TermNode> nodes;
  int lhs = -1;
  int rhs = -1;
  std::vector<std::string> vars;  // ordered by first occurrence

  bool operator==(const IdentityTerm&) const = default;
};

/// Parses the surface syntax above. Throws Error(ParseError) with a
/// column number on bad input or when more than four variables occur.
IdentityTerm parse_identity(const std::string& text);

}  // namespace gwo
