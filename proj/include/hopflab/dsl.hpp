// Presentation language for instances: parser with source locations,
// canonical pretty-printer, and lowering to presentations.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/braided.hpp"

namespace hopflab {

struct SourceLoc {
  int line = 0, col = 0;
};

// Expressions are shared by words (generators are noncommutative letters)
// and scalars (params, the sign symbol and rational literals).
struct Expr {
  enum class Kind { Num, Ident, Neg, Add, Sub, Mul, Pow };
  Kind kind = Kind::Num;
  Rational value;          // Num
  std::string name;        // Ident
  unsigned exponent = 0;   // Pow
  std::vector<Expr> args;  // Neg: 1, Add/Sub/Mul/Pow: 2 (Pow: 1)
  SourceLoc loc;
};
// Structural equality, ignoring locations.
bool operator==(const Expr& a, const Expr& b);

struct Equation {
  Expr lhs, rhs;
};
struct NamedExpr {
  std::string name;
  Expr value;
  SourceLoc loc;
};
struct GeneratorDecl {
  std::string name;
  std::vector<int> degree;
  SourceLoc loc;
};

struct CleftDecl {
  std::vector<std::string> generators;  // renames the algebra generators in order
  std::vector<Equation> relations;
  std::vector<NamedExpr> basis;
  bool operator==(const CleftDecl&) const = default;
};

struct InstanceSpec {
  std::string name;
  std::vector<std::string> params;
  std::optional<std::pair<std::string, int>> sign;  // e.g. {"q12", -1}
  std::vector<GeneratorDecl> generators;
  std::vector<std::vector<Expr>> braiding;
  std::vector<Equation> relations;
  std::vector<NamedExpr> basis;
  std::size_t dimension = 0;
  std::optional<CleftDecl> cleft;
  std::vector<int> group_orders;  // realization group (Z/n1)x(Z/n2)...
  bool operator==(const InstanceSpec&) const = default;
};

bool operator==(const Equation& a, const Equation& b);
bool operator==(const NamedExpr& a, const NamedExpr& b);
bool operator==(const GeneratorDecl& a, const GeneratorDecl& b);

// Throws HopflabError(Syntax) with "line:col: message", or Semantic for
// ill-formed but parseable input (unknown identifiers, shapes, degrees).
InstanceSpec parse_instance(const std::string& text);
InstanceSpec parse_instance_file(const std::string& path);
std::string print_expr(const Expr& e);
// A scalar expression over the parameters of `space` and extra rational symbols.
Scalar parse_scalar(const std::string& text, const SpacePtr& space, const std::map<std::string, Rational>& symbols = {});
std::string print_instance(const InstanceSpec& spec);

// Lowering with the sign bound to `q12` (or the declared sign).
struct Instance {
  std::string name;
  int sign = 1;
  SpacePtr space;
  Presentation algebra;
  std::optional<Presentation> cleft;
  std::vector<int> group_orders;
};
Instance lower(const InstanceSpec& spec, std::optional<int> q12 = std::nullopt);

}  // namespace hopflab
