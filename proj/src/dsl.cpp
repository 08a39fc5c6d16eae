#include "hopflab/dsl.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}
bool operator==(const Equation& a, const Equation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
bool operator==(const NamedExpr& a, const NamedExpr& b) { return a.name == b.name && a.value == b.value; }
bool operator==(const GeneratorDecl& a, const GeneratorDecl& b) { return a.name == b.name && a.degree == b.degree; }

namespace {

std::string at(const SourceLoc& loc, const std::string& msg) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + msg;
}

[[noreturn]] void semantic(const SourceLoc& loc, const std::string& msg) {
  throw HopflabError(ErrorKind::Semantic, at(loc, msg));
}

// ---- lexer ----

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token t;
    t.loc = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
    } else if (std::string("{}[]();,=+-*^/").find(c) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = c;
      advance();
    } else {
      throw HopflabError(ErrorKind::Syntax, at(t.loc, std::string("unexpected character '") + c + "'"));
    }
    out.push_back(t);
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

// ---- parser ----

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Expr expression_only() {
    Expr e = expr();
    if (cur().kind != Token::Kind::End) syntax(cur().loc, "trailing input after expression");
    return e;
  }

  InstanceSpec instance() {
    InstanceSpec spec;
    keyword("algebra");
    spec.name = ident();
    expect("{");
    std::set<std::string> seen;
    while (!peek("}")) {
      const Token& kw = cur();
      const std::string word = ident();
      if (!seen.insert(word).second) syntax(kw.loc, "duplicate section '" + word + "'");
      if (word == "params") {
        spec.params = ident_list();
        expect(";");
      } else if (word == "sign") {
        const std::string name = ident();
        expect("=");
        int s = 1;
        if (accept("-"))
          s = -1;
        else
          accept("+");
        const Token& one = cur();
        if (integer() != 1) syntax(one.loc, "sign must be +1 or -1");
        spec.sign = {name, s};
        expect(";");
      } else if (word == "generators") {
        do {
          GeneratorDecl g;
          g.loc = cur().loc;
          g.name = ident();
          expect("[");
          do g.degree.push_back(static_cast<int>(integer()));
          while (accept(","));
          expect("]");
          spec.generators.push_back(g);
        } while (accept(","));
        expect(";");
      } else if (word == "braiding") {
        expect("[");
        do {
          expect("[");
          std::vector<Expr> row;
          do row.push_back(expr());
          while (accept(","));
          expect("]");
          spec.braiding.push_back(std::move(row));
        } while (accept(","));
        expect("]");
        expect(";");
      } else if (word == "relations") {
        spec.relations = equations();
      } else if (word == "basis") {
        spec.basis = named_block();
      } else if (word == "dimension") {
        spec.dimension = integer();
        expect(";");
      } else if (word == "cleft") {
        spec.cleft = cleft();
      } else if (word == "realization") {
        keyword("group");
        do {
          expect("(");
          const Token& z = cur();
          if (ident() != "Z") syntax(z.loc, "expected cyclic factor Z/n");
          expect("/");
          spec.group_orders.push_back(static_cast<int>(integer()));
          expect(")");
        } while (accept_ident("x"));
        expect(";");
      } else {
        syntax(kw.loc, "unknown section '" + word + "'");
      }
    }
    expect("}");
    if (cur().kind != Token::Kind::End) syntax(cur().loc, "trailing input after the algebra block");
    return spec;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] static void syntax(const SourceLoc& loc, const std::string& msg) {
    throw HopflabError(ErrorKind::Syntax, at(loc, msg));
  }
  bool peek(const char* p) const { return cur().kind == Token::Kind::Punct && cur().text == p; }
  bool accept(const char* p) {
    if (!peek(p)) return false;
    ++pos_;
    return true;
  }
  bool accept_ident(const char* w) {
    if (cur().kind != Token::Kind::Ident || cur().text != w) return false;
    ++pos_;
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) syntax(cur().loc, std::string("expected '") + p + "'" + found());
  }
  std::string found() const {
    return cur().kind == Token::Kind::End ? " but reached end of input" : " but found '" + cur().text + "'";
  }
  void keyword(const char* w) {
    if (!accept_ident(w)) syntax(cur().loc, std::string("expected '") + w + "'" + found());
  }
  std::string ident() {
    if (cur().kind != Token::Kind::Ident) syntax(cur().loc, "expected identifier" + found());
    return toks_[pos_++].text;
  }
  std::size_t integer() {
    if (cur().kind != Token::Kind::Int) syntax(cur().loc, "expected integer" + found());
    return std::stoul(toks_[pos_++].text);
  }
  std::vector<std::string> ident_list() {
    std::vector<std::string> out;
    do out.push_back(ident());
    while (accept(","));
    return out;
  }
  std::vector<Equation> equations() {
    std::vector<Equation> out;
    expect("{");
    while (!accept("}")) {
      Equation e;
      e.lhs = expr();
      expect("=");
      e.rhs = expr();
      expect(";");
      out.push_back(std::move(e));
    }
    return out;
  }
  std::vector<NamedExpr> named_block() {
    std::vector<NamedExpr> out;
    expect("{");
    while (!accept("}")) {
      NamedExpr n;
      n.loc = cur().loc;
      if (cur().kind == Token::Kind::Ident || cur().kind == Token::Kind::Int)
        n.name = toks_[pos_++].text;
      else
        syntax(cur().loc, "expected basis name" + found());
      expect("=");
      n.value = expr();
      expect(";");
      out.push_back(std::move(n));
    }
    return out;
  }
  CleftDecl cleft() {
    CleftDecl c;
    expect("{");
    std::set<std::string> seen;
    while (!accept("}")) {
      const Token& kw = cur();
      const std::string word = ident();
      if (!seen.insert(word).second) syntax(kw.loc, "duplicate section '" + word + "'");
      if (word == "generators") {
        c.generators = ident_list();
        expect(";");
      } else if (word == "relations") {
        c.relations = equations();
      } else if (word == "basis") {
        c.basis = named_block();
      } else {
        syntax(kw.loc, "unknown cleft section '" + word + "'");
      }
    }
    return c;
  }

  // expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
  // unary := '-' unary | power; power := atom ('^' int)?
  Expr expr() {
    Expr left = term();
    while (peek("+") || peek("-")) {
      const SourceLoc loc = cur().loc;
      const Expr::Kind k = accept("+") ? Expr::Kind::Add : (accept("-"), Expr::Kind::Sub);
      Expr e{k, {}, {}, 0, {std::move(left), term()}, loc};
      left = std::move(e);
    }
    return left;
  }
  Expr term() {
    Expr left = unary();
    while (peek("*")) {
      const SourceLoc loc = cur().loc;
      ++pos_;
      Expr e{Expr::Kind::Mul, {}, {}, 0, {std::move(left), unary()}, loc};
      left = std::move(e);
    }
    return left;
  }
  Expr unary() {
    if (peek("-")) {
      const SourceLoc loc = cur().loc;
      ++pos_;
      return Expr{Expr::Kind::Neg, {}, {}, 0, {unary()}, loc};
    }
    Expr base = atom();
    if (peek("^")) {
      const SourceLoc loc = cur().loc;
      ++pos_;
      const auto n = static_cast<unsigned>(integer());
      return Expr{Expr::Kind::Pow, {}, {}, n, {std::move(base)}, loc};
    }
    return base;
  }
  Expr atom() {
    const SourceLoc loc = cur().loc;
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (cur().kind == Token::Kind::Ident) return Expr{Expr::Kind::Ident, {}, ident(), 0, {}, loc};
    if (cur().kind == Token::Kind::Int) {
      Rational v(toks_[pos_++].text);
      if (accept("/")) {
        const Token& d = cur();
        const Rational den(static_cast<long>(integer()));
        if (den == 0) syntax(d.loc, "zero denominator");
        v /= den;
      }
      return Expr{Expr::Kind::Num, v, {}, 0, {}, loc};
    }
    syntax(loc, "expected expression" + found());
  }
};

// ---- printer ----

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Num: return e.value.get_den() == 1 ? 5 : 2;
    case Expr::Kind::Ident: return 5;
  }
  return 5;
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print_expr(e) + ")" : print_expr(e); }

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num: return e.value.get_str();
    case Expr::Kind::Ident: return e.name;
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], precedence(e.args[0]) < 3);
    case Expr::Kind::Pow: return wrap(e.args[0], precedence(e.args[0]) < 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: {
      const int p = precedence(e);
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : "*";
      // Right operands at equal precedence keep their parentheses so the tree
      // shape survives a reparse; a fraction counts as a product.
      return wrap(e.args[0], precedence(e.args[0]) < p) + op + wrap(e.args[1], precedence(e.args[1]) <= p);
    }
  }
  return "";
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void print_equations(std::ostringstream& os, const std::vector<Equation>& eqs, const std::string& indent) {
  os << indent << "relations {\n";
  for (const auto& e : eqs) os << indent << "  " << print_expr(e.lhs) << " = " << print_expr(e.rhs) << ";\n";
  os << indent << "}\n";
}

void print_basis(std::ostringstream& os, const std::vector<NamedExpr>& basis, const std::string& indent) {
  os << indent << "basis {\n";
  for (const auto& b : basis) os << indent << "  " << b.name << " = " << print_expr(b.value) << ";\n";
  os << indent << "}\n";
}

}  // namespace

std::string print_instance(const InstanceSpec& spec) {
  std::ostringstream os;
  os << "algebra " << spec.name << " {\n";
  if (!spec.params.empty()) os << "  params " << join(spec.params, ", ") << ";\n";
  if (spec.sign) os << "  sign " << spec.sign->first << " = " << (spec.sign->second < 0 ? "-1" : "+1") << ";\n";
  if (!spec.generators.empty()) {
    std::vector<std::string> gens;
    for (const auto& g : spec.generators) {
      std::vector<std::string> d;
      for (int x : g.degree) d.push_back(std::to_string(x));
      gens.push_back(g.name + "[" + join(d, ",") + "]");
    }
    os << "  generators " << join(gens, ", ") << ";\n";
  }
  if (!spec.braiding.empty()) {
    std::vector<std::string> rows;
    for (const auto& row : spec.braiding) {
      std::vector<std::string> entries;
      for (const auto& e : row) entries.push_back(print_expr(e));
      rows.push_back("[" + join(entries, ", ") + "]");
    }
    os << "  braiding [" << join(rows, ", ") << "];\n";
  }
  if (!spec.relations.empty()) print_equations(os, spec.relations, "  ");
  if (!spec.basis.empty()) print_basis(os, spec.basis, "  ");
  if (spec.dimension) os << "  dimension " << spec.dimension << ";\n";
  if (spec.cleft) {
    os << "  cleft {\n";
    if (!spec.cleft->generators.empty()) os << "    generators " << join(spec.cleft->generators, ", ") << ";\n";
    if (!spec.cleft->relations.empty()) print_equations(os, spec.cleft->relations, "    ");
    if (!spec.cleft->basis.empty()) print_basis(os, spec.cleft->basis, "    ");
    os << "  }\n";
  }
  if (!spec.group_orders.empty()) {
    std::vector<std::string> f;
    for (int n : spec.group_orders) f.push_back("(Z/" + std::to_string(n) + ")");
    os << "  realization group " << join(f, "x") << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---- semantics and lowering ----

namespace {

struct Context {
  std::map<std::string, int> letters;
  std::map<std::string, Scalar> scalars;
};

FreePoly eval(const Expr& e, const Context& ctx) {
  switch (e.kind) {
    case Expr::Kind::Num: return fp_scalar(Scalar(e.value));
    case Expr::Kind::Ident: {
      if (auto it = ctx.letters.find(e.name); it != ctx.letters.end()) return fp_word(Word{it->second});
      if (auto it = ctx.scalars.find(e.name); it != ctx.scalars.end()) return fp_scalar(it->second);
      semantic(e.loc, "unknown identifier '" + e.name + "'");
    }
    case Expr::Kind::Neg: {
      FreePoly out;
      fp_add(out, eval(e.args[0], ctx), Scalar(-1));
      return out;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      FreePoly out = eval(e.args[0], ctx);
      fp_add(out, eval(e.args[1], ctx), Scalar(e.kind == Expr::Kind::Add ? 1 : -1));
      return out;
    }
    case Expr::Kind::Mul: return fp_mul(eval(e.args[0], ctx), eval(e.args[1], ctx));
    case Expr::Kind::Pow: return fp_pow(eval(e.args[0], ctx), e.exponent);
  }
  return {};
}

Scalar eval_scalar(const Expr& e, const Context& ctx) {
  std::function<void(const Expr&)> reject = [&](const Expr& x) {
    if (x.kind == Expr::Kind::Ident && ctx.letters.count(x.name))
      semantic(x.loc, "generator '" + x.name + "' in a scalar position");
    for (const auto& a : x.args) reject(a);
  };
  reject(e);
  const FreePoly p = eval(e, ctx);
  if (p.empty()) return Scalar();
  return p.begin()->second;
}

std::vector<std::vector<int>> degrees_of(const InstanceSpec& spec) {
  std::vector<std::vector<int>> out;
  for (const auto& g : spec.generators) out.push_back(g.degree);
  return out;
}

void check_homogeneous(const FreePoly& p, const std::vector<std::vector<int>>& degs, const SourceLoc& loc,
                       const std::string& what) {
  std::vector<int> d;
  if (!fp_homogeneous(p, degs, d)) semantic(loc, what + " is not homogeneous");
}

Context base_context(const InstanceSpec& spec, const SpacePtr& space, int sign) {
  Context ctx;
  for (const auto& p : spec.params) ctx.scalars[p] = Scalar::param(space, p);
  if (spec.sign) ctx.scalars[spec.sign->first] = Scalar(Rational(sign));
  return ctx;
}

void validate(const InstanceSpec& spec) {
  const SourceLoc top{1, 1};
  if (spec.generators.empty()) semantic(top, "no generators declared");
  const std::size_t theta = spec.generators.size();
  if (theta > 4) semantic(spec.generators[4].loc, "at most 4 generators are supported");
  std::set<std::string> names(spec.params.begin(), spec.params.end());
  if (names.size() != spec.params.size()) semantic(top, "duplicate parameter");
  if (spec.sign && !names.insert(spec.sign->first).second) semantic(top, "sign symbol clashes with a parameter");
  for (const auto& g : spec.generators) {
    if (!names.insert(g.name).second) semantic(g.loc, "duplicate name '" + g.name + "'");
    if (g.degree.size() != theta)
      semantic(g.loc, "degree of '" + g.name + "' must have " + std::to_string(theta) + " entries");
  }
  if (spec.braiding.size() != theta) semantic(top, "braiding must be a " + std::to_string(theta) + "x" + std::to_string(theta) + " matrix");
  for (const auto& row : spec.braiding)
    if (row.size() != theta) semantic(row.empty() ? top : row.front().loc, "braiding row has the wrong length");
  if (spec.dimension == 0) semantic(top, "missing dimension");

  const auto space = make_space(spec.params);
  Context ctx = base_context(spec, space, spec.sign ? spec.sign->second : 1);
  for (const auto& row : spec.braiding)
    for (const auto& e : row)
      if (!eval_scalar(e, ctx).is_constant()) semantic(e.loc, "braiding entries must be rational");
  for (std::size_t k = 0; k < theta; ++k) ctx.letters[spec.generators[k].name] = static_cast<int>(k);
  const auto degs = degrees_of(spec);
  for (const auto& r : spec.relations) {
    FreePoly p = eval(r.lhs, ctx);
    fp_add(p, eval(r.rhs, ctx), Scalar(-1));
    check_homogeneous(p, degs, r.lhs.loc, "relation");
  }
  for (const auto& b : spec.basis) check_homogeneous(eval(b.value, ctx), degs, b.loc, "basis element " + b.name);
  if (!spec.basis.empty() && spec.basis.size() != spec.dimension)
    semantic(spec.basis.front().loc, "basis has " + std::to_string(spec.basis.size()) + " elements, dimension is " +
                                         std::to_string(spec.dimension));
  if (!spec.group_orders.empty() && spec.group_orders.size() != theta) semantic(top, "realization needs one cyclic factor per generator");

  if (spec.cleft) {
    const auto& c = *spec.cleft;
    if (c.generators.size() != theta) semantic(top, "cleft block must rename every generator");
    Context cc = base_context(spec, space, spec.sign ? spec.sign->second : 1);
    for (std::size_t k = 0; k < theta; ++k) {
      if (cc.scalars.count(c.generators[k])) semantic(top, "cleft generator '" + c.generators[k] + "' clashes with a parameter");
      cc.letters[c.generators[k]] = static_cast<int>(k);
    }
    for (const auto& r : c.relations) {
      check_homogeneous(eval(r.lhs, cc), degs, r.lhs.loc, "cleft relation left side");
      eval_scalar(r.rhs, cc);
    }
    if (c.basis.size() != spec.basis.size()) semantic(top, "cleft basis must match the algebra basis in size");
    for (const auto& b : c.basis) check_homogeneous(eval(b.value, cc), degs, b.loc, "cleft basis element " + b.name);
  }
}

}  // namespace

Scalar parse_scalar(const std::string& text, const SpacePtr& space, const std::map<std::string, Rational>& symbols) {
  Parser p(tokenize(text));
  const Expr e = p.expression_only();
  Context ctx;
  for (const auto& name : space->names()) ctx.scalars[name] = Scalar::param(space, name);
  for (const auto& [name, v] : symbols) ctx.scalars[name] = Scalar(v);
  return eval_scalar(e, ctx);
}

InstanceSpec parse_instance(const std::string& text) {
  Parser p(tokenize(text));
  InstanceSpec spec = p.instance();
  validate(spec);
  return spec;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HopflabError(ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const HopflabError& e) {
    throw HopflabError(e.kind(), path + ":" + e.what());
  }
}

Instance lower(const InstanceSpec& spec, std::optional<int> q12) {
  Instance out;
  out.name = spec.name;
  out.sign = q12 ? *q12 : spec.sign ? spec.sign->second : 1;
  if (out.sign != 1 && out.sign != -1) throw HopflabError(ErrorKind::Input, "q12 must be +1 or -1");
  if (q12 && !spec.sign && *q12 != 1) throw HopflabError(ErrorKind::Input, spec.name + " declares no sign symbol");
  out.space = make_space(spec.params);
  out.group_orders = spec.group_orders;
  Context ctx = base_context(spec, out.space, out.sign);

  Presentation& p = out.algebra;
  p.name = spec.name;
  p.space = out.space;
  p.dimension = spec.dimension;
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    p.generators.push_back(spec.generators[k].name);
    p.gen_degrees.push_back(spec.generators[k].degree);
  }
  for (const auto& row : spec.braiding) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(eval_scalar(e, ctx).constant_value());
    p.q.push_back(r);
  }
  Context letters = ctx;
  for (std::size_t k = 0; k < p.generators.size(); ++k) letters.letters[p.generators[k]] = static_cast<int>(k);
  for (const auto& r : spec.relations) {
    FreePoly f = eval(r.lhs, letters);
    fp_add(f, eval(r.rhs, letters), Scalar(-1));
    p.relations.push_back(f);
  }
  for (const auto& b : spec.basis) {
    p.basis_names.push_back(b.name);
    p.basis.push_back(eval(b.value, letters));
  }

  if (spec.cleft) {
    Presentation c = p;
    c.name = spec.name + "_cleft";
    c.generators = spec.cleft->generators;
    Context cc = ctx;
    for (std::size_t k = 0; k < c.generators.size(); ++k) cc.letters[c.generators[k]] = static_cast<int>(k);
    c.relations.clear();
    for (const auto& r : spec.cleft->relations) {
      FreePoly f = eval(r.lhs, cc);
      fp_add(f, eval(r.rhs, cc), Scalar(-1));
      c.relations.push_back(f);
    }
    c.basis_names.clear();
    c.basis.clear();
    for (const auto& b : spec.cleft->basis) {
      c.basis_names.push_back(b.name);
      c.basis.push_back(eval(b.value, cc));
    }
    out.cleft = std::move(c);
  }
  return out;
}

}  // namespace hopflab
