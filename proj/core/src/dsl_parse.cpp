#include <algorithm>
#include <cctype>
#include <map>

#include "bdist/dsl.hpp"

namespace bdist::dsl {

using Op = Ast::Op;

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, TensorOp, ConvOp, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::Syntax, "syntax error at column " + std::to_string(pos + 1) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (s.substr(i, 3) == "(x)") {
      t.kind = Token::Kind::TensorOp;
      t.text = "(x)";
      i += 3;
    } else if (s.substr(i, 3) == "(*)") {
      t.kind = Token::Kind::ConvOp;
      t.text = "(*)";
      i += 3;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (digit(i)) {
      std::size_t j = i;
      while (digit(j)) ++j;
      if (j < s.size() && s[j] == '.' && digit(j + 1)) {
        ++j;
        while (digit(j)) ++j;
      } else if (j < s.size() && s[j] == '/' && digit(j + 1)) {
        ++j;
        while (digit(j)) ++j;
      }
      t.kind = Token::Kind::Number;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::string_view("{}(),+-*.").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
      ++i;
    } else {
      syntax_error(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

enum class Prefix { None, LimF, DerivF, Lim, Deriv, LimT, LimU, DerivT, DerivU };

const std::map<std::string, Prefix, std::less<>>& prefixes() {
  static const std::map<std::string, Prefix, std::less<>> m = {
      {"LIMF", Prefix::LimF}, {"DF", Prefix::DerivF}, {"LIM", Prefix::Lim},     {"D", Prefix::Deriv},
      {"LIMT", Prefix::LimT}, {"LIMU", Prefix::LimU}, {"DT", Prefix::DerivT}, {"DU", Prefix::DerivU},
  };
  return m;
}

Op prefix_op(Prefix p, bool left) {
  switch (p) {
    case Prefix::LimF: return left ? Op::LimFL : Op::LimFR;
    case Prefix::DerivF: return left ? Op::DerivFL : Op::DerivFR;
    case Prefix::Lim: return left ? Op::LimL : Op::LimR;
    case Prefix::Deriv: return left ? Op::DerivL : Op::DerivR;
    case Prefix::LimT: return left ? Op::LimTL : Op::LimTR;
    case Prefix::LimU: return left ? Op::LimUL : Op::LimUR;
    case Prefix::DerivT: return left ? Op::DerivTL : Op::DerivTR;
    case Prefix::DerivU: return left ? Op::DerivUL : Op::DerivUR;
    case Prefix::None: break;
  }
  return Op::Zero;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Ast expression() {
    Ast a = sum();
    expect_end();
    return a;
  }

  Ast set_only() {
    Ast a = set_expr();
    expect_end();
    return a;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  bool is_punct(const Token& t, char c) const { return t.kind == Token::Kind::Punct && t.text[0] == c; }
  bool is_ident(const Token& t, std::string_view name) const { return t.kind == Token::Kind::Ident && t.text == name; }

  void expect(char c) {
    const Token& t = next();
    if (!is_punct(t, c)) syntax_error(t.pos, std::string("expected '") + c + "'" + found(t));
  }
  void expect_ident(std::string_view name) {
    const Token& t = next();
    if (!is_ident(t, name)) syntax_error(t.pos, "expected '" + std::string(name) + "'" + found(t));
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) syntax_error(peek().pos, "unexpected trailing input" + found(peek()));
  }
  static std::string found(const Token& t) {
    return t.kind == Token::Kind::End ? ", found end of input" : ", found '" + t.text + "'";
  }

  Rational rat() {
    bool negative = false;
    if (is_punct(peek(), '-') || is_punct(peek(), '+')) negative = next().text == "-";
    const Token& t = next();
    if (t.kind != Token::Kind::Number) syntax_error(t.pos, "expected a rational number" + found(t));
    const Rational r = Rational::parse(t.text);
    return negative ? -r : r;
  }

  Ast sum() {
    const std::size_t start = peek().pos;
    Ast l = tens();
    while (is_punct(peek(), '+')) {
      next();
      l = binary(Op::Sum, std::move(l), tens(), start);
    }
    return l;
  }

  Ast tens() {
    const std::size_t start = peek().pos;
    Ast l = mul();
    while (peek().kind == Token::Kind::TensorOp || peek().kind == Token::Kind::ConvOp) {
      const Op op = next().kind == Token::Kind::TensorOp ? Op::Tensor : Op::Conv;
      l = binary(op, std::move(l), mul(), start);
    }
    return l;
  }

  Ast mul() {
    const std::size_t start = peek().pos;
    Ast l = primary();
    while (is_punct(peek(), '*') || is_punct(peek(), '.')) {
      const Op op = next().text == "*" ? Op::Product : Op::Dot;
      l = binary(op, std::move(l), primary(), start);
    }
    return l;
  }

  Ast binary(Op op, Ast l, Ast r, std::size_t start) {
    Ast a;
    a.op = op;
    a.kids.push_back(std::move(l));
    a.kids.push_back(std::move(r));
    a.span = {start, prev_end()};
    return a;
  }

  std::size_t prev_end() const {
    if (i_ == 0) return 0;
    const Token& t = toks_[i_ - 1];
    return t.pos + t.text.size();
  }

  Ast leaf(Op op, std::size_t start) {
    Ast a;
    a.op = op;
    a.span = {start, prev_end()};
    return a;
  }

  Ast wrapped(Op op, std::size_t start) {
    expect('(');
    Ast a;
    a.op = op;
    a.kids.push_back(sum());
    expect(')');
    a.span = {start, prev_end()};
    return a;
  }

  Ast primary() {
    const Token& t = peek();
    const std::size_t start = t.pos;
    if (t.kind == Token::Kind::Number) {
      next();
      if (t.text == "0") return leaf(Op::Zero, start);
      if (t.text == "1") return leaf(Op::One, start);
      syntax_error(start, "only the constants 0 and 1 can stand alone, found '" + t.text + "'");
    }
    if (is_punct(t, '(')) {
      next();
      Ast a = sum();
      expect(')');
      return a;
    }
    if (t.kind != Token::Kind::Ident) syntax_error(start, "expected an expression" + found(t));
    const std::string name = next().text;
    if (name == "CHI") return chi(start);
    if (name == "CHI2") return chi2(start);
    if (name == "REG" || name == "DELTAL" || name == "DELTAR") {
      Ast a;
      a.op = name == "REG" ? Op::Reg : (name == "DELTAL" ? Op::DeltaL : Op::DeltaR);
      a.kids.push_back(set_expr());
      a.span = {start, prev_end()};
      return a;
    }
    if (name == "DELTA") {
      expect('(');
      Ast a;
      a.op = Op::Delta;
      a.nums.push_back(rat());
      expect(')');
      a.span = {start, prev_end()};
      return a;
    }
    if (name == "PARITY") return leaf(Op::Parity, start);
    if (name == "INTDL") return leaf(Op::IntDL, start);
    if (name == "INTDR") return leaf(Op::IntDR, start);
    if (name == "TR" || name == "TR2") {
      expect('(');
      Ast a;
      a.op = name == "TR" ? Op::Translate : Op::Translate2;
      a.nums.push_back(rat());
      expect(',');
      if (a.op == Op::Translate2) {
        a.nums.push_back(rat());
        expect(',');
      }
      a.kids.push_back(sum());
      expect(')');
      a.span = {start, prev_end()};
      return a;
    }
    if (name == "SWAP") return wrapped(Op::Swap, start);
    if (const auto it = prefixes().find(name); it != prefixes().end()) {
      const Token& s = next();
      if (!is_punct(s, '-') && !is_punct(s, '+')) syntax_error(s.pos, "expected '-' or '+' after " + name + found(s));
      return wrapped(prefix_op(it->second, s.text == "-"), start);
    }
    syntax_error(start, "unknown name '" + name + "'");
  }

  Ast chi(std::size_t start) {
    expect('{');
    Ast a;
    if (is_punct(peek(), '(')) {
      next();
      a.op = Op::ChiInterval;
      auto end = [&](bool& inf_flag, bool lower) {
        const bool neg = is_punct(peek(), '-');
        const bool pos = is_punct(peek(), '+');
        const Token& maybe = peek((neg || pos) ? 1 : 0);
        if (is_ident(maybe, "inf")) {
          if (lower != neg) syntax_error(maybe.pos, lower ? "lower end must be -inf" : "upper end must be inf");
          if (neg || pos) next();
          next();
          inf_flag = true;
          a.nums.emplace_back(0);
        } else {
          a.nums.push_back(rat());
        }
      };
      end(a.lo_inf, true);
      expect(',');
      end(a.hi_inf, false);
      expect(')');
      if (!a.lo_inf && !a.hi_inf && !(a.nums[0] < a.nums[1])) {
        throw Error(ErrorCode::EmptyInterval, "empty interval (" + a.nums[0].str() + ", " + a.nums[1].str() +
                                                  ") at column " + std::to_string(start + 1));
      }
    } else {
      a.op = Op::ChiPoint;
      a.nums.push_back(rat());
    }
    expect('}');
    a.span = {start, prev_end()};
    return a;
  }

  // One axis of a CHI2 cell: "{t}" or "(a, b)"; returns true for a point.
  bool cell(std::vector<Rational>& nums) {
    if (is_punct(peek(), '{')) {
      next();
      nums.push_back(rat());
      expect('}');
      return true;
    }
    const std::size_t at = peek().pos;
    expect('(');
    const Rational a = rat();
    expect(',');
    const Rational b = rat();
    expect(')');
    if (!(a < b)) {
      throw Error(ErrorCode::EmptyInterval,
                  "empty interval (" + a.str() + ", " + b.str() + ") at column " + std::to_string(at + 1));
    }
    nums.push_back(a);
    nums.push_back(b);
    return false;
  }

  Ast chi2(std::size_t start) {
    expect('{');
    Ast a;
    a.op = Op::Chi2;
    a.t_point = cell(a.nums);
    expect_ident("x");
    a.u_point = cell(a.nums);
    expect('}');
    a.span = {start, prev_end()};
    return a;
  }

  bool at_set_op() const {
    if (is_ident(peek(), "U")) return true;
    // "D" followed by a sign is a derivative, which cannot follow a set anyway.
    return is_ident(peek(), "D") && !is_punct(peek(1), '-') && !is_punct(peek(1), '+');
  }

  Ast set_expr() {
    const std::size_t start = peek().pos;
    Ast l = set_atom();
    while (at_set_op()) {
      const Op op = next().text == "U" ? Op::SetUnion : Op::SetSymDiff;
      l = binary(op, std::move(l), set_atom(), start);
    }
    return l;
  }

  Ast set_atom() {
    const Token& t = peek();
    const std::size_t start = t.pos;
    if (is_punct(t, '{')) {
      next();
      Ast a;
      a.op = Op::SetLit;
      if (!is_punct(peek(), '}')) {
        a.nums.push_back(rat());
        while (is_punct(peek(), ',')) {
          next();
          a.nums.push_back(rat());
        }
      }
      expect('}');
      std::sort(a.nums.begin(), a.nums.end());
      a.nums.erase(std::unique(a.nums.begin(), a.nums.end()), a.nums.end());
      a.span = {start, prev_end()};
      return a;
    }
    if (is_punct(t, '(')) {
      next();
      Ast a = set_expr();
      expect(')');
      return a;
    }
    if (is_ident(t, "PROG") || is_ident(t, "PROGP") || is_ident(t, "PROGM")) {
      const std::string name = next().text;
      Ast a;
      a.op = name == "PROG" ? Op::Prog : (name == "PROGP" ? Op::ProgP : Op::ProgM);
      expect('(');
      a.nums.push_back(rat());
      expect(',');
      a.nums.push_back(rat());
      expect(')');
      if (a.nums[1].sign() <= 0) {
        throw Error(ErrorCode::ZeroPeriod, "progression period must be positive at column " + std::to_string(start + 1));
      }
      a.span = {start, prev_end()};
      return a;
    }
    syntax_error(start, "expected a set" + found(t));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Ast parse(std::string_view text) {
  Ast a = Parser(text).expression();
  sort_of(a);
  return a;
}

Ast parse_set(std::string_view text) { return Parser(text).set_only(); }

bool operator==(const Ast& a, const Ast& b) {
  return a.op == b.op && a.nums == b.nums && a.lo_inf == b.lo_inf && a.hi_inf == b.hi_inf &&
         a.t_point == b.t_point && a.u_point == b.u_point && a.kids == b.kids;
}

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::Set: return "set";
    case Sort::Fn: return "function";
    case Sort::Dist: return "distribution";
    case Sort::Fn2: return "two-variable function";
    case Sort::Dist2: return "two-variable distribution";
  }
  return "?";
}

namespace {

[[noreturn]] void type_error(const Ast& a, const std::string& msg) {
  throw Error(ErrorCode::Type, "type error at column " + std::to_string(a.span.begin + 1) + ": " + msg);
}

Sort require(const Ast& a, std::initializer_list<Sort> allowed, const char* what) {
  const Sort s = sort_of(a);
  for (Sort x : allowed) {
    if (x == s) return s;
  }
  type_error(a, std::string(what) + " does not accept a " + std::string(sort_name(s)));
}

}  // namespace

Sort sort_of(const Ast& a) {
  switch (a.op) {
    case Op::SetLit:
    case Op::Prog:
    case Op::ProgP:
    case Op::ProgM:
      return Sort::Set;
    case Op::SetUnion:
    case Op::SetSymDiff:
      require(a.kids[0], {Sort::Set}, "set operator");
      require(a.kids[1], {Sort::Set}, "set operator");
      return Sort::Set;
    case Op::Zero:
    case Op::One:
    case Op::ChiInterval:
    case Op::ChiPoint:
      return Sort::Fn;
    case Op::LimFL:
    case Op::LimFR:
    case Op::DerivFL:
    case Op::DerivFR:
      return require(a.kids[0], {Sort::Fn}, "function limit");
    case Op::Sum: {
      const Sort l = require(a.kids[0], {Sort::Fn, Sort::Dist, Sort::Fn2, Sort::Dist2}, "'+'");
      const Sort r = sort_of(a.kids[1]);
      if (l != r) type_error(a, "'+' of a " + std::string(sort_name(l)) + " and a " + std::string(sort_name(r)));
      return l;
    }
    case Op::Product: {
      const Sort l = require(a.kids[0], {Sort::Fn, Sort::Fn2}, "'*'");
      if (sort_of(a.kids[1]) != l) type_error(a, "'*' needs two functions of the same arity");
      return l;
    }
    case Op::Translate:
      return require(a.kids[0], {Sort::Fn, Sort::Dist}, "TR");
    case Op::Reg:
    case Op::DeltaL:
    case Op::DeltaR:
      require(a.kids[0], {Sort::Set}, "REG/DELTAL/DELTAR");
      return Sort::Dist;
    case Op::Delta:
    case Op::Parity:
    case Op::IntDL:
    case Op::IntDR:
      return Sort::Dist;
    case Op::Dot:
      require(a.kids[0], {Sort::Fn}, "left side of '.'");
      require(a.kids[1], {Sort::Dist}, "right side of '.'");
      return Sort::Dist;
    case Op::LimL:
    case Op::LimR:
    case Op::DerivL:
    case Op::DerivR:
      return require(a.kids[0], {Sort::Dist}, "LIM/D");
    case Op::Tensor: {
      const Sort l = require(a.kids[0], {Sort::Fn, Sort::Dist}, "'(x)'");
      if (sort_of(a.kids[1]) != l) type_error(a, "'(x)' needs two functions or two distributions");
      return l == Sort::Fn ? Sort::Fn2 : Sort::Dist2;
    }
    case Op::Conv:
      require(a.kids[0], {Sort::Dist}, "'(*)'");
      require(a.kids[1], {Sort::Dist}, "'(*)'");
      return Sort::Dist;
    case Op::Chi2:
      return Sort::Fn2;
    case Op::Translate2:
      return require(a.kids[0], {Sort::Fn2, Sort::Dist2}, "TR2");
    case Op::Swap:
      return require(a.kids[0], {Sort::Fn2}, "SWAP");
    case Op::LimTL:
    case Op::LimTR:
    case Op::LimUL:
    case Op::LimUR:
    case Op::DerivTL:
    case Op::DerivTR:
    case Op::DerivUL:
    case Op::DerivUR:
      return require(a.kids[0], {Sort::Dist2}, "partial limit/derivative");
  }
  type_error(a, "unknown node");
}

}  // namespace bdist::dsl
