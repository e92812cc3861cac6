#include "bdist/dsl.hpp"

namespace bdist::dsl {

using Op = Ast::Op;

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Sum: return 1;
    case Op::Tensor:
    case Op::Conv: return 2;
    case Op::Product:
    case Op::Dot: return 3;
    default: return 4;
  }
}

const char* prefix_text(Op op) {
  switch (op) {
    case Op::LimFL: return "LIMF-(";
    case Op::LimFR: return "LIMF+(";
    case Op::DerivFL: return "DF-(";
    case Op::DerivFR: return "DF+(";
    case Op::LimL: return "LIM-(";
    case Op::LimR: return "LIM+(";
    case Op::DerivL: return "D-(";
    case Op::DerivR: return "D+(";
    case Op::LimTL: return "LIMT-(";
    case Op::LimTR: return "LIMT+(";
    case Op::LimUL: return "LIMU-(";
    case Op::LimUR: return "LIMU+(";
    case Op::DerivTL: return "DT-(";
    case Op::DerivTR: return "DT+(";
    case Op::DerivUL: return "DU-(";
    case Op::DerivUR: return "DU+(";
    case Op::Swap: return "SWAP(";
    default: return nullptr;
  }
}

const char* infix_text(Op op) {
  switch (op) {
    case Op::Sum: return " + ";
    case Op::Product: return " * ";
    case Op::Dot: return " . ";
    case Op::Tensor: return " (x) ";
    case Op::Conv: return " (*) ";
    default: return nullptr;
  }
}

void print(const Ast& a, int min_prec, std::string& out);

void print_set(const Ast& a, bool nested, std::string& out) {
  switch (a.op) {
    case Op::SetLit: {
      out += '{';
      for (std::size_t i = 0; i < a.nums.size(); ++i) {
        if (i) out += ", ";
        out += a.nums[i].str();
      }
      out += '}';
      return;
    }
    case Op::Prog:
    case Op::ProgP:
    case Op::ProgM:
      out += a.op == Op::Prog ? "PROG(" : (a.op == Op::ProgP ? "PROGP(" : "PROGM(");
      out += a.nums[0].str() + ", " + a.nums[1].str() + ")";
      return;
    default:
      if (nested) out += '(';
      print_set(a.kids[0], false, out);
      out += a.op == Op::SetUnion ? " U " : " D ";
      print_set(a.kids[1], true, out);
      if (nested) out += ')';
      return;
  }
}

void print_cell(const Ast& a, bool point, std::size_t at, std::string& out) {
  if (point) {
    out += "{" + a.nums[at].str() + "}";
  } else {
    out += "(" + a.nums[at].str() + ", " + a.nums[at + 1].str() + ")";
  }
}

void print(const Ast& a, int min_prec, std::string& out) {
  const int p = precedence(a.op);
  if (const char* infix = infix_text(a.op)) {
    if (p < min_prec) out += '(';
    print(a.kids[0], p, out);
    out += infix;
    print(a.kids[1], p + 1, out);
    if (p < min_prec) out += ')';
    return;
  }
  if (const char* pre = prefix_text(a.op)) {
    out += pre;
    print(a.kids[0], 0, out);
    out += ')';
    return;
  }
  switch (a.op) {
    case Op::SetLit:
    case Op::Prog:
    case Op::ProgP:
    case Op::ProgM:
    case Op::SetUnion:
    case Op::SetSymDiff:
      print_set(a, false, out);
      return;
    case Op::Zero: out += '0'; return;
    case Op::One: out += '1'; return;
    case Op::ChiInterval:
      out += "CHI{(";
      out += a.lo_inf ? "-inf" : a.nums[0].str();
      out += ", ";
      out += a.hi_inf ? "inf" : a.nums[1].str();
      out += ")}";
      return;
    case Op::ChiPoint: out += "CHI{" + a.nums[0].str() + "}"; return;
    case Op::Translate:
      out += "TR(" + a.nums[0].str() + ", ";
      print(a.kids[0], 0, out);
      out += ')';
      return;
    case Op::Translate2:
      out += "TR2(" + a.nums[0].str() + ", " + a.nums[1].str() + ", ";
      print(a.kids[0], 0, out);
      out += ')';
      return;
    case Op::Reg:
    case Op::DeltaL:
    case Op::DeltaR:
      out += a.op == Op::Reg ? "REG" : (a.op == Op::DeltaL ? "DELTAL" : "DELTAR");
      if (a.kids[0].op != Op::SetLit) out += ' ';
      print_set(a.kids[0], false, out);
      return;
    case Op::Delta: out += "DELTA(" + a.nums[0].str() + ")"; return;
    case Op::Parity: out += "PARITY"; return;
    case Op::IntDL: out += "INTDL"; return;
    case Op::IntDR: out += "INTDR"; return;
    case Op::Chi2: {
      out += "CHI2{";
      print_cell(a, a.t_point, 0, out);
      out += 'x';
      print_cell(a, a.u_point, a.t_point ? 1 : 2, out);
      out += '}';
      return;
    }
    default:
      return;
  }
}

Ast node(Op op, std::vector<Ast> kids = {}, std::vector<Rational> nums = {}) {
  Ast a;
  a.op = op;
  a.kids = std::move(kids);
  a.nums = std::move(nums);
  return a;
}

Ast sum_of(std::vector<Ast> terms, Ast empty) {
  if (terms.empty()) return empty;
  Ast acc = std::move(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) acc = node(Op::Sum, {std::move(acc), std::move(terms[i])});
  return acc;
}

Ast set_ast(const LocallyFiniteSet& s) {
  if (s.is_finite()) return node(Op::SetLit, {}, s.corrections());
  std::vector<Ast> parts;
  for (const auto& p : s.backbone()) {
    const Op op = p.range == ProgressionRange::AllIntegers
                      ? Op::Prog
                      : (p.range == ProgressionRange::NonNegative ? Op::ProgP : Op::ProgM);
    parts.push_back(node(op, {}, {p.offset, p.period}));
  }
  Ast acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = node(Op::SetUnion, {std::move(acc), std::move(parts[i])});
  if (!s.corrections().empty()) acc = node(Op::SetSymDiff, {std::move(acc), node(Op::SetLit, {}, s.corrections())});
  return acc;
}

Ast fn_ast(const StepFunction& f) {
  std::vector<Ast> terms;
  for (const auto& c : support_descriptor(f).components) {
    if (c.kind == SupportComponent::Kind::Point) {
      terms.push_back(node(Op::ChiPoint, {}, {*c.lo}));
      continue;
    }
    if (!c.lo && !c.hi) {
      terms.push_back(node(Op::One));
      continue;
    }
    Ast a = node(Op::ChiInterval, {}, {c.lo.value_or(Rational(0)), c.hi.value_or(Rational(0))});
    a.lo_inf = !c.lo;
    a.hi_inf = !c.hi;
    terms.push_back(std::move(a));
  }
  return sum_of(std::move(terms), node(Op::Zero));
}

Ast dist_ast(const Distribution& d) {
  using K = Distribution::Kind;
  switch (d.kind()) {
    case K::Regular: return node(Op::Reg, {set_ast(d.support())});
    case K::DeltaLeft: return node(Op::DeltaL, {set_ast(d.support())});
    case K::DeltaRight: return node(Op::DeltaR, {set_ast(d.support())});
    case K::Parity: return node(Op::Parity);
    case K::IntDerivLeft: return node(Op::IntDL);
    case K::IntDerivRight: return node(Op::IntDR);
    case K::SpikeConvolution:
      return node(Op::Conv, {node(Op::Reg, {set_ast(d.support())}), node(Op::Reg, {set_ast(d.second_support())})});
    case K::Xor: return node(Op::Sum, {dist_ast(d.lhs()), dist_ast(d.rhs())});
    case K::Scale: return node(Op::Dot, {fn_ast(d.multiplier()), dist_ast(d.child())});
    case K::Translate: return node(Op::Translate, {dist_ast(d.child())}, {d.shift()});
    case K::LimitLeft: return node(Op::LimL, {dist_ast(d.child())});
    case K::LimitRight: return node(Op::LimR, {dist_ast(d.child())});
    case K::DerivLeft: return node(Op::DerivL, {dist_ast(d.child())});
    case K::DerivRight: return node(Op::DerivR, {dist_ast(d.child())});
  }
  return node(Op::Parity);
}

Ast fn2_ast(const TestFunction2& f) {
  std::vector<Ast> terms;
  const auto& tb = f.t_breakpoints();
  const auto& ub = f.u_breakpoints();
  for (std::size_t i = 1; i + 1 < f.rows(); ++i) {
    for (std::size_t j = 1; j + 1 < f.cols(); ++j) {
      if (!f.cell(i, j)) continue;
      Ast a = node(Op::Chi2);
      a.t_point = i % 2 == 1;
      a.u_point = j % 2 == 1;
      if (a.t_point) {
        a.nums.push_back(tb[i / 2]);
      } else {
        a.nums.push_back(tb[i / 2 - 1]);
        a.nums.push_back(tb[i / 2]);
      }
      if (a.u_point) {
        a.nums.push_back(ub[j / 2]);
      } else {
        a.nums.push_back(ub[j / 2 - 1]);
        a.nums.push_back(ub[j / 2]);
      }
      terms.push_back(std::move(a));
    }
  }
  return sum_of(std::move(terms), node(Op::Tensor, {node(Op::Zero), node(Op::Zero)}));
}

Ast dist2_ast(const Distribution2& d) {
  using K = Distribution2::Kind;
  const auto& n = d.node();
  switch (n.kind) {
    case K::Tensor: return node(Op::Tensor, {dist_ast(n.f), dist_ast(n.g)});
    case K::Regular2: {
      std::vector<Ast> terms;
      for (const auto& [t, u] : n.pairs) {
        terms.push_back(node(Op::Tensor, {node(Op::Reg, {node(Op::SetLit, {}, {t})}),
                                          node(Op::Reg, {node(Op::SetLit, {}, {u})})}));
      }
      for (const auto& [s, r] : n.products) {
        terms.push_back(node(Op::Tensor, {node(Op::Reg, {set_ast(s)}), node(Op::Reg, {set_ast(r)})}));
      }
      const Ast empty = node(Op::Reg, {node(Op::SetLit)});
      return sum_of(std::move(terms), node(Op::Tensor, {empty, empty}));
    }
    case K::Xor2: return node(Op::Sum, {dist2_ast(d.lhs()), dist2_ast(d.rhs())});
    case K::Translate2: return node(Op::Translate2, {dist2_ast(d.child())}, {n.tau, n.nu});
    case K::PartialLimit:
    case K::PartialDeriv: {
      const bool lim = n.kind == K::PartialLimit;
      const bool left = n.side == Side::Left;
      Op op;
      if (n.axis == Axis::T) {
        op = lim ? (left ? Op::LimTL : Op::LimTR) : (left ? Op::DerivTL : Op::DerivTR);
      } else {
        op = lim ? (left ? Op::LimUL : Op::LimUR) : (left ? Op::DerivUL : Op::DerivUR);
      }
      return node(op, {dist2_ast(d.child())});
    }
  }
  return node(Op::Zero);
}

}  // namespace

std::string print_canonical(const Ast& ast) {
  std::string out;
  print(ast, 0, out);
  return out;
}

std::string to_text(const LocallyFiniteSet& s) { return print_canonical(set_ast(s)); }
std::string to_text(const StepFunction& f) { return print_canonical(fn_ast(f)); }
std::string to_text(const TestFunction& f) { return print_canonical(fn_ast(f.fn())); }
std::string to_text(const Distribution& d) { return print_canonical(dist_ast(d)); }
std::string to_text(const TestFunction2& f) { return print_canonical(fn2_ast(f)); }
std::string to_text(const Distribution2& d) { return print_canonical(dist2_ast(d)); }

}  // namespace bdist::dsl
