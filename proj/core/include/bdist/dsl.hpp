#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bdist/dist.hpp"
#include "bdist/tensor_conv.hpp"

namespace bdist::dsl {

/// Value sort of an expression.
enum class Sort { Set, Fn, Dist, Fn2, Dist2 };

std::string_view sort_name(Sort s);

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Syntax tree of the expression language. Parentheses are not kept: the printer
/// re-derives them from precedence.
struct Ast {
  enum class Op {
    // sets
    SetLit,      // nums = sorted members
    Prog,        // nums = {offset, period}
    ProgP,
    ProgM,
    SetUnion,    // "U"
    SetSymDiff,  // "D"
    // one-variable functions
    Zero,
    One,
    ChiInterval,  // nums = {a, b}; lo_inf / hi_inf mark -inf / inf ends
    ChiPoint,     // nums = {t}
    Sum,          // "+", any sort
    Product,      // "*", functions of one or two variables
    Translate,    // "TR(tau, x)", nums = {tau}
    LimFL,
    LimFR,
    DerivFL,
    DerivFR,
    // distributions
    Reg,
    Delta,  // nums = {t}
    DeltaL,
    DeltaR,
    Parity,
    IntDL,
    IntDR,
    Dot,  // "psi . f"
    LimL,
    LimR,
    DerivL,
    DerivR,
    Tensor,  // "(x)": distributions, or two test functions into a function of two variables
    Conv,    // "(*)"
    // two variables
    Chi2,        // nums = cell ends; t_point / u_point select {t} or (a, b) per axis
    Translate2,  // "TR2(tau, nu, x)"
    Swap,
    LimTL,
    LimTR,
    LimUL,
    LimUR,
    DerivTL,
    DerivTR,
    DerivUL,
    DerivUR,
  };

  Op op = Op::Zero;
  std::vector<Rational> nums;
  bool lo_inf = false;
  bool hi_inf = false;
  bool t_point = false;
  bool u_point = false;
  std::vector<Ast> kids;
  SourceSpan span;

  /// Structural equality; spans are ignored.
  friend bool operator==(const Ast& a, const Ast& b);
};

/// Parses one expression of any sort. Set literals are sorted and deduplicated.
/// Throws Error(Syntax) with the column, Error(ZeroPeriod) or Error(EmptyInterval).
Ast parse(std::string_view text);
/// Parses a bare set expression ("{0, 1}", "PROG(0, 2) D {4}").
Ast parse_set(std::string_view text);

/// Sort of a well-formed tree; throws Error(Type) on a sort mismatch.
Sort sort_of(const Ast& ast);

std::string print_canonical(const Ast& ast);

enum class EvalMode {
  Simplify,  // use the simplifying constructors
  Raw,       // rebuild the tree node for node
};

LocallyFiniteSet eval_set(const Ast& ast);
StepFunction eval_fn(const Ast& ast);
Distribution eval_dist(const Ast& ast, EvalMode mode = EvalMode::Simplify);
TestFunction2 eval_fn2(const Ast& ast);
Distribution2 eval_dist2(const Ast& ast, EvalMode mode = EvalMode::Simplify);

// Canonical text of values. Each parses back to an equal value.
std::string to_text(const LocallyFiniteSet& s);
std::string to_text(const StepFunction& f);
std::string to_text(const TestFunction& f);
std::string to_text(const Distribution& d);
std::string to_text(const TestFunction2& f);
std::string to_text(const Distribution2& d);

inline constexpr std::string_view kHeader = "#bd 1";

/// Header line plus canonical text.
template <typename T>
std::string serialize(const T& value) {
  return std::string(kHeader) + "\n" + to_text(value) + "\n";
}

/// Strips and checks the header (Error(VersionMismatch) on a wrong or missing header).
std::string_view strip_header(std::string_view text);

LocallyFiniteSet deserialize_set(std::string_view text);
StepFunction deserialize_fn(std::string_view text);
TestFunction deserialize_test_fn(std::string_view text);
Distribution deserialize_dist(std::string_view text);
TestFunction2 deserialize_fn2(std::string_view text);
Distribution2 deserialize_dist2(std::string_view text);

}  // namespace bdist::dsl
