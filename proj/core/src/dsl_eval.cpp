#include "bdist/dsl.hpp"

namespace bdist::dsl {

using Op = Ast::Op;

namespace {

void expect_sort(const Ast& a, Sort want) {
  const Sort got = sort_of(a);
  if (got != want) {
    throw Error(ErrorCode::Type, "expected a " + std::string(sort_name(want)) + ", got a " + std::string(sort_name(got)));
  }
}

TestFunction2::AxisCell axis_cell(const Ast& a, bool point, std::size_t at) {
  return point ? TestFunction2::AxisCell::point(a.nums[at]) : TestFunction2::AxisCell::interval(a.nums[at], a.nums[at + 1]);
}

}  // namespace

LocallyFiniteSet eval_set(const Ast& a) {
  switch (a.op) {
    case Op::SetLit: return LocallyFiniteSet(a.nums);
    case Op::Prog: return LocallyFiniteSet::progression(a.nums[0], a.nums[1], ProgressionRange::AllIntegers);
    case Op::ProgP: return LocallyFiniteSet::progression(a.nums[0], a.nums[1], ProgressionRange::NonNegative);
    case Op::ProgM: return LocallyFiniteSet::progression(a.nums[0], a.nums[1], ProgressionRange::NonPositive);
    case Op::SetUnion: return eval_set(a.kids[0]).unite(eval_set(a.kids[1]));
    case Op::SetSymDiff: return eval_set(a.kids[0]).sym_diff(eval_set(a.kids[1]));
    default: expect_sort(a, Sort::Set);
  }
  return {};
}

StepFunction eval_fn(const Ast& a) {
  switch (a.op) {
    case Op::Zero: return StepFunction(Bit::zero());
    case Op::One: return StepFunction(Bit::one());
    case Op::ChiInterval:
      if (a.lo_inf && a.hi_inf) return StepFunction(Bit::one());
      if (a.lo_inf) return StepFunction::chi_left_ray(a.nums[1]);
      if (a.hi_inf) return StepFunction::chi_right_ray(a.nums[0]);
      return StepFunction::chi_interval(a.nums[0], a.nums[1]);
    case Op::ChiPoint: return StepFunction::chi_point(a.nums[0]);
    case Op::Sum: expect_sort(a, Sort::Fn); return xor_fn(eval_fn(a.kids[0]), eval_fn(a.kids[1]));
    case Op::Product: expect_sort(a, Sort::Fn); return and_fn(eval_fn(a.kids[0]), eval_fn(a.kids[1]));
    case Op::Translate: expect_sort(a, Sort::Fn); return translate_fn(eval_fn(a.kids[0]), a.nums[0]);
    case Op::LimFL: return limit_fn_left(eval_fn(a.kids[0]));
    case Op::LimFR: return limit_fn_right(eval_fn(a.kids[0]));
    case Op::DerivFL: return deriv_left(eval_fn(a.kids[0]));
    case Op::DerivFR: return deriv_right(eval_fn(a.kids[0]));
    default: expect_sort(a, Sort::Fn);
  }
  return StepFunction();
}

Distribution eval_dist(const Ast& a, EvalMode mode) {
  const bool raw_mode = mode == EvalMode::Raw;
  auto kid = [&](std::size_t i) { return eval_dist(a.kids[i], mode); };
  switch (a.op) {
    case Op::Reg: return Distribution::regular(eval_set(a.kids[0]));
    case Op::Delta: return Distribution::delta(a.nums[0]);
    case Op::DeltaL: return Distribution::delta_left(eval_set(a.kids[0]));
    case Op::DeltaR: return Distribution::delta_right(eval_set(a.kids[0]));
    case Op::Parity: return Distribution::parity();
    case Op::IntDL: return Distribution::int_deriv_left();
    case Op::IntDR: return Distribution::int_deriv_right();
    case Op::Sum:
      expect_sort(a, Sort::Dist);
      return raw_mode ? raw::xor_dist(kid(0), kid(1)) : xor_dist(kid(0), kid(1));
    case Op::Dot: {
      const StepFunction psi = eval_fn(a.kids[0]);
      return raw_mode ? raw::scale_dist(psi, kid(1)) : scale_dist(psi, kid(1));
    }
    case Op::Translate:
      expect_sort(a, Sort::Dist);
      return raw_mode ? raw::translate_dist(kid(0), a.nums[0]) : translate_dist(kid(0), a.nums[0]);
    case Op::LimL: return raw_mode ? raw::limit_left(kid(0)) : limit_left(kid(0));
    case Op::LimR: return raw_mode ? raw::limit_right(kid(0)) : limit_right(kid(0));
    case Op::DerivL: return raw_mode ? raw::deriv_left_dist(kid(0)) : deriv_left_dist(kid(0));
    case Op::DerivR: return raw_mode ? raw::deriv_right_dist(kid(0)) : deriv_right_dist(kid(0));
    case Op::Conv: return convolve(kid(0), kid(1));
    default: expect_sort(a, Sort::Dist);
  }
  return {};
}

TestFunction2 eval_fn2(const Ast& a) {
  switch (a.op) {
    case Op::Chi2:
      return TestFunction2::chi(axis_cell(a, a.t_point, 0), axis_cell(a, a.u_point, a.t_point ? 1 : 2));
    case Op::Sum: expect_sort(a, Sort::Fn2); return xor2(eval_fn2(a.kids[0]), eval_fn2(a.kids[1]));
    case Op::Product: expect_sort(a, Sort::Fn2); return and2(eval_fn2(a.kids[0]), eval_fn2(a.kids[1]));
    case Op::Translate2: expect_sort(a, Sort::Fn2); return translate2(eval_fn2(a.kids[0]), a.nums[0], a.nums[1]);
    case Op::Swap: return transpose(eval_fn2(a.kids[0]));
    case Op::Tensor:
      expect_sort(a, Sort::Fn2);
      return TestFunction2::product(TestFunction(eval_fn(a.kids[0])), TestFunction(eval_fn(a.kids[1])));
    default: expect_sort(a, Sort::Fn2);
  }
  return {};
}

Distribution2 eval_dist2(const Ast& a, EvalMode mode) {
  const bool raw_mode = mode == EvalMode::Raw;
  auto kid = [&](std::size_t i) { return eval_dist2(a.kids[i], mode); };
  auto partial = [&](bool lim, Axis axis, Side side) {
    const Distribution2 x = kid(0);
    if (lim) return raw_mode ? raw::partial_limit(x, axis, side) : partial_limit(x, axis, side);
    return raw_mode ? raw::partial_deriv(x, axis, side) : partial_deriv(x, axis, side);
  };
  switch (a.op) {
    case Op::Tensor: {
      expect_sort(a, Sort::Dist2);
      const Distribution f = eval_dist(a.kids[0], mode);
      const Distribution g = eval_dist(a.kids[1], mode);
      return raw_mode ? raw::tensor(f, g) : tensor(f, g);
    }
    case Op::Sum: expect_sort(a, Sort::Dist2); return xor2(kid(0), kid(1));
    case Op::Translate2: expect_sort(a, Sort::Dist2); return translate2(kid(0), a.nums[0], a.nums[1]);
    case Op::LimTL: return partial(true, Axis::T, Side::Left);
    case Op::LimTR: return partial(true, Axis::T, Side::Right);
    case Op::LimUL: return partial(true, Axis::U, Side::Left);
    case Op::LimUR: return partial(true, Axis::U, Side::Right);
    case Op::DerivTL: return partial(false, Axis::T, Side::Left);
    case Op::DerivTR: return partial(false, Axis::T, Side::Right);
    case Op::DerivUL: return partial(false, Axis::U, Side::Left);
    case Op::DerivUR: return partial(false, Axis::U, Side::Right);
    default: expect_sort(a, Sort::Dist2);
  }
  return {};
}

std::string_view strip_header(std::string_view text) {
  const auto nl = text.find('\n');
  std::string_view first = text.substr(0, nl);
  if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
  if (first != kHeader) {
    throw Error(ErrorCode::VersionMismatch, "expected header '" + std::string(kHeader) + "', found '" +
                                                std::string(first.substr(0, 32)) + "'");
  }
  return nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
}

LocallyFiniteSet deserialize_set(std::string_view text) { return eval_set(parse_set(strip_header(text))); }

StepFunction deserialize_fn(std::string_view text) {
  const Ast a = parse(strip_header(text));
  expect_sort(a, Sort::Fn);
  return eval_fn(a);
}

TestFunction deserialize_test_fn(std::string_view text) { return TestFunction(deserialize_fn(text)); }

Distribution deserialize_dist(std::string_view text) {
  const Ast a = parse(strip_header(text));
  expect_sort(a, Sort::Dist);
  return eval_dist(a, EvalMode::Raw);
}

TestFunction2 deserialize_fn2(std::string_view text) {
  const Ast a = parse(strip_header(text));
  expect_sort(a, Sort::Fn2);
  return eval_fn2(a);
}

Distribution2 deserialize_dist2(std::string_view text) {
  const Ast a = parse(strip_header(text));
  expect_sort(a, Sort::Dist2);
  return eval_dist2(a, EvalMode::Raw);
}

}  // namespace bdist::dsl
