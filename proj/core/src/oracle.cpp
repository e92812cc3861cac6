#include "bdist/oracle.hpp"

#include <algorithm>

namespace bdist {

using Kind = Distribution::Kind;

Generator::Generator(const CasePanel& panel, std::uint64_t stream) : panel_(panel) {
  std::seed_seq seq{static_cast<std::uint32_t>(panel.seed), static_cast<std::uint32_t>(panel.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

Rational Generator::abscissa() {
  const long den = std::uniform_int_distribution<long>(1, panel_.max_denominator)(rng_);
  const long bound = panel_.max_magnitude * den;
  const long num = std::uniform_int_distribution<long>(-bound, bound)(rng_);
  return Rational(BigInt(num), BigInt(den));
}

Rational Generator::shift() {
  static const long dens[] = {1, 2, 4, 8};
  const long den = dens[below(4)];
  const long num = std::uniform_int_distribution<long>(-2 * den, 2 * den)(rng_);
  return Rational(BigInt(num), BigInt(den));
}

std::vector<Rational> Generator::distinct_abscissas(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t tries = 0; out.size() < n && tries < 8 * n + 8; ++tries) {
    const Rational x = abscissa();
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StepFunction Generator::step_function() {
  auto bps = distinct_abscissas(below(panel_.max_breakpoints + 1));
  std::vector<Bit> pts;
  std::vector<Bit> ivs;
  for (std::size_t i = 0; i < bps.size(); ++i) pts.emplace_back(coin());
  for (std::size_t i = 0; i <= bps.size(); ++i) ivs.emplace_back(coin());
  return StepFunction(std::move(bps), std::move(pts), std::move(ivs));
}

TestFunction Generator::test_function() {
  auto bps = distinct_abscissas(below(panel_.max_breakpoints + 1));
  std::vector<Bit> pts;
  std::vector<Bit> ivs{Bit::zero()};
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.emplace_back(coin());
    ivs.emplace_back(i + 1 < bps.size() && coin());
  }
  return TestFunction(StepFunction(std::move(bps), std::move(pts), std::move(ivs)));
}

TestFunction2 Generator::test_function2() {
  auto tb = distinct_abscissas(below(4));
  auto ub = distinct_abscissas(below(4));
  const std::size_t rows = 2 * tb.size() + 1;
  const std::size_t cols = 2 * ub.size() + 1;
  std::vector<Bit> cells(rows * cols);
  for (std::size_t i = 1; i + 1 < rows; ++i) {
    for (std::size_t j = 1; j + 1 < cols; ++j) cells[i * cols + j] = Bit(coin());
  }
  return TestFunction2(std::move(tb), std::move(ub), std::move(cells));
}

LocallyFiniteSet Generator::finite_set(std::size_t max_size) { return LocallyFiniteSet(distinct_abscissas(below(max_size + 1))); }

LocallyFiniteSet Generator::spike_train() {
  static const Rational periods[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  auto prog = [&](ProgressionRange range) {
    return LocallyFiniteSet::progression(abscissa(), periods[below(5)], range);
  };
  auto range = [&] {
    static const ProgressionRange r[] = {ProgressionRange::AllIntegers, ProgressionRange::NonNegative,
                                         ProgressionRange::NonPositive};
    return r[below(3)];
  };
  switch (below(6)) {
    case 0:
    case 1: return finite_set();
    case 2: return prog(range());
    case 3: return prog(range()).sym_diff(finite_set(3));
    case 4: return prog(range()).unite(prog(range()));
    default: return prog(range()).sym_diff(prog(range()));
  }
}

Distribution Generator::distribution(int depth) {
  if (depth <= 0 || below(4) == 0) {
    switch (below(10)) {
      case 0:
      case 1:
      case 2: return Distribution::regular(spike_train());
      case 3: return Distribution::delta(abscissa());
      case 4: return Distribution::delta_left(spike_train());
      case 5: return Distribution::delta_right(spike_train());
      case 6: return Distribution::parity();
      case 7: return Distribution::int_deriv_left();
      case 8: return Distribution::int_deriv_right();
      default: return Distribution::regular(finite_set());
    }
  }
  switch (below(7)) {
    case 0: {
      auto a = distribution(depth - 1);
      return raw::xor_dist(a, distribution(depth - 1));
    }
    case 1: {
      auto psi = step_function();
      return raw::scale_dist(psi, distribution(depth - 1));
    }
    case 2: {
      auto tau = shift();
      return raw::translate_dist(distribution(depth - 1), tau);
    }
    case 3: return raw::limit_left(distribution(depth - 1));
    case 4: return raw::limit_right(distribution(depth - 1));
    case 5: return raw::deriv_left_dist(distribution(depth - 1));
    default: return raw::deriv_right_dist(distribution(depth - 1));
  }
}

Distribution Generator::atom_combination(std::size_t max_atoms) {
  Distribution out;
  const std::size_t n = 1 + below(max_atoms);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a = shift();
    switch (below(3)) {
      case 0: out = xor_dist(out, Distribution::delta(a)); break;
      case 1: out = xor_dist(out, Distribution::delta_left(LocallyFiniteSet{a})); break;
      default: out = xor_dist(out, Distribution::delta_right(LocallyFiniteSet{a})); break;
    }
  }
  return out;
}

dsl::Ast Generator::ast(dsl::Sort sort, int depth) {
  using Op = dsl::Ast::Op;
  using dsl::Sort;
  auto make = [](Op op, std::vector<dsl::Ast> kids = {}, std::vector<Rational> nums = {}) {
    dsl::Ast a;
    a.op = op;
    a.kids = std::move(kids);
    a.nums = std::move(nums);
    return a;
  };
  auto interval = [&] {
    auto ends = distinct_abscissas(2);
    while (ends.size() < 2) ends = distinct_abscissas(2);
    return ends;
  };
  const bool leaf = depth <= 0 || coin();
  switch (sort) {
    case Sort::Set: {
      if (leaf) {
        const std::size_t k = below(4);
        if (k == 0) return make(Op::SetLit, {}, distinct_abscissas(below(4)));
        const Op op = k == 1 ? Op::Prog : (k == 2 ? Op::ProgP : Op::ProgM);
        return make(op, {}, {abscissa(), Rational(BigInt(1 + static_cast<long>(below(6))), BigInt(2))});
      }
      return make(coin() ? Op::SetUnion : Op::SetSymDiff, {ast(Sort::Set, depth - 1), ast(Sort::Set, depth - 1)});
    }
    case Sort::Fn: {
      if (leaf) {
        switch (below(5)) {
          case 0: return make(coin() ? Op::Zero : Op::One);
          case 1: return make(Op::ChiPoint, {}, {abscissa()});
          case 2: {
            dsl::Ast a = make(Op::ChiInterval, {}, interval());
            if (below(4) == 0) {
              (coin() ? a.lo_inf : a.hi_inf) = true;
              (a.lo_inf ? a.nums[0] : a.nums[1]) = Rational(0);
            }
            return a;
          }
          default: return make(Op::ChiInterval, {}, interval());
        }
      }
      switch (below(5)) {
        case 0: return make(Op::Sum, {ast(Sort::Fn, depth - 1), ast(Sort::Fn, depth - 1)});
        case 1: return make(Op::Product, {ast(Sort::Fn, depth - 1), ast(Sort::Fn, depth - 1)});
        case 2: return make(Op::Translate, {ast(Sort::Fn, depth - 1)}, {shift()});
        case 3: return make(coin() ? Op::LimFL : Op::LimFR, {ast(Sort::Fn, depth - 1)});
        default: return make(coin() ? Op::DerivFL : Op::DerivFR, {ast(Sort::Fn, depth - 1)});
      }
    }
    case Sort::Dist: {
      if (leaf) {
        switch (below(7)) {
          case 0: return make(Op::Reg, {ast(Sort::Set, 1)});
          case 1: return make(Op::Delta, {}, {abscissa()});
          case 2: return make(Op::DeltaL, {ast(Sort::Set, 1)});
          case 3: return make(Op::DeltaR, {ast(Sort::Set, 1)});
          case 4: return make(Op::Parity);
          case 5: return make(Op::IntDL);
          default: return make(Op::IntDR);
        }
      }
      switch (below(8)) {
        case 0: return make(Op::Sum, {ast(Sort::Dist, depth - 1), ast(Sort::Dist, depth - 1)});
        case 1: return make(Op::Dot, {ast(Sort::Fn, depth - 1), ast(Sort::Dist, depth - 1)});
        case 2: return make(Op::Translate, {ast(Sort::Dist, depth - 1)}, {shift()});
        case 3: return make(Op::LimL, {ast(Sort::Dist, depth - 1)});
        case 4: return make(Op::LimR, {ast(Sort::Dist, depth - 1)});
        case 5: return make(Op::DerivL, {ast(Sort::Dist, depth - 1)});
        case 6: return make(Op::DerivR, {ast(Sort::Dist, depth - 1)});
        default: return make(Op::Conv, {ast(Sort::Dist, depth - 1), ast(Sort::Dist, depth - 1)});
      }
    }
    case Sort::Fn2: {
      if (leaf) {
        dsl::Ast a = make(Op::Chi2);
        a.t_point = coin();
        a.u_point = coin();
        for (bool point : {a.t_point, a.u_point}) {
          if (point) {
            a.nums.push_back(abscissa());
          } else {
            for (auto& x : interval()) a.nums.push_back(x);
          }
        }
        return a;
      }
      switch (below(5)) {
        case 0: return make(Op::Sum, {ast(Sort::Fn2, depth - 1), ast(Sort::Fn2, depth - 1)});
        case 1: return make(Op::Product, {ast(Sort::Fn2, depth - 1), ast(Sort::Fn2, depth - 1)});
        case 2: return make(Op::Translate2, {ast(Sort::Fn2, depth - 1)}, {shift(), shift()});
        case 3: return make(Op::Swap, {ast(Sort::Fn2, depth - 1)});
        default: return make(Op::Tensor, {ast(Sort::Fn, depth - 1), ast(Sort::Fn, depth - 1)});
      }
    }
    case Sort::Dist2: {
      if (leaf) return make(Op::Tensor, {ast(Sort::Dist, depth - 1), ast(Sort::Dist, depth - 1)});
      static const Op partials[] = {Op::LimTL, Op::LimTR, Op::LimUL, Op::LimUR,
                                    Op::DerivTL, Op::DerivTR, Op::DerivUL, Op::DerivUR};
      switch (below(3)) {
        case 0: return make(Op::Sum, {ast(Sort::Dist2, depth - 1), ast(Sort::Dist2, depth - 1)});
        case 1: return make(Op::Translate2, {ast(Sort::Dist2, depth - 1)}, {shift(), shift()});
        default: return make(partials[below(8)], {ast(Sort::Dist2, depth - 1)});
      }
    }
  }
  return make(Op::Zero);
}

// ---------------------------------------------------------------------------
// Independent evaluator.

namespace {

std::vector<Rational> members(const LocallyFiniteSet& s, const Rational& lo, const Rational& hi) {
  if (hi < lo) return {};
  return s.enumerate(Window(lo, hi));
}

// Pair sums of two spike trains inside [lo, hi], with multiplicity.
std::vector<Rational> pair_sums(const LocallyFiniteSet& f, const LocallyFiniteSet& g, const Rational& lo,
                                const Rational& hi) {
  std::vector<Rational> out;
  if (f.empty() || g.empty()) return out;
  Rational xlo;
  Rational xhi;
  if (f.is_finite()) {
    xlo = *f.min();
    xhi = *f.max();
  } else if (g.is_finite()) {
    xlo = lo - *g.max();
    xhi = hi - *g.min();
  } else if (f.min() && g.min()) {
    xlo = *f.min();
    xhi = hi - *g.min();
  } else if (f.max() && g.max()) {
    xlo = lo - *g.max();
    xhi = *f.max();
  } else {
    throw Error(ErrorCode::ConvolutionUndefined, "pair sums are not locally finite");
  }
  for (const auto& x : members(f, xlo, xhi)) {
    for (const auto& y : members(g, lo - x, hi - x)) out.push_back(x + y);
  }
  return out;
}

void marks(const Distribution& f, const Rational& lo, const Rational& hi, std::vector<Rational>& out) {
  const auto& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight:
      for (const auto& x : members(n.set, lo, hi)) out.push_back(x);
      return;
    case Kind::SpikeConvolution:
      for (const auto& x : pair_sums(n.set, n.set2, lo, hi)) out.push_back(x);
      return;
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return;
    case Kind::Xor:
      marks(f.lhs(), lo, hi, out);
      marks(f.rhs(), lo, hi, out);
      return;
    case Kind::Scale:
      out.insert(out.end(), n.psi.breakpoints().begin(), n.psi.breakpoints().end());
      marks(f.child(), lo, hi, out);
      return;
    case Kind::Translate: {
      std::vector<Rational> inner;
      marks(f.child(), lo - n.tau, hi - n.tau, inner);
      for (auto& x : inner) out.push_back(x + n.tau);
      return;
    }
    default:
      marks(f.child(), lo - 2, hi + 2, out);
      return;
  }
}

// Smallest positive distance from any anchor to a mark of f, capped at 1.
Rational gap_near(const Distribution& f, std::initializer_list<Rational> anchors) {
  const Rational lo = *std::min_element(anchors.begin(), anchors.end()) - 1;
  const Rational hi = *std::max_element(anchors.begin(), anchors.end()) + 1;
  std::vector<Rational> m;
  marks(f, lo, hi, m);
  Rational gap(1);
  for (const auto& a : anchors) {
    for (const auto& x : m) {
      const Rational d = (x - a).abs();
      if (d.sign() > 0 && d < gap) gap = d;
    }
  }
  return gap;
}

Bit general(const Distribution& f, const TestFunction& phi);
Bit on_point(const Distribution& f, const Rational& t);
Bit on_open(const Distribution& f, const Rational& a, const Rational& b);

template <typename Eval>
Bit settle(const Rational& gap, Eval&& at) {
  const Bit v = at(gap / 3);
  if (v != at(gap / 5)) throw Error(ErrorCode::LimitNotStabilized, "oracle limit did not settle");
  return v;
}

Bit parity_of_count(std::size_t n) { return Bit(n % 2 == 1); }

Bit on_point(const Distribution& f, const Rational& t) {
  const auto& n = f.node();
  switch (n.kind) {
    case Kind::Regular: return Bit(n.set.contains(t));
    case Kind::DeltaLeft:
    case Kind::DeltaRight: return Bit::zero();
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight: return Bit::one();
    case Kind::SpikeConvolution: return parity_of_count(pair_sums(n.set, n.set2, t, t).size());
    case Kind::Xor: return on_point(f.lhs(), t) ^ on_point(f.rhs(), t);
    case Kind::Scale: return n.psi.eval(t) * on_point(f.child(), t);
    case Kind::Translate: return on_point(f.child(), t - n.tau);
    case Kind::LimitLeft:
    case Kind::LimitRight:
    case Kind::DerivLeft:
    case Kind::DerivRight: {
      const bool left = n.kind == Kind::LimitLeft || n.kind == Kind::DerivLeft;
      const Distribution x = f.child();
      // The translated indicator chi({t})(s - e) sits at t + e.
      const Bit lim = settle(gap_near(x, {t}), [&](const Rational& e) { return on_point(x, left ? t + e : t - e); });
      const bool deriv = n.kind == Kind::DerivLeft || n.kind == Kind::DerivRight;
      return deriv ? lim ^ on_point(x, t) : lim;
    }
  }
  return Bit::zero();
}

Bit on_open(const Distribution& f, const Rational& a, const Rational& b) {
  const auto& n = f.node();
  auto count_inside = [&](bool with_lo, bool with_hi) {
    std::size_t c = 0;
    for (const auto& x : members(n.set, a, b)) {
      if ((x == a && !with_lo) || (x == b && !with_hi)) continue;
      ++c;
    }
    return parity_of_count(c);
  };
  switch (n.kind) {
    case Kind::Regular: return count_inside(false, false);
    case Kind::DeltaLeft: return count_inside(false, true);
    case Kind::DeltaRight: return count_inside(true, false);
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight: return Bit::one();
    case Kind::SpikeConvolution: {
      std::size_t c = 0;
      for (const auto& s : pair_sums(n.set, n.set2, a, b)) c += (s != a && s != b) ? 1 : 0;
      return parity_of_count(c);
    }
    case Kind::Xor: return on_open(f.lhs(), a, b) ^ on_open(f.rhs(), a, b);
    case Kind::Scale: return general(f.child(), scale(n.psi, TestFunction::chi_interval(a, b)));
    case Kind::Translate: return on_open(f.child(), a - n.tau, b - n.tau);
    case Kind::LimitLeft:
    case Kind::LimitRight:
    case Kind::DerivLeft:
    case Kind::DerivRight: {
      const bool left = n.kind == Kind::LimitLeft || n.kind == Kind::DerivLeft;
      const Distribution x = f.child();
      const Bit lim = settle(gap_near(x, {a, b}), [&](const Rational& e) {
        const Rational s = left ? e : -e;
        return on_open(x, a + s, b + s);
      });
      const bool deriv = n.kind == Kind::DerivLeft || n.kind == Kind::DerivRight;
      return deriv ? lim ^ on_open(x, a, b) : lim;
    }
  }
  return Bit::zero();
}

Bit general(const Distribution& f, const TestFunction& phi) {
  const auto& bps = phi.breakpoints();
  Bit acc;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (phi.eval(bps[i])) acc ^= on_point(f, bps[i]);
    if (i + 1 < bps.size() && phi.eval(midpoint(bps[i], bps[i + 1]))) acc ^= on_open(f, bps[i], bps[i + 1]);
  }
  return acc;
}

}  // namespace

Bit apply_oracle(const Distribution& f, const TestFunction& phi) { return general(f, phi); }

Bit pair_parity(const LocallyFiniteSet& f, const LocallyFiniteSet& g, const TestFunction& phi) {
  if (!f.is_finite() || !g.is_finite()) throw std::invalid_argument("pair_parity needs finite sets");
  Bit acc;
  if (f.empty() || g.empty()) return acc;
  const auto xs = f.enumerate(Window(*f.min(), *f.max()));
  const auto ys = g.enumerate(Window(*g.min(), *g.max()));
  for (const auto& x : xs) {
    for (const auto& y : ys) acc ^= phi.eval(x + y);
  }
  return acc;
}

}  // namespace bdist
