#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "bdist/fundamental.hpp"
#include "bdist/oracle.hpp"

namespace bdist {

std::string SuiteReport::json() const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["cases"] = cases;
  j["passed"] = passed;
  j["failed"] = failed;
  j["ok"] = ok();
  if (!counterexample.empty()) j["counterexample"] = counterexample;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

namespace {

using dsl::to_text;
using Describe = std::function<std::string()>;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const Describe& describe) {
    ++r_.cases;
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (r_.counterexample.empty()) r_.counterexample = describe();
  }

  // Runs one case body; a library error counts as a failed check.
  void guarded(const std::function<void()>& body, const Describe& describe) {
    try {
      body();
    } catch (const Error& e) {
      check(false, [&] { return describe() + " raised " + std::string(error_code_name(e.code())) + ": " + e.what(); });
    }
  }

  SuiteReport done(std::string note = {}) {
    r_.note = std::move(note);
    return r_;
  }

 private:
  SuiteReport r_;
};

std::string bits(Bit a, Bit b) { return to_string(a) + " vs " + to_string(b); }

SuiteReport linearity(const CasePanel& p, Generator& g) {
  Tally t("linearity");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(3);
    const TestFunction a = g.test_function();
    const TestFunction b = g.test_function();
    auto what = [&] { return "f=" + to_text(f) + " phi=" + to_text(a) + " chi=" + to_text(b); };
    t.guarded([&] { t.check(apply(f, a ^ b) == (apply(f, a) ^ apply(f, b)), what); }, what);
  }
  return t.done();
}

SuiteReport oracle(const CasePanel& p, Generator& g) {
  Tally t("oracle");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(3);
    const TestFunction phi = g.test_function();
    auto what = [&] { return "f=" + to_text(f) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Bit x = apply(f, phi);
          const Bit y = apply_oracle(f, phi);
          t.check(x == y, [&] { return what() + " apply/oracle " + bits(x, y); });
        },
        what);
  }
  return t.done();
}

SuiteReport iteration(const CasePanel& p, Generator& g) {
  Tally t("iteration");
  using Op = Distribution (*)(const Distribution&);
  struct Identity {
    const char* name;
    Op outer;
    Op inner;
    Op expected;  // applied to f once
  };
  static const Identity ids[] = {
      {"(f-)- = f-", raw::limit_left, raw::limit_left, raw::limit_left},
      {"(f-)+ = f+", raw::limit_right, raw::limit_left, raw::limit_right},
      {"(f+)- = f-", raw::limit_left, raw::limit_right, raw::limit_left},
      {"(f+)+ = f+", raw::limit_right, raw::limit_right, raw::limit_right},
      {"D-D-f = D-f", raw::deriv_left_dist, raw::deriv_left_dist, raw::deriv_left_dist},
      {"D-D+f = D+f", raw::deriv_left_dist, raw::deriv_right_dist, raw::deriv_right_dist},
      {"D+D-f = D-f", raw::deriv_right_dist, raw::deriv_left_dist, raw::deriv_left_dist},
      {"D+D+f = D+f", raw::deriv_right_dist, raw::deriv_right_dist, raw::deriv_right_dist},
  };
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(2);
    const TestFunction phi = g.test_function();
    for (const auto& id : ids) {
      auto what = [&] { return std::string(id.name) + " f=" + to_text(f) + " phi=" + to_text(phi); };
      t.guarded(
          [&] {
            const Bit lhs = apply(id.outer(id.inner(f)), phi);
            const Bit rhs = apply(id.expected(f), phi);
            t.check(lhs == rhs, [&] { return what() + " " + bits(lhs, rhs); });
          },
          what);
    }
  }
  return t.done();
}

SuiteReport limit_counterexample(const CasePanel&, Generator&) {
  Tally t("limit-counterexample");
  const TestFunction phi = TestFunction::chi_interval(0, 1);
  for (std::size_t n : {3, 5, 10, 25}) {
    auto what = [&] { return "n=" + std::to_string(n) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const CounterexampleReport r = translation_limit_counterexample(n, phi);
          bool agree = r.sequence.size() == n;
          for (std::size_t i = 0; agree && i < n; ++i) {
            const Rational tau(BigInt(1), BigInt(static_cast<long>(i + 2)));
            agree = r.sequence[i] == apply_oracle(Distribution::parity(), translate(phi, tau));
          }
          const Bit target = apply_oracle(Distribution::parity(), TestFunction(limit_fn_left(phi.fn())));
          t.check(agree && r.target == target && r.constant && r.sequence_value != target && r.verdict == "refuted",
                  [&] { return what() + " verdict " + r.verdict; });
        },
        what);
  }
  t.guarded(
      [&] {
        const auto r = translation_limit_counterexample(4, TestFunction::zero());
        t.check(r.verdict == "not a counterexample input", [&] { return "phi=0 verdict " + r.verdict; });
      },
      [] { return std::string("phi=0"); });
  return t.done();
}

SuiteReport adjunction(const CasePanel& p, Generator& g) {
  Tally t("adjunction");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(2);
    const TestFunction phi = g.test_function();
    const Rational tau = g.shift();
    const StepFunction psi = g.step_function();
    auto what = [&] {
      return "f=" + to_text(f) + " phi=" + to_text(phi) + " tau=" + tau.str() + " psi=" + to_text(psi);
    };
    t.guarded(
        [&] {
          const Bit moved = apply(f, translate(phi, -tau));
          const Bit a = apply(raw::translate_dist(f, tau), phi);
          const Bit b = apply(translate_dist(f, tau), phi);
          t.check(a == moved && b == moved, [&] { return what() + " translation " + bits(a, moved); });
          const Bit scaled = apply(f, scale(psi, phi));
          const Bit c = apply(raw::scale_dist(psi, f), phi);
          const Bit d = apply(scale_dist(psi, f), phi);
          t.check(c == scaled && d == scaled, [&] { return what() + " scaling " + bits(c, scaled); });
        },
        what);
  }
  return t.done();
}

SuiteReport classification(const CasePanel& p, Generator& g) {
  Tally t("classification");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(2);
    std::vector<TestFunction> phis;
    for (int k = 0; k < 4; ++k) phis.push_back(g.test_function());
    auto what = [&] { return "f=" + to_text(f); };
    t.guarded(
        [&] {
          const auto form = atom_form(f);
          const RegularityClass cls = classify_regularity(f);
          bool ok = true;
          if (form) {
            const Distribution rebuilt = from_atoms(*form);
            for (const auto& phi : phis) ok = ok && apply(rebuilt, phi) == apply(f, phi);
            const bool regular = form->left.empty() && form->right.empty() && !form->parity;
            ok = ok && (cls.kind == RegularityClass::Kind::Regular) == regular;
          }
          if (cls.kind == RegularityClass::Kind::Regular) {
            const Distribution reg = Distribution::regular(cls.support);
            for (const auto& phi : phis) ok = ok && apply(reg, phi) == apply(f, phi);
          }
          t.check(ok, what);
        },
        what);
  }
  return t.done();
}

SuiteReport fundamental(const CasePanel& p, Generator& g) {
  Tally t("fundamental");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(2);
    auto xs = g.distinct_abscissas(3);
    const TestFunction phi = g.test_function();
    auto what = [&] { return "f=" + to_text(f) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const FundamentalBundle b(f);
          if (xs.size() == 3) {
            const Bit whole = b.F_open(xs[0], xs[2]);
            const Bit split = b.F_open(xs[0], xs[1]) ^ b.F_point(xs[1]) ^ b.F_open(xs[1], xs[2]);
            t.check(whole == split, [&] { return what() + " additivity at " + xs[1].str(); });
          }
          const Bit x = from_fundamental(b).apply(phi);
          const Bit y = apply(f, phi);
          t.check(x == y, [&] { return what() + " reconstruction " + bits(x, y); });
        },
        what);
  }
  // Singular witnesses for the point atoms at 0 over random windows around 0.
  struct Atom {
    const char* name;
    Distribution d;
    const char* which;
  };
  const Atom atoms[] = {{"DELTAL{0}", Distribution::delta_left(LocallyFiniteSet{Rational(0)}), "F*"},
                        {"DELTAR{0}", Distribution::delta_right(LocallyFiniteSet{Rational(0)}), "F_*"}};
  for (std::size_t i = 0; i < std::max<std::size_t>(p.cases / 2, 1); ++i) {
    const Rational lo = -Rational(BigInt(1 + static_cast<long>(g.below(32))), BigInt(8));
    const Rational hi = Rational(BigInt(1 + static_cast<long>(g.below(32))), BigInt(8));
    for (const auto& a : atoms) {
      auto what = [&] { return std::string(a.name) + " on [" + lo.str() + ", " + hi.str() + "]"; };
      t.guarded(
          [&] {
            const auto v = regularity_criterion(FundamentalBundle(a.d), Window(lo, hi));
            t.check(v.kind == RegularityVerdict::Kind::SingularWitness && v.at == 0 && v.which == a.which,
                    [&] { return what() + " gave " + to_string(v); });
          },
          what);
    }
    const std::pair<const char*, Distribution> everywhere[] = {{"PARITY", Distribution::parity()},
                                                                {"INTDL", Distribution::int_deriv_left()},
                                                                {"INTDR", Distribution::int_deriv_right()}};
    for (const auto& [name, d] : everywhere) {
      auto what = [&] { return std::string(name) + " on [" + lo.str() + ", " + hi.str() + "]"; };
      t.guarded(
          [&] {
            const auto v = regularity_criterion(FundamentalBundle(d), Window(lo, hi));
            t.check(v.kind == RegularityVerdict::Kind::SingularWitness && v.which == "F*",
                    [&] { return what() + " gave " + to_string(v); });
          },
          what);
    }
    const LocallyFiniteSet s = g.spike_train();
    auto what_reg = [&] { return "REG " + to_text(s) + " on [" + lo.str() + ", " + hi.str() + "]"; };
    t.guarded(
        [&] {
          const auto v = regularity_criterion(FundamentalBundle(Distribution::regular(s)), Window(lo, hi));
          t.check(v.kind == RegularityVerdict::Kind::RegularOnWindow,
                  [&] { return what_reg() + " gave " + to_string(v); });
        },
        what_reg);
  }
  return t.done();
}

SuiteReport representation(const CasePanel& p, Generator& g) {
  Tally t("representation");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const StepFunction f = g.step_function();
    auto what = [&] { return "f=" + to_text(f); };
    // Rebuild f from samples on a refined breakpoint list; canonical form must match.
    auto bps = f.breakpoints();
    for (const auto& x : g.distinct_abscissas(g.below(4))) {
      if (std::find(bps.begin(), bps.end(), x) == bps.end()) bps.push_back(x);
    }
    std::sort(bps.begin(), bps.end());
    std::vector<Bit> pts;
    std::vector<Bit> ivs;
    for (const auto& x : bps) pts.push_back(f.eval(x));
    if (bps.empty()) {
      ivs.push_back(f.left_tail());
    } else {
      ivs.push_back(f.eval(bps.front() - 1));
      for (std::size_t k = 0; k + 1 < bps.size(); ++k) ivs.push_back(f.eval(midpoint(bps[k], bps[k + 1])));
      ivs.push_back(f.eval(bps.back() + 1));
    }
    const StepFunction rebuilt(bps, pts, ivs);
    t.check(rebuilt == f, [&] { return what() + " rebuilt as " + to_text(rebuilt); });
    bool samples_ok = true;
    for (const auto& x : sample_points(f)) samples_ok = samples_ok && rebuilt.eval(x) == f.eval(x);
    t.check(samples_ok, what);
  }
  return t.done();
}

SuiteReport tensor_suite(const CasePanel& p, Generator& g) {
  Tally t("tensor");
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.distribution(1);
    const Distribution h = g.distribution(1);
    const Distribution k = g.distribution(1);
    const TestFunction2 phi2 = g.test_function2();
    auto what = [&] {
      return "f=" + to_text(f) + " g=" + to_text(h) + " h=" + to_text(k) + " phi2=" + to_text(phi2);
    };
    t.guarded(
        [&] {
          const auto [x, y] = commutativity_check(f, h, phi2);
          t.check(x == y, [&] { return what() + " nesting " + bits(x, y); });
          const Distribution2 fg = tensor(f, h);
          const Bit sum = apply2(tensor(xor_dist(f, k), h), phi2);
          t.check(sum == (apply2(fg, phi2) ^ apply2(tensor(k, h), phi2)), [&] { return what() + " left additivity"; });
          const Bit sum2 = apply2(tensor(f, xor_dist(h, k)), phi2);
          t.check(sum2 == (apply2(fg, phi2) ^ apply2(tensor(f, k), phi2)), [&] { return what() + " right additivity"; });
          const Bit dl = apply2(partial_deriv(raw::tensor(f, h), Axis::U, Side::Left), phi2);
          t.check(dl == apply2(raw::tensor(f, raw::deriv_left_dist(h)), phi2),
                  [&] { return what() + " partial derivative in u"; });
          const Bit lt = apply2(partial_limit(raw::tensor(f, h), Axis::T, Side::Right), phi2);
          t.check(lt == apply2(raw::tensor(raw::limit_right(f), h), phi2),
                  [&] { return what() + " partial limit in t"; });
        },
        what);
    const LocallyFiniteSet s = g.finite_set();
    const LocallyFiniteSet r = g.finite_set();
    auto what_reg = [&] { return "S=" + to_text(s) + " T=" + to_text(r) + " phi2=" + to_text(phi2); };
    t.guarded(
        [&] {
          const Distribution2 lazy = raw::tensor(Distribution::regular(s), Distribution::regular(r));
          const Distribution2 pairs = tensor(Distribution::regular(s), Distribution::regular(r));
          const Bit a = apply2(lazy, phi2, Nesting::TFirst);
          const Bit b = apply2(lazy, phi2, Nesting::UFirst);
          const Bit c = apply2(pairs, phi2);
          t.check(a == b && b == c, [&] { return what_reg() + " regular tensor " + bits(a, c); });
        },
        what_reg);
  }
  return t.done();
}

// Counts sums with multiplicity and keeps the odd ones.
LocallyFiniteSet odd_sums(const LocallyFiniteSet& s, const LocallyFiniteSet& r) {
  std::map<Rational, int> counts;
  if (!s.empty() && !r.empty()) {
    for (const auto& x : s.enumerate(Window(*s.min(), *s.max()))) {
      for (const auto& y : r.enumerate(Window(*r.min(), *r.max()))) counts[x + y] ^= 1;
    }
  }
  std::vector<Rational> out;
  for (const auto& [x, c] : counts) {
    if (c) out.push_back(x);
  }
  return LocallyFiniteSet(out);
}

// Finite part of s that can meet the window once paired with the other train.
LocallyFiniteSet truncate(const LocallyFiniteSet& s, const Rational& lo, const Rational& hi) {
  return LocallyFiniteSet(s.enumerate(Window(lo, hi)));
}

SuiteReport convolution(const CasePanel& p, Generator& g) {
  Tally t("convolution");
  const Distribution unit = Distribution::delta(0);
  for (std::size_t i = 0; i < p.cases; ++i) {
    const LocallyFiniteSet s = g.finite_set();
    const LocallyFiniteSet r = g.finite_set();
    const LocallyFiniteSet q = g.finite_set(3);
    const TestFunction phi = g.test_function();
    const Distribution fs = Distribution::regular(s);
    const Distribution fr = Distribution::regular(r);
    const Distribution fq = Distribution::regular(q);
    auto what = [&] { return "S=" + to_text(s) + " T=" + to_text(r) + " U=" + to_text(q) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Distribution st = convolve(fs, fr);
          const LocallyFiniteSet expect = odd_sums(s, r);
          t.check(st.kind() == Distribution::Kind::Regular && st.support() == expect,
                  [&] { return what() + " support " + to_text(st) + " expected " + to_text(expect); });
          t.check(apply(st, phi) == pair_parity(s, r, phi), [&] { return what() + " pair parity"; });
          t.check(apply(st, phi) == apply(convolve(fr, fs), phi), [&] { return what() + " commutativity"; });
          t.check(apply(convolve(st, fq), phi) == apply(convolve(fs, convolve(fr, fq)), phi),
                  [&] { return what() + " associativity"; });
        },
        what);
    const Distribution d = g.distribution(2);
    auto what_unit = [&] { return "f=" + to_text(d) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Bit x = apply(d, phi);
          t.check(apply(convolve(unit, d), phi) == x && apply(convolve(d, unit), phi) == x,
                  [&] { return what_unit() + " unity"; });
        },
        what_unit);
    const Distribution a = g.atom_combination();
    auto what_nested = [&] { return "f=" + to_text(a) + " g=" + to_text(d) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Bit x = apply(convolve(a, d), phi);
          const Bit y = convolve_nested(a, d, phi);
          t.check(x == y, [&] { return what_nested() + " expanded/nested " + bits(x, y); });
        },
        what_nested);
    // Two inferiorly finite trains: compare against the finite truncation that can reach phi.
    const Rational off = g.abscissa();
    const LocallyFiniteSet ps =
        LocallyFiniteSet::progression(off, Rational(1 + static_cast<long>(g.below(3))), ProgressionRange::NonNegative);
    const LocallyFiniteSet pr = LocallyFiniteSet::progression(g.abscissa(), Rational(BigInt(1 + static_cast<long>(g.below(3))), BigInt(2)),
                                                              ProgressionRange::NonNegative)
                                    .sym_diff(g.finite_set(2));
    auto what_spike = [&] { return "S=" + to_text(ps) + " T=" + to_text(pr) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Bit x = apply(convolve(Distribution::regular(ps), Distribution::regular(pr)), phi);
          Bit y;
          if (const auto hull = phi.hull(); hull && !pr.empty()) {
            const Rational top = hull->hi() - *ps.min() + 1;
            const Rational top_s = hull->hi() - *pr.min() + 1;
            y = pair_parity(truncate(ps, *ps.min(), std::max(top_s, *ps.min())),
                            truncate(pr, *pr.min(), std::max(top, *pr.min())), phi);
          }
          t.check(x == y, [&] { return what_spike() + " spike convolution " + bits(x, y); });
        },
        what_spike);
  }
  return t.done();
}

// Exact equality of two finite atom combinations.
bool same_atoms(const Distribution& x, const Distribution& y) {
  const auto a = atom_form(x);
  const auto b = atom_form(y);
  return a && b && a->point == b->point && a->left == b->left && a->right == b->right && a->parity == b->parity;
}

SuiteReport derivative_rule(const CasePanel& p, Generator& g) {
  Tally t("derivative-rule");
  std::size_t asserted = 0;
  std::size_t differs = 0;
  for (std::size_t i = 0; i < p.cases; ++i) {
    const Distribution f = g.atom_combination();
    const Distribution h = g.atom_combination();
    const TestFunction phi = g.test_function();
    auto what = [&] { return "f=" + to_text(f) + " g=" + to_text(h) + " phi=" + to_text(phi); };
    t.guarded(
        [&] {
          const Distribution dh = deriv_left_dist(h);
          const Bit lhs = apply(deriv_left_dist(convolve(f, h)), phi);
          const Bit mid = apply(convolve(deriv_left_dist(f), h), phi);
          t.check(lhs == mid, [&] { return what() + " D-(f*g) vs D-f*g " + bits(lhs, mid); });
          const Bit rhs = apply(convolve(f, dh), phi);
          if (lhs != rhs) ++differs;
          const bool commute = same_atoms(convolve(f, h), convolve(h, f)) && same_atoms(convolve(f, dh), convolve(dh, f));
          if (commute) {
            ++asserted;
            t.check(lhs == rhs, [&] { return what() + " D-(f*g) vs f*D-g " + bits(lhs, rhs); });
          }
        },
        what);
  }
  return t.done("f*D-g asserted on " + std::to_string(asserted) + " commuting cases; differs from D-(f*g) on " +
                std::to_string(differs) + " of " + std::to_string(p.cases) + " cases");
}

SuiteReport grid_refutation(const CasePanel& p, Generator& g) {
  Tally t("grid-refutation");
  std::vector<Rational> unit;
  for (int k = -3; k <= 3; ++k) unit.emplace_back(k);
  const Sampler2 diag = [](const Rational& x, const Rational& y) { return Bit(x + y == 0); };
  t.check(refute_grid_representable(diag, unit, unit, 4).has_value(), [] { return std::string("delta(t+u) on unit grid"); });
  for (std::size_t i = 0; i < p.cases; ++i) {
    const long c = static_cast<long>(g.below(5)) - 2;
    const Sampler2 line = [c](const Rational& x, const Rational& y) { return Bit(x + y == c); };
    t.check(refute_grid_representable(line, unit, unit, 4).has_value(),
            [&] { return "delta(t+u-" + std::to_string(c) + ") on unit grid"; });
    // Soundness: a genuine grid function on a grid refining its own lines is never refuted.
    const TestFunction2 phi2 = g.test_function2();
    auto tg = phi2.t_breakpoints();
    auto ug = phi2.u_breakpoints();
    for (auto* grid : {&tg, &ug}) {
      grid->push_back(Rational(-9));
      grid->push_back(Rational(9));
      std::sort(grid->begin(), grid->end());
      grid->erase(std::unique(grid->begin(), grid->end()), grid->end());
    }
    const Sampler2 own = [&phi2](const Rational& x, const Rational& y) { return phi2.eval(x, y); };
    t.check(!refute_grid_representable(own, tg, ug, 8).has_value(),
            [&] { return "false witness for " + to_text(phi2); });
  }
  return t.done();
}

SuiteReport dsl_roundtrip(const CasePanel& p, Generator& g) {
  Tally t("dsl-roundtrip");
  static const dsl::Sort sorts[] = {dsl::Sort::Set, dsl::Sort::Fn, dsl::Sort::Dist, dsl::Sort::Fn2, dsl::Sort::Dist2};
  for (std::size_t i = 0; i < p.cases; ++i) {
    const dsl::Ast a = g.ast(sorts[i % 5], 3);
    const std::string text = dsl::print_canonical(a);
    auto what = [&] { return "text=" + text; };
    t.guarded(
        [&] {
          const dsl::Ast b = a.op == dsl::Ast::Op::SetLit || dsl::sort_of(a) == dsl::Sort::Set ? dsl::parse_set(text)
                                                                                               : dsl::parse(text);
          t.check(b == a && dsl::print_canonical(b) == text, [&] { return what() + " reparsed " + dsl::print_canonical(b); });
        },
        what);
    const StepFunction f = g.step_function();
    const TestFunction phi = g.test_function();
    const Distribution d = g.distribution(3);
    const TestFunction2 phi2 = g.test_function2();
    const LocallyFiniteSet s = g.spike_train();
    auto what_v = [&] { return "fn=" + to_text(f) + " dist=" + to_text(d) + " fn2=" + to_text(phi2); };
    t.guarded(
        [&] {
          t.check(dsl::deserialize_fn(dsl::serialize(f)) == f, [&] { return what_v() + " step function"; });
          t.check(dsl::deserialize_set(dsl::serialize(s)) == s, [&] { return "set " + to_text(s); });
          t.check(dsl::deserialize_fn2(dsl::serialize(phi2)) == phi2, [&] { return what_v() + " fn2"; });
          const Distribution back = dsl::deserialize_dist(dsl::serialize(d));
          t.check(back == d && apply(back, phi) == apply(d, phi), [&] { return what_v() + " dist " + to_text(back); });
          const Distribution2 d2 = raw::tensor(d, g.distribution(1));
          const Distribution2 back2 = dsl::deserialize_dist2(dsl::serialize(d2));
          t.check(to_text(back2) == to_text(d2), [&] { return what_v() + " dist2 " + to_text(d2); });
        },
        what_v);
  }
  return t.done();
}

using SuiteFn = SuiteReport (*)(const CasePanel&, Generator&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"linearity", linearity},
      {"oracle", oracle},
      {"iteration", iteration},
      {"limit-counterexample", limit_counterexample},
      {"adjunction", adjunction},
      {"classification", classification},
      {"fundamental", fundamental},
      {"representation", representation},
      {"tensor", tensor_suite},
      {"convolution", convolution},
      {"derivative-rule", derivative_rule},
      {"grid-refutation", grid_refutation},
      {"dsl-roundtrip", dsl_roundtrip},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const CasePanel& panel) {
  const auto& r = registry();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].first != name) continue;
    Generator g(panel, i + 1);
    return r[i].second(panel, g);
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace bdist
