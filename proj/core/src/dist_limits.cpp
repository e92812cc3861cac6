#include <stdexcept>

#include "bdist/dist.hpp"

namespace bdist {

using Kind = Distribution::Kind;

namespace {

AtomForm xor_forms(const AtomForm& x, const AtomForm& y) {
  return {x.point.sym_diff(y.point), x.left.sym_diff(y.left), x.right.sym_diff(y.right), x.parity ^ y.parity};
}

AtomForm lateral(const AtomForm& x, bool left) {
  const LocallyFiniteSet all = x.point.sym_diff(x.left).sym_diff(x.right);
  AtomForm out;
  (left ? out.left : out.right) = all;
  out.parity = x.parity;
  return out;
}

}  // namespace

std::optional<AtomForm> atom_form(const Distribution& f) {
  const auto& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
      return AtomForm{n.set, {}, {}, Bit::zero()};
    case Kind::DeltaLeft:
      return AtomForm{{}, n.set, {}, Bit::zero()};
    case Kind::DeltaRight:
      return AtomForm{{}, {}, n.set, Bit::zero()};
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return AtomForm{{}, {}, {}, Bit::one()};
    case Kind::SpikeConvolution:
      return std::nullopt;
    case Kind::Xor: {
      auto x = atom_form(f.lhs());
      auto y = atom_form(f.rhs());
      if (!x || !y) return std::nullopt;
      return xor_forms(*x, *y);
    }
    case Kind::Translate: {
      auto x = atom_form(f.child());
      if (!x) return std::nullopt;
      return AtomForm{x->point.translated(n.tau), x->left.translated(n.tau), x->right.translated(n.tau), x->parity};
    }
    case Kind::Scale: {
      auto x = atom_form(f.child());
      if (!x) return std::nullopt;
      Bit par = x->parity;
      if (par) {
        if (n.psi.is_zero()) {
          par = Bit::zero();
        } else if (!n.psi.is_constant()) {
          return std::nullopt;
        }
      }
      return AtomForm{restrict_set(x->point, n.psi), restrict_set(x->left, limit_fn_left(n.psi)),
                      restrict_set(x->right, limit_fn_right(n.psi)), par};
    }
    case Kind::LimitLeft:
    case Kind::LimitRight: {
      auto x = atom_form(f.child());
      if (!x) return std::nullopt;
      return lateral(*x, n.kind == Kind::LimitLeft);
    }
    case Kind::DerivLeft:
    case Kind::DerivRight: {
      auto x = atom_form(f.child());
      if (!x) return std::nullopt;
      return xor_forms(*x, lateral(*x, n.kind == Kind::DerivLeft));
    }
  }
  return std::nullopt;
}

Distribution from_atoms(const AtomForm& form) {
  Distribution out = Distribution::regular(form.point);
  out = xor_dist(out, Distribution::delta_left(form.left));
  out = xor_dist(out, Distribution::delta_right(form.right));
  if (form.parity) out = xor_dist(out, Distribution::parity());
  return out;
}

RegularityClass classify_regularity(const Distribution& f) {
  const auto form = atom_form(f);
  if (!form) return {};
  if (form->left.empty() && form->right.empty() && !form->parity) {
    return {RegularityClass::Kind::Regular, form->point};
  }
  return {RegularityClass::Kind::Singular, {}};
}

ConvergenceReport convergence_check(const Distribution& f, const StepFunction& psi, const TestFunction& phi,
                                    std::size_t n_max) {
  ConvergenceReport r;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational tau(1, static_cast<long>(n + 1));
    r.plus.push_back(apply(f, scale(psi, translate(phi, tau))));
    r.minus.push_back(apply(f, scale(psi, translate(phi, -tau))));
  }
  if (n_max == 0) return r;
  // Walk back from the end while both sequences keep their final value.
  std::size_t start = n_max;
  while (start > 1 && r.plus[start - 2] == r.plus.back() && r.minus[start - 2] == r.minus.back()) --start;
  r.rank = start;
  r.limit_plus = r.plus.back();
  r.limit_minus = r.minus.back();
  r.stabilized = n_max - start + 1 >= 3;
  return r;
}

CounterexampleReport translation_limit_counterexample(std::size_t n, const TestFunction& phi) {
  if (n < 3) throw std::invalid_argument("translation_limit_counterexample needs at least 3 terms");
  CounterexampleReport r;
  const Distribution par = Distribution::parity();
  for (std::size_t i = 1; i <= n; ++i) r.sequence.push_back(apply(par, translate(phi, Rational(1, static_cast<long>(i + 1)))));
  r.constant = true;
  for (Bit b : r.sequence) r.constant = r.constant && b == r.sequence.front();
  r.sequence_value = r.sequence.front();
  r.target = apply(par, TestFunction(limit_fn_left(phi.fn())));
  if (phi.is_zero()) {
    r.verdict = "not a counterexample input";
  } else if (r.constant && r.sequence_value != r.target) {
    r.verdict = "refuted";
  } else {
    r.verdict = "holds";
  }
  return r;
}

}  // namespace bdist
