#include "bdist/dist.hpp"

#include <algorithm>
#include <map>

#include "detail.hpp"

namespace bdist {

using Kind = Distribution::Kind;
using Node = Distribution::Node;

namespace {

Distribution make(Kind kind) {
  Node n;
  n.kind = kind;
  return Distribution::from_node(std::move(n));
}

Distribution wrap1(Kind kind, const Distribution& a) {
  Node n;
  n.kind = kind;
  n.a = std::make_shared<const Node>(a.node());
  return Distribution::from_node(std::move(n));
}

bool nodes_equal(const Node& x, const Node& y);

bool ptr_equal(const std::shared_ptr<const Node>& x, const std::shared_ptr<const Node>& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  return nodes_equal(*x, *y);
}

bool nodes_equal(const Node& x, const Node& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight:
      return x.set == y.set;
    case Kind::SpikeConvolution:
      return x.set == y.set && x.set2 == y.set2;
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return true;
    case Kind::Scale:
      return x.psi == y.psi && ptr_equal(x.a, y.a);
    case Kind::Translate:
      return x.tau == y.tau && ptr_equal(x.a, y.a);
    case Kind::Xor:
      return ptr_equal(x.a, y.a) && ptr_equal(x.b, y.b);
    default:
      return ptr_equal(x.a, y.a);
  }
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string indent(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

}  // namespace

Distribution::Distribution() : node_(std::make_shared<const Node>()) {}

Distribution Distribution::from_node(Node node) { return Distribution(std::make_shared<const Node>(std::move(node))); }

Distribution Distribution::regular(LocallyFiniteSet support) {
  Node n;
  n.kind = Kind::Regular;
  n.set = std::move(support);
  return from_node(std::move(n));
}

Distribution Distribution::delta_left(LocallyFiniteSet points) {
  if (points.empty()) return {};
  Node n;
  n.kind = Kind::DeltaLeft;
  n.set = std::move(points);
  return from_node(std::move(n));
}

Distribution Distribution::delta_right(LocallyFiniteSet points) {
  if (points.empty()) return {};
  Node n;
  n.kind = Kind::DeltaRight;
  n.set = std::move(points);
  return from_node(std::move(n));
}

Distribution Distribution::parity() { return make(Kind::Parity); }
Distribution Distribution::int_deriv_left() { return make(Kind::IntDerivLeft); }
Distribution Distribution::int_deriv_right() { return make(Kind::IntDerivRight); }

Distribution Distribution::spike_convolution(LocallyFiniteSet f, LocallyFiniteSet g) {
  if (f.empty() || g.empty()) return {};
  Node n;
  n.kind = Kind::SpikeConvolution;
  n.set = std::move(f);
  n.set2 = std::move(g);
  return from_node(std::move(n));
}

bool operator==(const Distribution& x, const Distribution& y) { return ptr_equal(x.node_, y.node_); }

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Regular: return "Regular";
    case Kind::DeltaLeft: return "DeltaLeft";
    case Kind::DeltaRight: return "DeltaRight";
    case Kind::Parity: return "Parity";
    case Kind::IntDerivLeft: return "IntDerivLeft";
    case Kind::IntDerivRight: return "IntDerivRight";
    case Kind::Xor: return "Xor";
    case Kind::Scale: return "Scale";
    case Kind::Translate: return "Translate";
    case Kind::LimitLeft: return "LimitLeft";
    case Kind::LimitRight: return "LimitRight";
    case Kind::DerivLeft: return "DerivLeft";
    case Kind::DerivRight: return "DerivRight";
    case Kind::SpikeConvolution: return "SpikeConvolution";
  }
  return "?";
}

namespace detail {

std::vector<Rational> spike_sums(const LocallyFiniteSet& f, const LocallyFiniteSet& g, const Window& w) {
  std::map<Rational, int> counts;
  auto add_pairs = [&](const LocallyFiniteSet& outer, const Window& range, const LocallyFiniteSet& inner) {
    for (const auto& xi : outer.enumerate(range)) {
      for (const auto& eta : inner.enumerate(w.shifted(-xi))) counts[xi + eta] ^= 1;
    }
  };
  if (f.empty() || g.empty()) return {};
  if (f.is_finite()) {
    add_pairs(f, Window(*f.min(), *f.max()), g);
  } else if (g.is_finite()) {
    add_pairs(g, Window(*g.min(), *g.max()), f);
  } else {
    const SetClass cf = f.classify();
    const SetClass cg = g.classify();
    if (cf == SetClass::InferiorlyFinite && cg == SetClass::InferiorlyFinite) {
      const Rational lo = *f.min();
      const Rational hi = w.hi() - *g.min();
      if (lo <= hi) add_pairs(f, Window(lo, hi), g);
    } else if (cf == SetClass::SuperiorlyFinite && cg == SetClass::SuperiorlyFinite) {
      const Rational hi = *f.max();
      const Rational lo = w.lo() - *g.max();
      if (lo <= hi) add_pairs(f, Window(lo, hi), g);
    } else {
      throw Error(ErrorCode::ConvolutionUndefined, "pair sums of these supports are not locally finite");
    }
  }
  std::vector<Rational> out;
  for (const auto& [s, odd] : counts) {
    if (odd) out.push_back(s);
  }
  return out;
}

}  // namespace detail

namespace {

Bit apply_limit(const Distribution& a, const TestFunction& phi, bool left, Trace* trace, std::string& note) {
  const auto hull = phi.hull();
  if (!hull) return Bit::zero();
  std::vector<Rational> pts = critical_points(a, hull->widened(1));
  pts.insert(pts.end(), phi.breakpoints().begin(), phi.breakpoints().end());
  pts = sorted_unique(std::move(pts));
  Rational eps(1, 2);
  for (std::size_t i = 1; i < pts.size(); ++i) eps = std::min(eps, (pts[i] - pts[i - 1]) / 2);
  const Rational e1 = eps / 2;
  const Rational e2 = eps / 4;
  const Bit v1 = apply(a, translate(phi, left ? e1 : -e1), trace);
  const Bit v2 = apply(a, translate(phi, left ? e2 : -e2), trace);
  note = " eps=" + e1.str() + " guard=" + e2.str();
  if (v1 != v2) {
    throw Error(ErrorCode::LimitNotStabilized,
                "lateral limit differs between eps=" + e1.str() + " and eps=" + e2.str());
  }
  return v1;
}

Bit apply_node(const Distribution& f, const TestFunction& phi, Trace* trace, std::string& note) {
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight: {
      const auto hull = phi.hull();
      if (!hull) return Bit::zero();
      Bit acc;
      for (const auto& s : n.set.enumerate(*hull)) {
        if (n.kind == Kind::Regular) {
          acc ^= phi.eval(s);
        } else if (n.kind == Kind::DeltaLeft) {
          acc ^= phi.left_limit(s);
        } else {
          acc ^= phi.right_limit(s);
        }
      }
      return acc;
    }
    case Kind::SpikeConvolution: {
      const auto hull = phi.hull();
      if (!hull) return Bit::zero();
      Bit acc;
      for (const auto& s : detail::spike_sums(n.set, n.set2, *hull)) acc ^= phi.eval(s);
      return acc;
    }
    case Kind::Parity: {
      const auto c = component_count(phi);
      return parity(static_cast<std::uint64_t>(c.open + c.points));
    }
    case Kind::IntDerivLeft:
      return integral(TestFunction(deriv_left(phi.fn())));
    case Kind::IntDerivRight:
      return integral(TestFunction(deriv_right(phi.fn())));
    case Kind::Xor:
      return apply(f.lhs(), phi, trace) ^ apply(f.rhs(), phi, trace);
    case Kind::Scale:
      return apply(f.child(), scale(n.psi, phi), trace);
    case Kind::Translate:
      return apply(f.child(), translate(phi, -n.tau), trace);
    case Kind::LimitLeft:
      return apply_limit(f.child(), phi, true, trace, note);
    case Kind::LimitRight:
      return apply_limit(f.child(), phi, false, trace, note);
    case Kind::DerivLeft: {
      const Bit here = apply(f.child(), phi, trace);
      return here ^ apply_limit(f.child(), phi, true, trace, note);
    }
    case Kind::DerivRight: {
      const Bit here = apply(f.child(), phi, trace);
      return here ^ apply_limit(f.child(), phi, false, trace, note);
    }
  }
  return Bit::zero();
}

}  // namespace

Bit apply(const Distribution& f, const TestFunction& phi, Trace* trace) {
  std::string note;
  if (!trace) return apply_node(f, phi, nullptr, note);
  const std::size_t slot = trace->lines.size();
  trace->lines.emplace_back();
  ++trace->depth;
  const Bit v = apply_node(f, phi, trace, note);
  --trace->depth;
  trace->lines[slot] = indent(trace->depth) + std::string(kind_name(f.kind())) + note + " -> " + to_string(v);
  return v;
}

std::vector<Rational> critical_points(const Distribution& f, const Window& w) {
  const Node& n = f.node();
  std::vector<Rational> out;
  switch (n.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight:
      return n.set.enumerate(w);
    case Kind::SpikeConvolution:
      return detail::spike_sums(n.set, n.set2, w);
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return {};
    case Kind::Xor: {
      out = critical_points(f.lhs(), w);
      auto more = critical_points(f.rhs(), w);
      out.insert(out.end(), more.begin(), more.end());
      return sorted_unique(std::move(out));
    }
    case Kind::Scale: {
      out = critical_points(f.child(), w);
      for (const auto& b : n.psi.breakpoints()) {
        if (w.contains(b)) out.push_back(b);
      }
      return sorted_unique(std::move(out));
    }
    case Kind::Translate: {
      out = critical_points(f.child(), w.shifted(-n.tau));
      for (auto& x : out) x += n.tau;
      return out;
    }
    default: {
      // Limits look slightly outside the window.
      for (auto& x : critical_points(f.child(), w.widened(1))) {
        if (w.contains(x)) out.push_back(x);
      }
      return out;
    }
  }
}

LocallyFiniteSet restrict_set(const LocallyFiniteSet& s, const StepFunction& psi) {
  const auto& bps = psi.breakpoints();
  if (bps.empty()) return psi.left_tail() ? s : LocallyFiniteSet();
  std::vector<Rational> inner;
  for (const auto& t : s.enumerate(Window(bps.front(), bps.back()))) {
    if (psi.eval(t)) inner.push_back(t);
  }
  LocallyFiniteSet out(std::move(inner));
  if (psi.left_tail()) out = out.sym_diff(s.below(bps.front(), false));
  if (psi.right_tail()) out = out.sym_diff(s.above(bps.back(), false));
  return out;
}

namespace raw {

Distribution xor_dist(const Distribution& f, const Distribution& g) {
  Node n;
  n.kind = Kind::Xor;
  n.a = std::make_shared<const Node>(f.node());
  n.b = std::make_shared<const Node>(g.node());
  return Distribution::from_node(std::move(n));
}

Distribution translate_dist(const Distribution& f, const Rational& tau) {
  Node n;
  n.kind = Kind::Translate;
  n.tau = tau;
  n.a = std::make_shared<const Node>(f.node());
  return Distribution::from_node(std::move(n));
}

Distribution scale_dist(const StepFunction& psi, const Distribution& f) {
  Node n;
  n.kind = Kind::Scale;
  n.psi = psi;
  n.a = std::make_shared<const Node>(f.node());
  return Distribution::from_node(std::move(n));
}

Distribution limit_left(const Distribution& f) { return wrap1(Kind::LimitLeft, f); }
Distribution limit_right(const Distribution& f) { return wrap1(Kind::LimitRight, f); }
Distribution deriv_left_dist(const Distribution& f) { return wrap1(Kind::DerivLeft, f); }
Distribution deriv_right_dist(const Distribution& f) { return wrap1(Kind::DerivRight, f); }

}  // namespace raw

Distribution xor_dist(const Distribution& f, const Distribution& g) {
  if (f.is_null()) return g;
  if (g.is_null()) return f;
  if (f.kind() == g.kind()) {
    switch (f.kind()) {
      case Kind::Regular:
        return Distribution::regular(f.support().sym_diff(g.support()));
      case Kind::DeltaLeft:
        return Distribution::delta_left(f.support().sym_diff(g.support()));
      case Kind::DeltaRight:
        return Distribution::delta_right(f.support().sym_diff(g.support()));
      default:
        break;
    }
  }
  if (f == g) return {};
  return raw::xor_dist(f, g);
}

Distribution translate_dist(const Distribution& f, const Rational& tau) {
  if (tau == Rational(0) || f.is_null()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
      return Distribution::regular(n.set.translated(tau));
    case Kind::DeltaLeft:
      return Distribution::delta_left(n.set.translated(tau));
    case Kind::DeltaRight:
      return Distribution::delta_right(n.set.translated(tau));
    case Kind::SpikeConvolution:
      return Distribution::spike_convolution(n.set.translated(tau), n.set2);
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return f;
    case Kind::Xor:
      return xor_dist(translate_dist(f.lhs(), tau), translate_dist(f.rhs(), tau));
    case Kind::Translate:
      return translate_dist(f.child(), n.tau + tau);
    case Kind::Scale:
      return scale_dist(translate_fn(n.psi, tau), translate_dist(f.child(), tau));
    case Kind::LimitLeft:
      return limit_left(translate_dist(f.child(), tau));
    case Kind::LimitRight:
      return limit_right(translate_dist(f.child(), tau));
    case Kind::DerivLeft:
      return deriv_left_dist(translate_dist(f.child(), tau));
    case Kind::DerivRight:
      return deriv_right_dist(translate_dist(f.child(), tau));
  }
  return raw::translate_dist(f, tau);
}

Distribution scale_dist(const StepFunction& psi, const Distribution& f) {
  if (f.is_null() || psi.is_zero()) return {};
  if (psi.is_constant()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
      return Distribution::regular(restrict_set(n.set, psi));
    case Kind::DeltaLeft:
      return Distribution::delta_left(restrict_set(n.set, limit_fn_left(psi)));
    case Kind::DeltaRight:
      return Distribution::delta_right(restrict_set(n.set, limit_fn_right(psi)));
    case Kind::Xor:
      return xor_dist(scale_dist(psi, f.lhs()), scale_dist(psi, f.rhs()));
    case Kind::Scale:
      return scale_dist(and_fn(psi, n.psi), f.child());
    default:
      return raw::scale_dist(psi, f);
  }
}

Distribution limit_left(const Distribution& f) {
  if (f.is_null()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight:
      return Distribution::delta_left(n.set);
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return f;
    case Kind::LimitLeft:
    case Kind::LimitRight:
      return limit_left(f.child());
    case Kind::DerivLeft:
    case Kind::DerivRight:
      return {};
    case Kind::Xor:
      return xor_dist(limit_left(f.lhs()), limit_left(f.rhs()));
    case Kind::Translate:
      return translate_dist(limit_left(f.child()), n.tau);
    default:
      return raw::limit_left(f);
  }
}

Distribution limit_right(const Distribution& f) {
  if (f.is_null()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Regular:
    case Kind::DeltaLeft:
    case Kind::DeltaRight:
      return Distribution::delta_right(n.set);
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
      return f;
    case Kind::LimitLeft:
    case Kind::LimitRight:
      return limit_right(f.child());
    case Kind::DerivLeft:
    case Kind::DerivRight:
      return {};
    case Kind::Xor:
      return xor_dist(limit_right(f.lhs()), limit_right(f.rhs()));
    case Kind::Translate:
      return translate_dist(limit_right(f.child()), n.tau);
    default:
      return raw::limit_right(f);
  }
}

Distribution deriv_left_dist(const Distribution& f) {
  if (f.is_null()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
    case Kind::DeltaLeft:
    case Kind::LimitLeft:
      return {};
    case Kind::DerivLeft:
    case Kind::DerivRight:
      return f;
    case Kind::Xor:
      return xor_dist(deriv_left_dist(f.lhs()), deriv_left_dist(f.rhs()));
    case Kind::Translate:
      return translate_dist(deriv_left_dist(f.child()), n.tau);
    default:
      return raw::deriv_left_dist(f);
  }
}

Distribution deriv_right_dist(const Distribution& f) {
  if (f.is_null()) return f;
  const Node& n = f.node();
  switch (n.kind) {
    case Kind::Parity:
    case Kind::IntDerivLeft:
    case Kind::IntDerivRight:
    case Kind::DeltaRight:
    case Kind::LimitRight:
      return {};
    case Kind::DerivLeft:
    case Kind::DerivRight:
      return f;
    case Kind::Xor:
      return xor_dist(deriv_right_dist(f.lhs()), deriv_right_dist(f.rhs()));
    case Kind::Translate:
      return translate_dist(deriv_right_dist(f.child()), n.tau);
    default:
      return raw::deriv_right_dist(f);
  }
}

}  // namespace bdist
