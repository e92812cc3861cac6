#include <algorithm>

#include "bdist/tensor_conv.hpp"

namespace bdist {

using Kind2 = Distribution2::Kind;
using Node2 = Distribution2::Node;

namespace {

using Pair = std::pair<Rational, Rational>;

// Sorted multiset with pairs of equal entries cancelled.
std::vector<Pair> cancel_pairs(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<Pair> out;
  for (auto& p : pairs) {
    if (!out.empty() && out.back() == p) {
      out.pop_back();
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Rational> all_points(const LocallyFiniteSet& s) {
  if (s.empty()) return {};
  return s.enumerate(Window(*s.min(), *s.max()));
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Distribution2 wrap(Kind2 kind, const Distribution2& F, Axis axis, Side side) {
  Node2 n;
  n.kind = kind;
  n.axis = axis;
  n.side = side;
  n.a = std::make_shared<const Node2>(F.node());
  return Distribution2::from_node(std::move(n));
}

std::optional<Window> axis_hull(const TestFunction2& phi2, Axis axis) {
  const auto& bps = axis == Axis::T ? phi2.t_breakpoints() : phi2.u_breakpoints();
  if (bps.empty()) return std::nullopt;
  return Window(bps.front(), bps.back());
}

TestFunction assemble(const std::vector<Rational>& bps, const std::function<Bit(const Rational&)>& value) {
  std::vector<Bit> pts;
  std::vector<Bit> ivs{Bit::zero()};
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.push_back(value(bps[i]));
    ivs.push_back(i + 1 < bps.size() ? value(midpoint(bps[i], bps[i + 1])) : Bit::zero());
  }
  return TestFunction(StepFunction(bps, std::move(pts), std::move(ivs)));
}

Bit apply_partial_limit(const Distribution2& F, const TestFunction2& phi2, Axis axis, Side side, Nesting nesting) {
  const auto hull = axis_hull(phi2, axis);
  if (!hull) return Bit::zero();
  auto pts = critical_points2(F, axis, hull->widened(1));
  const auto& bps = axis == Axis::T ? phi2.t_breakpoints() : phi2.u_breakpoints();
  pts.insert(pts.end(), bps.begin(), bps.end());
  pts = sorted_unique(std::move(pts));
  Rational eps(1, 2);
  for (std::size_t i = 1; i < pts.size(); ++i) eps = std::min(eps, (pts[i] - pts[i - 1]) / 2);
  auto at = [&](const Rational& e) {
    const Rational s = side == Side::Left ? e : -e;
    return apply2(F, axis == Axis::T ? translate2(phi2, s, Rational(0)) : translate2(phi2, Rational(0), s), nesting);
  };
  const Bit v1 = at(eps / 2);
  const Bit v2 = at(eps / 4);
  if (v1 != v2) throw Error(ErrorCode::LimitNotStabilized, "partial limit did not settle");
  return v1;
}

}  // namespace

Distribution2::Distribution2() : node_(std::make_shared<const Node>()) {}

Distribution2 Distribution2::from_node(Node node) { return Distribution2(std::make_shared<const Node>(std::move(node))); }

Distribution2 Distribution2::regular2(std::vector<std::pair<Rational, Rational>> pairs) {
  Node n;
  n.pairs = cancel_pairs(std::move(pairs));
  return from_node(std::move(n));
}

Distribution2 Distribution2::product_support(LocallyFiniteSet s, LocallyFiniteSet t) {
  Node n;
  if (!s.empty() && !t.empty()) n.products.emplace_back(std::move(s), std::move(t));
  return from_node(std::move(n));
}

Bit apply2(const Distribution2& F, const TestFunction2& phi2, Nesting nesting) {
  const Node2& n = F.node();
  switch (n.kind) {
    case Kind2::Tensor: {
      if (nesting == Nesting::TFirst) {
        const auto inner = assemble(phi2.t_breakpoints(), [&](const Rational& t) { return apply(n.g, slice_t(phi2, t)); });
        return apply(n.f, inner);
      }
      const auto inner = assemble(phi2.u_breakpoints(), [&](const Rational& u) { return apply(n.f, slice_u(phi2, u)); });
      return apply(n.g, inner);
    }
    case Kind2::Regular2: {
      Bit acc;
      for (const auto& [t, u] : n.pairs) acc ^= phi2.eval(t, u);
      const auto th = axis_hull(phi2, Axis::T);
      const auto uh = axis_hull(phi2, Axis::U);
      if (!th || !uh) return acc;
      for (const auto& [s, r] : n.products) {
        const auto us = r.enumerate(*uh);
        for (const auto& t : s.enumerate(*th)) {
          for (const auto& u : us) acc ^= phi2.eval(t, u);
        }
      }
      return acc;
    }
    case Kind2::Xor2:
      return apply2(F.lhs(), phi2, nesting) ^ apply2(F.rhs(), phi2, nesting);
    case Kind2::Translate2:
      return apply2(F.child(), translate2(phi2, -n.tau, -n.nu), nesting);
    case Kind2::PartialLimit:
      return apply_partial_limit(F.child(), phi2, n.axis, n.side, nesting);
    case Kind2::PartialDeriv:
      return apply2(F.child(), phi2, nesting) ^ apply_partial_limit(F.child(), phi2, n.axis, n.side, nesting);
  }
  return Bit::zero();
}

std::vector<Rational> critical_points2(const Distribution2& F, Axis axis, const Window& w) {
  const Node2& n = F.node();
  std::vector<Rational> out;
  switch (n.kind) {
    case Kind2::Tensor:
      return critical_points(axis == Axis::T ? n.f : n.g, w);
    case Kind2::Regular2:
      for (const auto& [t, u] : n.pairs) {
        const Rational& x = axis == Axis::T ? t : u;
        if (w.contains(x)) out.push_back(x);
      }
      for (const auto& [s, r] : n.products) {
        auto more = (axis == Axis::T ? s : r).enumerate(w);
        out.insert(out.end(), more.begin(), more.end());
      }
      return sorted_unique(std::move(out));
    case Kind2::Xor2: {
      out = critical_points2(F.lhs(), axis, w);
      auto more = critical_points2(F.rhs(), axis, w);
      out.insert(out.end(), more.begin(), more.end());
      return sorted_unique(std::move(out));
    }
    case Kind2::Translate2: {
      const Rational& s = axis == Axis::T ? n.tau : n.nu;
      out = critical_points2(F.child(), axis, w.shifted(-s));
      for (auto& x : out) x += s;
      return out;
    }
    case Kind2::PartialLimit:
    case Kind2::PartialDeriv:
      for (auto& x : critical_points2(F.child(), axis, w.widened(1))) {
        if (w.contains(x)) out.push_back(x);
      }
      return out;
  }
  return out;
}

namespace raw {

Distribution2 tensor(const Distribution& f, const Distribution& g) {
  Node2 n;
  n.kind = Kind2::Tensor;
  n.f = f;
  n.g = g;
  return Distribution2::from_node(std::move(n));
}

Distribution2 partial_limit(const Distribution2& F, Axis axis, Side side) {
  return wrap(Kind2::PartialLimit, F, axis, side);
}

Distribution2 partial_deriv(const Distribution2& F, Axis axis, Side side) {
  return wrap(Kind2::PartialDeriv, F, axis, side);
}

}  // namespace raw

Distribution2 tensor(const Distribution& f, const Distribution& g) {
  if (f.is_null() || g.is_null()) return {};
  if (f.kind() == Distribution::Kind::Regular && g.kind() == Distribution::Kind::Regular) {
    if (f.support().is_finite() && g.support().is_finite()) {
      std::vector<std::pair<Rational, Rational>> pairs;
      const auto us = all_points(g.support());
      for (const auto& t : all_points(f.support())) {
        for (const auto& u : us) pairs.emplace_back(t, u);
      }
      return Distribution2::regular2(std::move(pairs));
    }
    return Distribution2::product_support(f.support(), g.support());
  }
  return raw::tensor(f, g);
}

Distribution2 xor2(const Distribution2& F, const Distribution2& G) {
  if (F.is_null()) return G;
  if (G.is_null()) return F;
  if (F.kind() == Kind2::Regular2 && G.kind() == Kind2::Regular2) {
    Node2 n;
    n.pairs = F.node().pairs;
    n.pairs.insert(n.pairs.end(), G.node().pairs.begin(), G.node().pairs.end());
    n.pairs = cancel_pairs(std::move(n.pairs));
    n.products = F.node().products;
    n.products.insert(n.products.end(), G.node().products.begin(), G.node().products.end());
    return Distribution2::from_node(std::move(n));
  }
  Node2 n;
  n.kind = Kind2::Xor2;
  n.a = std::make_shared<const Node2>(F.node());
  n.b = std::make_shared<const Node2>(G.node());
  return Distribution2::from_node(std::move(n));
}

Distribution2 translate2(const Distribution2& F, const Rational& tau, const Rational& nu) {
  if (F.is_null() || (tau == Rational(0) && nu == Rational(0))) return F;
  const Node2& n = F.node();
  if (n.kind == Kind2::Regular2) {
    Node2 out;
    for (const auto& [t, u] : n.pairs) out.pairs.emplace_back(t + tau, u + nu);
    for (const auto& [s, r] : n.products) out.products.emplace_back(s.translated(tau), r.translated(nu));
    return Distribution2::from_node(std::move(out));
  }
  if (n.kind == Kind2::Tensor) return tensor(translate_dist(n.f, tau), translate_dist(n.g, nu));
  Node2 out;
  out.kind = Kind2::Translate2;
  out.tau = tau;
  out.nu = nu;
  out.a = std::make_shared<const Node2>(n);
  return Distribution2::from_node(std::move(out));
}

Distribution2 partial_limit(const Distribution2& F, Axis axis, Side side) {
  if (F.is_null()) return F;
  const Node2& n = F.node();
  if (n.kind == Kind2::Tensor) {
    auto lim = [side](const Distribution& d) { return side == Side::Left ? limit_left(d) : limit_right(d); };
    return axis == Axis::T ? tensor(lim(n.f), n.g) : tensor(n.f, lim(n.g));
  }
  if (n.kind == Kind2::Xor2) return xor2(partial_limit(F.lhs(), axis, side), partial_limit(F.rhs(), axis, side));
  return raw::partial_limit(F, axis, side);
}

Distribution2 partial_deriv(const Distribution2& F, Axis axis, Side side) {
  if (F.is_null()) return F;
  const Node2& n = F.node();
  if (n.kind == Kind2::Tensor) {
    auto der = [side](const Distribution& d) { return side == Side::Left ? deriv_left_dist(d) : deriv_right_dist(d); };
    return axis == Axis::T ? tensor(der(n.f), n.g) : tensor(n.f, der(n.g));
  }
  if (n.kind == Kind2::Xor2) return xor2(partial_deriv(F.lhs(), axis, side), partial_deriv(F.rhs(), axis, side));
  return raw::partial_deriv(F, axis, side);
}

std::pair<Bit, Bit> commutativity_check(const Distribution& f, const Distribution& g, const TestFunction2& phi2) {
  return {apply2(tensor(f, g), phi2), apply2(tensor(g, f), transpose(phi2))};
}

}  // namespace bdist
