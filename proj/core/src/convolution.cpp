#include <algorithm>
#include <map>
#include <set>

#include "bdist/tensor_conv.hpp"

namespace bdist {

namespace {

std::vector<Rational> all_points(const LocallyFiniteSet& s) {
  if (s.empty()) return {};
  return s.enumerate(Window(*s.min(), *s.max()));
}

bool finite_atoms(const std::optional<AtomForm>& form) {
  return form && !form->parity && form->point.is_finite() && form->left.is_finite() && form->right.is_finite();
}

// delta_a * g, delta-_a * g and delta+_a * g summed over the atoms of f.
Distribution expand(const AtomForm& form, const Distribution& g) {
  Distribution out;
  for (const auto& a : all_points(form.point)) out = xor_dist(out, translate_dist(g, a));
  for (const auto& a : all_points(form.left)) out = xor_dist(out, limit_left(translate_dist(g, a)));
  for (const auto& a : all_points(form.right)) out = xor_dist(out, limit_right(translate_dist(g, a)));
  return out;
}

}  // namespace

Distribution convolve(const Distribution& f, const Distribution& g) {
  const Distribution unit = Distribution::delta(0);
  if (f == unit) return g;
  if (g == unit) return f;
  if (f.is_null() || g.is_null()) return {};
  using K = Distribution::Kind;
  if (f.kind() == K::Regular && g.kind() == K::Regular) {
    const auto& s = f.support();
    const auto& t = g.support();
    if (s.is_finite()) return expand(AtomForm{s, {}, {}, Bit::zero()}, g);
    if (t.is_finite()) return expand(AtomForm{t, {}, {}, Bit::zero()}, f);
    const SetClass cs = s.classify();
    const SetClass ct = t.classify();
    if (cs == ct && (cs == SetClass::InferiorlyFinite || cs == SetClass::SuperiorlyFinite)) {
      return Distribution::spike_convolution(s, t);
    }
    throw Error(ErrorCode::ConvolutionUndefined, "convolution of spike trains of classes " +
                                                     std::string(set_class_name(cs)) + " and " +
                                                     std::string(set_class_name(ct)) + " is not defined");
  }
  const auto form = atom_form(f);
  if (finite_atoms(form)) return expand(*form, g);
  throw Error(ErrorCode::ConvolutionUndefined,
              "left factor is not a finite combination of point and lateral atoms");
}

Bit convolve_nested(const Distribution& f, const Distribution& g, const TestFunction& phi) {
  const auto form = atom_form(f);
  if (!finite_atoms(form)) {
    throw Error(ErrorCode::ConvolutionUndefined, "nested evaluation needs a finite atom combination on the left");
  }
  const auto hull = phi.hull();
  if (!hull) return Bit::zero();
  // Inner map t -> <g, phi(. + t)>.
  auto inner = [&](const Rational& t) { return apply(g, translate(phi, -t)); };
  auto one_sided = [&](const Rational& a, bool left) {
    // The inner map can only change where a breakpoint b - t of phi(. + t) meets a critical point c of g.
    const Window w = hull->shifted(-a).widened(1);
    Rational eps(1, 2);
    for (const auto& c : critical_points(g, w)) {
      for (const auto& b : phi.breakpoints()) {
        const Rational d = (b - c - a).abs();
        if (d.sign() != 0) eps = std::min(eps, d / 2);
      }
    }
    const Rational e1 = left ? -eps / 2 : eps / 2;
    const Rational e2 = left ? -eps / 4 : eps / 4;
    const Bit v1 = inner(a + e1);
    if (v1 != inner(a + e2)) throw Error(ErrorCode::LimitNotStabilized, "inner map did not settle at " + a.str());
    return v1;
  };
  Bit acc;
  for (const auto& a : all_points(form->point)) acc ^= inner(a);
  for (const auto& a : all_points(form->left)) acc ^= one_sided(a, true);
  for (const auto& a : all_points(form->right)) acc ^= one_sided(a, false);
  return acc;
}

namespace {

// Finite atom forms as GF(2) vectors over tokens (atom type, abscissa).
using Token = std::pair<int, Rational>;
using Vec = std::set<Token>;

Vec to_vec(const AtomForm& form) {
  Vec v;
  for (const auto& a : all_points(form.point)) v.emplace(0, a);
  for (const auto& a : all_points(form.left)) v.emplace(1, a);
  for (const auto& a : all_points(form.right)) v.emplace(2, a);
  return v;
}

void xor_into(Vec& x, const Vec& y) {
  for (const auto& t : y) {
    if (!x.erase(t)) x.insert(t);
  }
}

class Span {
 public:
  // Returns true when v was independent (and is now part of the basis).
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    const Token pivot = *v.rbegin();
    basis_.emplace(pivot, std::move(v));
    return true;
  }
  bool contains(Vec v) const {
    reduce(v);
    return v.empty();
  }

 private:
  void reduce(Vec& v) const {
    while (!v.empty()) {
      auto it = basis_.find(*v.rbegin());
      if (it == basis_.end()) return;
      xor_into(v, it->second);
    }
  }
  std::map<Token, Vec> basis_;
};

bool agree_on(const std::vector<TestFunction>& panel, const Distribution& x, const Distribution& y) {
  return std::all_of(panel.begin(), panel.end(), [&](const TestFunction& phi) { return apply(x, phi) == apply(y, phi); });
}

// Atom forms are a faithful normal form, so equal forms decide equality exactly; the
// panel is only a fallback for products outside the atom family.
bool same_functional(const std::vector<TestFunction>& panel, const Distribution& x, const Distribution& y) {
  const auto a = atom_form(x);
  const auto b = atom_form(y);
  if (a && b) return a->point == b->point && a->left == b->left && a->right == b->right && a->parity == b->parity;
  return agree_on(panel, x, y);
}

}  // namespace

ClosureReport algebra_closure_check(const ConvolutionAlgebraSpec& spec, const std::vector<TestFunction>& panel) {
  ClosureReport r;
  r.family_closed = true;
  r.span_stable = true;
  std::vector<Distribution> elements;
  Span span;
  for (const auto& g : spec.generators) {
    const auto form = atom_form(g);
    if (!finite_atoms(form)) {
      throw Error(ErrorCode::ClosureFailure, "generator #" + std::to_string(elements.size()) +
                                                 " is not a finite atom combination");
    }
    elements.push_back(g);
    span.insert(to_vec(*form));
  }
  std::size_t checked_upto = 0;  // pairs among elements[0, checked_upto) are done
  for (std::size_t depth = 0; depth < spec.closure_depth; ++depth) {
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < checked_upto && j < checked_upto) continue;
        const std::string label = "element #" + std::to_string(i) + " (*) element #" + std::to_string(j);
        Distribution p;
        try {
          p = convolve(elements[i], elements[j]);
        } catch (const Error& e) {
          throw Error(ErrorCode::ClosureFailure, label + ": " + e.what());
        }
        ++r.products;
        const auto form = atom_form(p);
        if (!finite_atoms(form)) throw Error(ErrorCode::ClosureFailure, label + " leaves the finite atom family");
        const Distribution identified = from_atoms(*form);
        const bool same = std::all_of(panel.begin(), panel.end(), [&](const TestFunction& phi) {
          const Bit v = apply(identified, phi);
          return v == apply(p, phi) && v == convolve_nested(elements[i], elements[j], phi);
        });
        if (!same) throw Error(ErrorCode::ClosureFailure, label + " disagrees with its atom identification");
        if (span.insert(to_vec(*form))) {
          r.span_stable = false;
          elements.push_back(identified);
        }
      }
    }
    checked_upto = n;
  }
  r.elements = elements.size();
  r.unity = span.contains(to_vec(AtomForm{LocallyFiniteSet{Rational(0)}, {}, {}, Bit::zero()}));

  r.commutative = true;
  const std::size_t lim = std::min<std::size_t>(elements.size(), 12);
  for (std::size_t i = 0; i < lim && r.commutative; ++i) {
    for (std::size_t j = i + 1; j < lim && r.commutative; ++j) {
      if (!same_functional(panel, convolve(elements[i], elements[j]), convolve(elements[j], elements[i]))) {
        r.commutative = false;
        r.first_noncommuting = "element #" + std::to_string(i) + " (*) element #" + std::to_string(j);
      }
    }
  }
  r.associative = true;
  const std::size_t gl = std::min<std::size_t>(spec.generators.size(), 6);
  for (std::size_t i = 0; i < gl && r.associative; ++i) {
    for (std::size_t j = 0; j < gl && r.associative; ++j) {
      for (std::size_t k = 0; k < gl && r.associative; ++k) {
        const auto& x = elements[i];
        const auto& y = elements[j];
        const auto& z = elements[k];
        r.associative = same_functional(panel, convolve(convolve(x, y), z), convolve(x, convolve(y, z)));
      }
    }
  }
  return r;
}

}  // namespace bdist
