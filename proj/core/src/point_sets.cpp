#include "bdist/point_sets.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace bdist {

namespace {

using RayKind = LocallyFiniteSet::RayKind;
using ResidueClass = LocallyFiniteSet::ResidueClass;
using ClassMap = LocallyFiniteSet::ClassMap;

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> xor_sorted(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// r = t mod period, in [0, period).
Rational residue_of(const Rational& t, const Rational& period) {
  const Rational k((t / period).floor());
  return t - k * period;
}

Rational element(const Rational& residue, const BigInt& z, const Rational& period) {
  return residue + Rational(z) * period;
}

bool in_sorted(const std::vector<Rational>& v, const Rational& t) {
  return std::binary_search(v.begin(), v.end(), t);
}

bool erase_sorted(std::vector<Rational>& v, const Rational& t) {
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it == v.end() || *it != t) return false;
  v.erase(it);
  return true;
}

void toggle_sorted(std::vector<Rational>& v, const Rational& t) {
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it != v.end() && *it == t) {
    v.erase(it);
  } else {
    v.insert(it, t);
  }
}

bool class_has_index(const ResidueClass& c, const BigInt& z) {
  switch (c.kind) {
    case RayKind::Full: return true;
    case RayKind::Up: return z >= c.bound;
    case RayKind::Down: return z <= c.bound;
  }
  return false;
}

// Indices z in [from, to] as elements of residue class r.
void push_range(std::vector<Rational>& out, const Rational& r, const Rational& period,
                const BigInt& from, const BigInt& to) {
  for (BigInt z = from; z <= to; ++z) out.push_back(element(r, z, period));
}

struct ClassXor {
  std::optional<ResidueClass> cls;
  std::vector<Rational> finite;
};

// Symmetric difference of two rays on the same residue class.
ClassXor xor_classes(const ResidueClass& a, const ResidueClass& b, const Rational& r, const Rational& period) {
  ClassXor out;
  auto finite = [&](const BigInt& from, const BigInt& to) { push_range(out.finite, r, period, from, to); };
  const auto ka = a.kind;
  const auto kb = b.kind;
  if (ka == RayKind::Full && kb == RayKind::Full) return out;
  if (ka == RayKind::Full || kb == RayKind::Full) {
    const ResidueClass& ray = ka == RayKind::Full ? b : a;
    if (ray.kind == RayKind::Up) {
      out.cls = ResidueClass{RayKind::Down, ray.bound - 1};
    } else {
      out.cls = ResidueClass{RayKind::Up, ray.bound + 1};
    }
    return out;
  }
  if (ka == kb) {
    const BigInt lo = std::min(a.bound, b.bound);
    const BigInt hi = std::max(a.bound, b.bound);
    if (ka == RayKind::Up) {
      finite(lo, hi - 1);
    } else {
      finite(lo + 1, hi);
    }
    return out;
  }
  const ResidueClass& up = ka == RayKind::Up ? a : b;
  const ResidueClass& down = ka == RayKind::Up ? b : a;
  out.cls = ResidueClass{RayKind::Full, 0};
  if (down.bound < up.bound) {
    finite(down.bound + 1, up.bound - 1);
  } else {
    finite(up.bound, down.bound);
  }
  return out;
}

// Intersection of two rays on the same residue class.
ClassXor intersect_classes(const ResidueClass& a, const ResidueClass& b, const Rational& r, const Rational& period) {
  ClassXor out;
  if (a.kind == RayKind::Full) { out.cls = b; return out; }
  if (b.kind == RayKind::Full) { out.cls = a; return out; }
  if (a.kind == b.kind) {
    out.cls = ResidueClass{a.kind, a.kind == RayKind::Up ? std::max(a.bound, b.bound) : std::min(a.bound, b.bound)};
    return out;
  }
  const ResidueClass& up = a.kind == RayKind::Up ? a : b;
  const ResidueClass& down = a.kind == RayKind::Up ? b : a;
  if (up.bound <= down.bound) push_range(out.finite, r, period, up.bound, down.bound);
  return out;
}

}  // namespace

std::string_view set_class_name(SetClass c) {
  switch (c) {
    case SetClass::Finite: return "Finite";
    case SetClass::InferiorlyFinite: return "InferiorlyFinite";
    case SetClass::SuperiorlyFinite: return "SuperiorlyFinite";
    case SetClass::LocallyFiniteOnly: return "LocallyFiniteOnly";
  }
  return "?";
}

LocallyFiniteSet::LocallyFiniteSet(std::vector<Rational> points) : corrections_(sorted_unique(std::move(points))) {}

LocallyFiniteSet::LocallyFiniteSet(std::optional<Rational> period, ClassMap classes, std::vector<Rational> corrections)
    : period_(std::move(period)), classes_(std::move(classes)), corrections_(std::move(corrections)) {
  if (classes_.empty()) period_.reset();
  normalize();
}

LocallyFiniteSet LocallyFiniteSet::progression(const Rational& offset, const Rational& period, ProgressionRange range) {
  if (period.sign() <= 0) {
    throw Error(ErrorCode::ZeroPeriod, "progression period must be positive, got " + period.str());
  }
  const Rational r = residue_of(offset, period);
  const BigInt z0 = ((offset - r) / period).floor();
  ResidueClass cls;
  switch (range) {
    case ProgressionRange::AllIntegers: cls = {RayKind::Full, 0}; break;
    case ProgressionRange::NonNegative: cls = {RayKind::Up, z0}; break;
    case ProgressionRange::NonPositive: cls = {RayKind::Down, z0}; break;
  }
  ClassMap classes;
  classes.emplace(r, cls);
  return LocallyFiniteSet(period, std::move(classes), {});
}

bool LocallyFiniteSet::backbone_contains(const Rational& t) const {
  if (!period_) return false;
  const Rational r = residue_of(t, *period_);
  const auto it = classes_.find(r);
  if (it == classes_.end()) return false;
  const BigInt z = ((t - r) / *period_).floor();
  return class_has_index(it->second, z);
}

bool LocallyFiniteSet::contains(const Rational& t) const {
  return backbone_contains(t) != in_sorted(corrections_, t);
}

std::vector<Rational> LocallyFiniteSet::enumerate(const Window& w) const {
  std::vector<Rational> backbone_pts;
  if (period_) {
    const Rational& p = *period_;
    for (const auto& [r, cls] : classes_) {
      BigInt from = ((w.lo() - r) / p).ceil();
      BigInt to = ((w.hi() - r) / p).floor();
      if (cls.kind == RayKind::Up) from = std::max(from, cls.bound);
      if (cls.kind == RayKind::Down) to = std::min(to, cls.bound);
      push_range(backbone_pts, r, p, from, to);
    }
    std::sort(backbone_pts.begin(), backbone_pts.end());
  }
  const auto lo = std::lower_bound(corrections_.begin(), corrections_.end(), w.lo());
  const auto hi = std::upper_bound(corrections_.begin(), corrections_.end(), w.hi());
  std::vector<Rational> local(lo, hi);
  return xor_sorted(backbone_pts, local);
}

SetClass LocallyFiniteSet::classify() const {
  if (classes_.empty()) return SetClass::Finite;
  const bool all_up = std::all_of(classes_.begin(), classes_.end(), [](const auto& kv) { return kv.second.kind == RayKind::Up; });
  if (all_up) return SetClass::InferiorlyFinite;
  const bool all_down = std::all_of(classes_.begin(), classes_.end(), [](const auto& kv) { return kv.second.kind == RayKind::Down; });
  if (all_down) return SetClass::SuperiorlyFinite;
  return SetClass::LocallyFiniteOnly;
}

std::optional<Rational> LocallyFiniteSet::min() const {
  if (empty()) return std::nullopt;
  const auto k = classify();
  if (k != SetClass::Finite && k != SetClass::InferiorlyFinite) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& [r, cls] : classes_) {
    const Rational first = element(r, cls.bound, *period_);
    if (!best || first < *best) best = first;
  }
  for (const auto& t : corrections_) {
    if (!backbone_contains(t)) {
      if (!best || t < *best) best = t;
      break;
    }
  }
  return best;
}

std::optional<Rational> LocallyFiniteSet::max() const {
  if (empty()) return std::nullopt;
  const auto k = classify();
  if (k != SetClass::Finite && k != SetClass::SuperiorlyFinite) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& [r, cls] : classes_) {
    const Rational last = element(r, cls.bound, *period_);
    if (!best || last > *best) best = last;
  }
  for (auto it = corrections_.rbegin(); it != corrections_.rend(); ++it) {
    if (!backbone_contains(*it)) {
      if (!best || *it > *best) best = *it;
      break;
    }
  }
  return best;
}

LocallyFiniteSet LocallyFiniteSet::refined(const Rational& period) const {
  if (!period_ || *period_ == period) {
    LocallyFiniteSet copy = *this;
    if (copy.period_) copy.period_ = period;
    return copy;
  }
  const Rational ratio = period / *period_;
  if (!ratio.is_integer() || ratio.sign() <= 0) throw std::logic_error("refinement to a non-multiple period");
  const BigInt m = ratio.numerator();
  ClassMap fine;
  for (const auto& [r, cls] : classes_) {
    for (BigInt j = 0; j < m; ++j) {
      const Rational rj = r + Rational(j) * *period_;
      ResidueClass sub{cls.kind, 0};
      // index z = j + m*k of the coarse class maps to index k of the fine class.
      if (cls.kind == RayKind::Up) {
        sub.bound = Rational(BigInt(cls.bound - j), m).ceil();
      } else if (cls.kind == RayKind::Down) {
        sub.bound = Rational(BigInt(cls.bound - j), m).floor();
      }
      fine.emplace(rj, sub);
    }
  }
  LocallyFiniteSet out;
  out.period_ = period;
  out.classes_ = std::move(fine);
  out.corrections_ = corrections_;
  return out;
}

void LocallyFiniteSet::normalize() {
  if (classes_.empty()) {
    period_.reset();
    return;
  }
  const Rational& p = *period_;
  for (auto& [r, cls] : classes_) {
    if (cls.kind == RayKind::Full) continue;
    const int step = cls.kind == RayKind::Up ? 1 : -1;
    // A removed first element shortens the ray; an added neighbour extends it.
    while (erase_sorted(corrections_, element(r, cls.bound, p))) cls.bound += step;
    while (erase_sorted(corrections_, element(r, BigInt(cls.bound - step), p))) cls.bound -= step;
  }
  coarsen();
}

void LocallyFiniteSet::coarsen() {
  bool changed = true;
  while (changed && !classes_.empty()) {
    changed = false;
    const std::size_t n = classes_.size();
    for (std::size_t m = n; m >= 2 && !changed; --m) {
      if (n % m != 0) continue;
      const Rational coarse = *period_ / Rational(static_cast<long>(m));
      ClassMap merged;
      bool ok = true;
      for (const auto& [r, cls] : classes_) {
        if (!ok) break;
        if (r >= coarse) continue;
        std::vector<BigInt> indices;
        for (std::size_t j = 0; j < m && ok; ++j) {
          const auto it = classes_.find(r + Rational(static_cast<long>(j)) * coarse);
          if (it == classes_.end() || it->second.kind != cls.kind) {
            ok = false;
            break;
          }
          // Position of the ray's endpoint on the coarse lattice r + i*coarse.
          indices.push_back(BigInt(static_cast<long>(j)) + BigInt(static_cast<long>(m)) * it->second.bound);
        }
        if (!ok) break;
        ResidueClass out{cls.kind, 0};
        if (cls.kind != RayKind::Full) {
          std::sort(indices.begin(), indices.end());
          for (std::size_t j = 1; j < indices.size(); ++j) {
            if (indices[j] != indices[j - 1] + 1) ok = false;
          }
          out.bound = cls.kind == RayKind::Up ? indices.front() : indices.back();
        }
        merged.emplace(r, out);
      }
      if (ok && merged.size() * m == n) {
        classes_ = std::move(merged);
        period_ = coarse;
        changed = true;
      }
    }
  }
}

LocallyFiniteSet LocallyFiniteSet::sym_diff(const LocallyFiniteSet& other) const {
  if (!period_ && !other.period_) return LocallyFiniteSet(std::nullopt, {}, xor_sorted(corrections_, other.corrections_));
  const Rational p = !period_ ? *other.period_ : (!other.period_ ? *period_ : rational_lcm(*period_, *other.period_));
  const LocallyFiniteSet a = refined(p);
  const LocallyFiniteSet b = other.refined(p);
  ClassMap classes = a.classes_;
  std::vector<Rational> extra;
  for (const auto& [r, cls] : b.classes_) {
    auto it = classes.find(r);
    if (it == classes.end()) {
      classes.emplace(r, cls);
      continue;
    }
    ClassXor x = xor_classes(it->second, cls, r, p);
    extra.insert(extra.end(), x.finite.begin(), x.finite.end());
    if (x.cls) {
      it->second = *x.cls;
    } else {
      classes.erase(it);
    }
  }
  auto corr = xor_sorted(xor_sorted(a.corrections_, b.corrections_), sorted_unique(std::move(extra)));
  return LocallyFiniteSet(p, std::move(classes), std::move(corr));
}

LocallyFiniteSet LocallyFiniteSet::intersect(const LocallyFiniteSet& other) const {
  std::optional<Rational> p;
  if (period_ && other.period_) p = rational_lcm(*period_, *other.period_);
  ClassMap classes;
  std::vector<Rational> finite;
  if (p) {
    const LocallyFiniteSet a = refined(*p);
    const LocallyFiniteSet b = other.refined(*p);
    for (const auto& [r, cls] : a.classes_) {
      const auto it = b.classes_.find(r);
      if (it == b.classes_.end()) continue;
      ClassXor x = intersect_classes(cls, it->second, r, *p);
      finite.insert(finite.end(), x.finite.begin(), x.finite.end());
      if (x.cls) classes.emplace(r, *x.cls);
    }
  }
  LocallyFiniteSet base(p, std::move(classes), sorted_unique(std::move(finite)));
  // Outside the union of both correction lists the intersection equals the backbone intersection.
  std::vector<Rational> candidates;
  std::set_union(corrections_.begin(), corrections_.end(), other.corrections_.begin(), other.corrections_.end(),
                 std::back_inserter(candidates));
  std::vector<Rational> fix;
  for (const auto& t : candidates) {
    if ((contains(t) && other.contains(t)) != base.contains(t)) fix.push_back(t);
  }
  if (fix.empty()) return base;
  return base.sym_diff(LocallyFiniteSet(std::move(fix)));
}

LocallyFiniteSet LocallyFiniteSet::unite(const LocallyFiniteSet& other) const {
  return sym_diff(other).sym_diff(intersect(other));
}

LocallyFiniteSet LocallyFiniteSet::translated(const Rational& tau) const {
  std::vector<Rational> corr;
  corr.reserve(corrections_.size());
  for (const auto& t : corrections_) corr.push_back(t + tau);
  if (!period_) return LocallyFiniteSet(std::nullopt, {}, std::move(corr));
  const Rational& p = *period_;
  ClassMap classes;
  for (const auto& [r, cls] : classes_) {
    const Rational shifted = r + tau;
    const Rational r2 = residue_of(shifted, p);
    const BigInt k = ((shifted - r2) / p).floor();
    ResidueClass c2 = cls;
    if (c2.kind != RayKind::Full) c2.bound += k;
    classes.emplace(r2, c2);
  }
  return LocallyFiniteSet(p, std::move(classes), std::move(corr));
}

LocallyFiniteSet LocallyFiniteSet::reflected() const {
  std::vector<Rational> corr;
  corr.reserve(corrections_.size());
  for (auto it = corrections_.rbegin(); it != corrections_.rend(); ++it) corr.push_back(-*it);
  if (!period_) return LocallyFiniteSet(std::nullopt, {}, std::move(corr));
  const Rational& p = *period_;
  ClassMap classes;
  for (const auto& [r, cls] : classes_) {
    // -(r + z p) = r2 + (k - z) p with -r = r2 + k p.
    const Rational neg = -r;
    const Rational r2 = residue_of(neg, p);
    const BigInt k = ((neg - r2) / p).floor();
    ResidueClass c2{RayKind::Full, 0};
    if (cls.kind == RayKind::Up) c2 = {RayKind::Down, k - cls.bound};
    if (cls.kind == RayKind::Down) c2 = {RayKind::Up, k - cls.bound};
    classes.emplace(r2, c2);
  }
  return LocallyFiniteSet(p, std::move(classes), std::move(corr));
}

LocallyFiniteSet LocallyFiniteSet::below(const Rational& bound, bool inclusive) const {
  auto keep = [&](const Rational& t) { return inclusive ? t <= bound : t < bound; };
  std::vector<Rational> corr;
  for (const auto& t : corrections_) {
    if (keep(t)) corr.push_back(t);
  }
  if (!period_) return LocallyFiniteSet(std::nullopt, {}, std::move(corr));
  const Rational& p = *period_;
  ClassMap classes;
  std::vector<Rational> finite;
  for (const auto& [r, cls] : classes_) {
    const Rational q = (bound - r) / p;
    BigInt zmax = q.floor();
    if (!inclusive && q.is_integer()) zmax -= 1;
    switch (cls.kind) {
      case RayKind::Full: classes.emplace(r, ResidueClass{RayKind::Down, zmax}); break;
      case RayKind::Down: classes.emplace(r, ResidueClass{RayKind::Down, std::min(zmax, cls.bound)}); break;
      case RayKind::Up: push_range(finite, r, p, cls.bound, zmax); break;
    }
  }
  return LocallyFiniteSet(p, std::move(classes), xor_sorted(corr, sorted_unique(std::move(finite))));
}

LocallyFiniteSet LocallyFiniteSet::above(const Rational& bound, bool inclusive) const {
  return reflected().below(-bound, inclusive).reflected();
}

std::vector<Progression> LocallyFiniteSet::backbone() const {
  std::vector<Progression> out;
  if (!period_) return out;
  for (const auto& [r, cls] : classes_) {
    switch (cls.kind) {
      case RayKind::Full: out.push_back({r, *period_, ProgressionRange::AllIntegers}); break;
      case RayKind::Up: out.push_back({element(r, cls.bound, *period_), *period_, ProgressionRange::NonNegative}); break;
      case RayKind::Down: out.push_back({element(r, cls.bound, *period_), *period_, ProgressionRange::NonPositive}); break;
    }
  }
  return out;
}

bool operator==(const LocallyFiniteSet& a, const LocallyFiniteSet& b) {
  if (a.is_finite() != b.is_finite()) return false;
  if (a.is_finite()) return a.corrections_ == b.corrections_;
  // Equal sets differ by the empty set; the normalised difference is empty iff it has no rays and no corrections.
  return a.sym_diff(b).empty();
}

LocallyFiniteSet sym_diff(const LocallyFiniteSet& a, const LocallyFiniteSet& b) { return a.sym_diff(b); }
LocallyFiniteSet translate_set(const LocallyFiniteSet& s, const Rational& tau) { return s.translated(tau); }
LocallyFiniteSet reflect_set(const LocallyFiniteSet& s) { return s.reflected(); }

}  // namespace bdist
