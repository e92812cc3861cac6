#include "bdist/fundamental.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace bdist {

struct FundamentalBundle::Cache {
  std::mutex mu;
  std::map<std::pair<Rational, Rational>, Bit> open;
  std::map<Rational, Bit> point;
  std::map<Rational, Bit> star;
  std::map<Rational, Bit> substar;
};

namespace {

template <typename Key, typename Fn>
Bit memo(std::mutex& mu, std::map<Key, Bit>& table, const Key& key, Fn&& compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  const Bit v = compute();
  std::lock_guard<std::mutex> lock(mu);
  table.emplace(key, v);
  return v;
}

std::vector<Rational> probes_in(const Distribution& f, const Window& w) {
  auto pts = critical_points(f, w);
  pts.push_back(w.lo());
  pts.push_back(w.hi());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

FundamentalBundle::FundamentalBundle(Distribution source)
    : source_(std::move(source)), cache_(std::make_shared<Cache>()) {}

Bit FundamentalBundle::F_open(const Rational& t1, const Rational& t2) const {
  if (!(t1 < t2)) return Bit::zero();
  return memo(cache_->mu, cache_->open, std::pair{t1, t2},
              [&] { return apply(source_, TestFunction::chi_interval(t1, t2)); });
}

Bit FundamentalBundle::F_point(const Rational& t) const {
  return memo(cache_->mu, cache_->point, t, [&] { return apply(source_, TestFunction::chi_point(t)); });
}

Bit FundamentalBundle::F_star(const Rational& t) const {
  return memo(cache_->mu, cache_->star, t, [&] { return one_sided(t, true); });
}

Bit FundamentalBundle::F_substar(const Rational& t) const {
  return memo(cache_->mu, cache_->substar, t, [&] { return one_sided(t, false); });
}

Bit FundamentalBundle::one_sided(const Rational& t, bool left) const {
  auto pts = critical_points(source_, Window(t - 1, t + 1));
  pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Rational eps(1, 2);
  for (std::size_t i = 1; i < pts.size(); ++i) eps = std::min(eps, (pts[i] - pts[i - 1]) / 2);
  auto at = [&](const Rational& e) { return left ? F_open(t - e, t) : F_open(t, t + e); };
  const Bit v1 = at(eps / 2);
  const Bit v2 = at(eps / 4);
  if (v1 != v2) {
    throw Error(ErrorCode::LimitNotStabilized, "one-sided fundamental limit at " + t.str() + " did not settle");
  }
  return v1;
}

SupportWindowReport support_window_report(const FundamentalBundle& b, const Window& w) {
  SupportWindowReport r;
  r.probes = probes_in(b.source(), w);
  for (std::size_t i = 0; i < r.probes.size(); ++i) {
    if (b.F_point(r.probes[i])) r.points.push_back(r.probes[i]);
    if (i + 1 < r.probes.size() && b.F_open(r.probes[i], r.probes[i + 1])) {
      r.pairs.emplace_back(r.probes[i], r.probes[i + 1]);
    }
  }
  return r;
}

namespace {

bool vanishes_inside(const FundamentalBundle& b, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  const Rational q1 = lo + w / 4;
  const Rational q2 = lo + w / 2;
  const Rational q3 = lo + w * Rational(3, 4);
  return !b.F_open(q1, q2) && !b.F_open(q2, q3) && !b.F_open(q1, q3) && !b.F_point(q2);
}

constexpr int kMaxRefinement = 4;

void refine(const FundamentalBundle& b, const Rational& lo, const Rational& hi, int depth, std::vector<Rational>& out) {
  if (vanishes_inside(b, lo, hi)) {
    out.push_back(hi);
    return;
  }
  if (depth == kMaxRefinement) {
    throw Error(ErrorCode::NoVanishingFamily,
                "F does not vanish inside (" + lo.str() + ", " + hi.str() + ") after refinement");
  }
  const Rational m = midpoint(lo, hi);
  refine(b, lo, m, depth + 1, out);
  refine(b, m, hi, depth + 1, out);
}

}  // namespace

std::vector<Rational> decompose(const FundamentalBundle& b, const Window& w) {
  const auto pts = probes_in(b.source(), w);
  std::vector<Rational> out{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i) refine(b, pts[i - 1], pts[i], 0, out);
  return out;
}

Bit FundamentalFunctional::apply(const TestFunction& phi) const {
  const auto& bps = phi.breakpoints();
  Bit acc;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (phi.eval(bps[i])) acc ^= point_(bps[i]);
    if (i + 1 < bps.size() && phi.eval(midpoint(bps[i], bps[i + 1]))) acc ^= pair_(bps[i], bps[i + 1]);
  }
  return acc;
}

FundamentalFunctional from_fundamental(FundamentalFunctional::PairFn pair, FundamentalFunctional::PointFn point) {
  return {std::move(pair), std::move(point)};
}

FundamentalFunctional from_fundamental(const FundamentalBundle& b) {
  return {[b](const Rational& x, const Rational& y) { return b.F_open(x, y); },
          [b](const Rational& t) { return b.F_point(t); }};
}

RegularityVerdict regularity_criterion(const FundamentalBundle& b, const Window& w) {
  const auto crit = probes_in(b.source(), w);
  std::vector<std::pair<Rational, bool>> probes;  // (abscissa, is midpoint)
  for (std::size_t i = 0; i < crit.size(); ++i) {
    probes.emplace_back(crit[i], false);
    if (i + 1 < crit.size()) probes.emplace_back(midpoint(crit[i], crit[i + 1]), true);
  }
  RegularityVerdict v;
  v.window = w;
  for (const auto& [t, mid] : probes) {
    const char* which = nullptr;
    if (b.F_star(t)) {
      which = "F*";
    } else if (b.F_substar(t)) {
      which = "F_*";
    } else if (mid && b.F_point(t)) {
      which = "F0";
    }
    if (which) {
      v.kind = RegularityVerdict::Kind::SingularWitness;
      v.at = t;
      v.which = which;
      return v;
    }
  }
  return v;
}

std::string to_string(const RegularityVerdict& v) {
  if (v.kind == RegularityVerdict::Kind::RegularOnWindow) {
    return "REGULAR on [" + v.window.lo().str() + ", " + v.window.hi().str() + "]";
  }
  return "SINGULAR at t=" + v.at.str() + " (" + v.which + ")";
}

FundamentalTable fundamental_table(const FundamentalBundle& b, const Window& w) {
  FundamentalTable t;
  const auto pts = probes_in(b.source(), w);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t.rows.push_back({pts[i], b.F_point(pts[i]), b.F_star(pts[i]), b.F_substar(pts[i])});
    if (i + 1 < pts.size()) t.pairs.push_back({pts[i], pts[i + 1], b.F_open(pts[i], pts[i + 1])});
  }
  return t;
}

}  // namespace bdist
