#include "bdist/step_fn.hpp"

#include <algorithm>
#include <iterator>

namespace bdist {

StepFunction::StepFunction(Bit value) : interval_values_{value} {}

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Bit> point_values,
                           std::vector<Bit> interval_values)
    : breakpoints_(std::move(breakpoints)),
      point_values_(std::move(point_values)),
      interval_values_(std::move(interval_values)) {
  if (point_values_.size() != breakpoints_.size() || interval_values_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("StepFunction: inconsistent piece counts");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    }
  }
  canonicalize();
}

StepFunction StepFunction::chi_point(const Rational& t) {
  return StepFunction({t}, {Bit::one()}, {Bit::zero(), Bit::zero()});
}

StepFunction StepFunction::chi_interval(const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorCode::EmptyInterval, "empty interval (" + a.str() + ", " + b.str() + ")");
  return StepFunction({a, b}, {Bit::zero(), Bit::zero()}, {Bit::zero(), Bit::one(), Bit::zero()});
}

StepFunction StepFunction::chi_right_ray(const Rational& a) {
  return StepFunction({a}, {Bit::zero()}, {Bit::zero(), Bit::one()});
}

StepFunction StepFunction::chi_left_ray(const Rational& b) {
  return StepFunction({b}, {Bit::zero()}, {Bit::one(), Bit::zero()});
}

void StepFunction::canonicalize() {
  std::vector<Rational> bps;
  std::vector<Bit> pts;
  std::vector<Bit> ivs{interval_values_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Bit left = ivs.back();
    const Bit right = interval_values_[i + 1];
    if (point_values_[i] == left && left == right) continue;  // removable
    bps.push_back(breakpoints_[i]);
    pts.push_back(point_values_[i]);
    ivs.push_back(right);
  }
  breakpoints_ = std::move(bps);
  point_values_ = std::move(pts);
  interval_values_ = std::move(ivs);
}

StepFunction::Location StepFunction::locate(const Rational& t) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto idx = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
  if (it != breakpoints_.end() && *it == t) return {true, idx};
  return {false, idx};
}

Bit StepFunction::eval(const Rational& t) const {
  const auto loc = locate(t);
  return loc.at_breakpoint ? point_values_[loc.index] : interval_values_[loc.index];
}

Bit StepFunction::left_limit(const Rational& t) const {
  // Interval index left of t is the number of breakpoints strictly below t.
  return interval_values_[locate(t).index];
}

Bit StepFunction::right_limit(const Rational& t) const {
  const auto loc = locate(t);
  return interval_values_[loc.at_breakpoint ? loc.index + 1 : loc.index];
}

namespace {

template <typename Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  std::vector<Rational> bps;
  std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
                 std::back_inserter(bps));
  std::vector<Bit> pts;
  std::vector<Bit> ivs;
  pts.reserve(bps.size());
  ivs.reserve(bps.size() + 1);
  ivs.push_back(op(f.left_tail(), g.left_tail()));
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.push_back(op(f.eval(bps[i]), g.eval(bps[i])));
    if (i + 1 < bps.size()) {
      const Rational m = midpoint(bps[i], bps[i + 1]);
      ivs.push_back(op(f.eval(m), g.eval(m)));
    }
  }
  if (!bps.empty()) ivs.push_back(op(f.right_tail(), g.right_tail()));
  return StepFunction(std::move(bps), std::move(pts), std::move(ivs));
}

StepFunction with_point_values(const StepFunction& f, std::vector<Bit> pts, std::vector<Bit> ivs) {
  return StepFunction(f.breakpoints(), std::move(pts), std::move(ivs));
}

}  // namespace

StepFunction xor_fn(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Bit a, Bit b) { return a ^ b; });
}

StepFunction and_fn(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Bit a, Bit b) { return a * b; });
}

StepFunction translate_fn(const StepFunction& f, const Rational& tau) {
  std::vector<Rational> bps;
  bps.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) bps.push_back(b + tau);
  return StepFunction(std::move(bps), f.point_values(), f.interval_values());
}

StepFunction reflect_fn(const StepFunction& f) {
  std::vector<Rational> bps(f.breakpoints().rbegin(), f.breakpoints().rend());
  for (auto& b : bps) b = -b;
  std::vector<Bit> pts(f.point_values().rbegin(), f.point_values().rend());
  std::vector<Bit> ivs(f.interval_values().rbegin(), f.interval_values().rend());
  return StepFunction(std::move(bps), std::move(pts), std::move(ivs));
}

StepFunction limit_fn_left(const StepFunction& f) {
  const auto& iv = f.interval_values();
  std::vector<Bit> pts(iv.begin(), iv.end() - 1);
  return with_point_values(f, std::move(pts), iv);
}

StepFunction limit_fn_right(const StepFunction& f) {
  const auto& iv = f.interval_values();
  std::vector<Bit> pts(iv.begin() + 1, iv.end());
  return with_point_values(f, std::move(pts), iv);
}

StepFunction deriv_left(const StepFunction& f) {
  std::vector<Bit> pts;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    pts.push_back(f.interval_values()[i] ^ f.point_values()[i]);
  }
  return with_point_values(f, std::move(pts), std::vector<Bit>(f.breakpoints().size() + 1));
}

StepFunction deriv_right(const StepFunction& f) {
  std::vector<Bit> pts;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    pts.push_back(f.interval_values()[i + 1] ^ f.point_values()[i]);
  }
  return with_point_values(f, std::move(pts), std::vector<Bit>(f.breakpoints().size() + 1));
}

SupportDescriptor support_descriptor(const StepFunction& f) {
  SupportDescriptor out;
  out.unbounded_left = static_cast<bool>(f.left_tail());
  out.unbounded_right = static_cast<bool>(f.right_tail());
  const auto& bps = f.breakpoints();
  const auto& pts = f.point_values();
  const auto& ivs = f.interval_values();
  const std::size_t n = bps.size();
  if (n == 0) {
    if (f.left_tail()) out.components.push_back(SupportComponent::open(std::nullopt, std::nullopt));
    return out;
  }
  // Walk the pieces left to right; an open component extends across a 1-valued
  // breakpoint whose right neighbour is also 1.
  std::optional<std::optional<Rational>> open_start;  // engaged while inside an open component
  if (ivs[0]) open_start = std::optional<Rational>{};
  for (std::size_t i = 0; i < n; ++i) {
    const bool right_one = static_cast<bool>(ivs[i + 1]);
    const bool here = static_cast<bool>(pts[i]);
    if (open_start) {
      if (here && right_one) continue;  // interior point of the component
      out.components.push_back(SupportComponent::open(*open_start, bps[i]));
      open_start.reset();
      if (here) out.components.push_back(SupportComponent::point(bps[i]));
      if (right_one) open_start = std::optional<Rational>{bps[i]};
    } else {
      if (here) out.components.push_back(SupportComponent::point(bps[i]));
      if (right_one) open_start = std::optional<Rational>{bps[i]};
    }
  }
  if (open_start) out.components.push_back(SupportComponent::open(*open_start, std::nullopt));
  return out;
}

std::vector<Rational> sample_points(const StepFunction& f) {
  const auto& bps = f.breakpoints();
  if (bps.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.reserve(2 * bps.size() + 1);
  out.push_back(bps.front() - Rational(1));
  for (std::size_t i = 0; i < bps.size(); ++i) {
    out.push_back(bps[i]);
    if (i + 1 < bps.size()) out.push_back(midpoint(bps[i], bps[i + 1]));
  }
  out.push_back(bps.back() + Rational(1));
  return out;
}

}  // namespace bdist
