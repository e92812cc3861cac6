#pragma once

#include <optional>
#include <vector>

#include "bdist/core.hpp"

namespace bdist {

/// Piecewise-constant {0,1}-valued function of one real variable with finitely many
/// breakpoints. Point values at breakpoints are stored separately from the values on
/// the open intervals between them, so any value at a discontinuity is representable.
///
/// Layout: breakpoints b_0 < ... < b_{n-1}; point_values[i] = f(b_i);
/// interval_values[0] is the left tail (-inf, b_0), interval_values[i] the piece
/// (b_{i-1}, b_i) and interval_values[n] the right tail. The stored form is
/// canonical: a breakpoint is dropped when its value equals both neighbours.
class StepFunction {
 public:
  /// The constant function.
  explicit StepFunction(Bit value = Bit::zero());
  /// Builds and canonicalizes; requires interval_values.size() == breakpoints.size() + 1.
  StepFunction(std::vector<Rational> breakpoints, std::vector<Bit> point_values, std::vector<Bit> interval_values);

  static StepFunction constant(Bit v) { return StepFunction(v); }
  /// Indicator of {t}.
  static StepFunction chi_point(const Rational& t);
  /// Indicator of the open interval (a, b); throws ErrorCode::EmptyInterval when a >= b.
  static StepFunction chi_interval(const Rational& a, const Rational& b);
  /// Indicator of (a, +inf) / (-inf, b).
  static StepFunction chi_right_ray(const Rational& a);
  static StepFunction chi_left_ray(const Rational& b);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Bit>& point_values() const { return point_values_; }
  const std::vector<Bit>& interval_values() const { return interval_values_; }
  Bit left_tail() const { return interval_values_.front(); }
  Bit right_tail() const { return interval_values_.back(); }
  bool is_zero() const { return breakpoints_.empty() && !left_tail(); }
  bool is_constant() const { return breakpoints_.empty(); }

  Bit eval(const Rational& t) const;
  /// f(t - 0): value of the open piece immediately left of t.
  Bit left_limit(const Rational& t) const;
  /// f(t + 0).
  Bit right_limit(const Rational& t) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  void canonicalize();
  // Index of the interval containing t when t is not a breakpoint, or the breakpoint index.
  struct Location {
    bool at_breakpoint;
    std::size_t index;
  };
  Location locate(const Rational& t) const;

  std::vector<Rational> breakpoints_;
  std::vector<Bit> point_values_;
  std::vector<Bit> interval_values_;
};

StepFunction xor_fn(const StepFunction& f, const StepFunction& g);
StepFunction and_fn(const StepFunction& f, const StepFunction& g);
/// t -> f(t - tau).
StepFunction translate_fn(const StepFunction& f, const Rational& tau);
/// t -> f(-t).
StepFunction reflect_fn(const StepFunction& f);
/// t -> f(t - 0).
StepFunction limit_fn_left(const StepFunction& f);
/// t -> f(t + 0).
StepFunction limit_fn_right(const StepFunction& f);
/// t -> f(t - 0) ^ f(t).
StepFunction deriv_left(const StepFunction& f);
/// t -> f(t + 0) ^ f(t).
StepFunction deriv_right(const StepFunction& f);

inline StepFunction operator^(const StepFunction& f, const StepFunction& g) { return xor_fn(f, g); }
inline StepFunction operator*(const StepFunction& f, const StepFunction& g) { return and_fn(f, g); }

/// One maximal piece of the support: an open interval on which f is 1 (either end may
/// be unbounded) or a 1-valued point that is not inside such an interval.
struct SupportComponent {
  enum class Kind { Open, Point };
  Kind kind;
  std::optional<Rational> lo;  // nullopt = -inf (Open only)
  std::optional<Rational> hi;  // nullopt = +inf (Open only)

  static SupportComponent point(const Rational& t) { return {Kind::Point, t, t}; }
  static SupportComponent open(std::optional<Rational> a, std::optional<Rational> b) {
    return {Kind::Open, std::move(a), std::move(b)};
  }
  friend bool operator==(const SupportComponent&, const SupportComponent&) = default;
};

struct SupportDescriptor {
  std::vector<SupportComponent> components;  // in increasing order
  bool unbounded_left = false;
  bool unbounded_right = false;
};

SupportDescriptor support_descriptor(const StepFunction& f);

/// Representative abscissas covering every piece: all breakpoints, the midpoint of each
/// bounded piece, and one point in each tail.
std::vector<Rational> sample_points(const StepFunction& f);

}  // namespace bdist
