#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bdist/core.hpp"

namespace bdist {

enum class ProgressionRange { AllIntegers, NonNegative, NonPositive };

/// {offset + z * period} with z ranging over `range`.
struct Progression {
  Rational offset;
  Rational period;
  ProgressionRange range = ProgressionRange::AllIntegers;

  friend bool operator==(const Progression&, const Progression&) = default;
};

enum class SetClass { Finite, InferiorlyFinite, SuperiorlyFinite, LocallyFiniteOnly };

std::string_view set_class_name(SetClass c);

/// A locally finite subset of the rationals: finitely many arithmetic progressions
/// (the backbone) XOR a finite correction list.
///
/// Internally every progression is split into residue classes modulo one common
/// period (the lcm of all periods), so symmetric difference, intersection and
/// equality are computed class by class. A class is either a full progression,
/// an upward ray or a downward ray. The stored form is normalised: corrections
/// never sit on the first element of a ray nor just before it, and the common
/// period is as coarse as the set allows.
class LocallyFiniteSet {
 public:
  LocallyFiniteSet() = default;
  /// Finite set; duplicates are collapsed (set semantics).
  explicit LocallyFiniteSet(std::vector<Rational> points);
  LocallyFiniteSet(std::initializer_list<Rational> points)
      : LocallyFiniteSet(std::vector<Rational>(points)) {}

  /// Throws ErrorCode::ZeroPeriod unless period > 0.
  static LocallyFiniteSet progression(const Rational& offset, const Rational& period,
                                      ProgressionRange range = ProgressionRange::AllIntegers);
  static LocallyFiniteSet progression(const Progression& p) {
    return progression(p.offset, p.period, p.range);
  }

  bool contains(const Rational& t) const;
  /// Members inside [w.lo, w.hi], strictly increasing.
  std::vector<Rational> enumerate(const Window& w) const;

  bool empty() const { return classes_.empty() && corrections_.empty(); }
  bool is_finite() const { return classes_.empty(); }
  SetClass classify() const;

  /// Smallest member; defined for nonempty inferiorly finite (or finite) sets.
  std::optional<Rational> min() const;
  /// Largest member; defined for nonempty superiorly finite (or finite) sets.
  std::optional<Rational> max() const;

  LocallyFiniteSet sym_diff(const LocallyFiniteSet& other) const;
  LocallyFiniteSet intersect(const LocallyFiniteSet& other) const;
  LocallyFiniteSet unite(const LocallyFiniteSet& other) const;
  LocallyFiniteSet translated(const Rational& tau) const;
  LocallyFiniteSet reflected() const;
  /// Members t with t < bound (or t <= bound when inclusive).
  LocallyFiniteSet below(const Rational& bound, bool inclusive) const;
  /// Members t with t > bound (or t >= bound when inclusive).
  LocallyFiniteSet above(const Rational& bound, bool inclusive) const;

  /// Backbone progressions of the normalised form (pairwise disjoint).
  std::vector<Progression> backbone() const;
  /// Finite correction list, XORed against the backbone.
  const std::vector<Rational>& corrections() const { return corrections_; }
  /// Common period of the backbone, if any.
  const std::optional<Rational>& period() const { return period_; }

  friend bool operator==(const LocallyFiniteSet& a, const LocallyFiniteSet& b);

  enum class RayKind { Full, Up, Down };
  struct ResidueClass {
    RayKind kind = RayKind::Full;
    BigInt bound;  // first index for Up, last index for Down; unused for Full
  };
  using ClassMap = std::map<Rational, ResidueClass>;

 private:
  LocallyFiniteSet(std::optional<Rational> period, ClassMap classes, std::vector<Rational> corrections);

  LocallyFiniteSet refined(const Rational& period) const;
  void normalize();
  void coarsen();
  bool backbone_contains(const Rational& t) const;

  std::optional<Rational> period_;
  ClassMap classes_;  // residue in [0, period) -> ray
  std::vector<Rational> corrections_;
};

LocallyFiniteSet sym_diff(const LocallyFiniteSet& a, const LocallyFiniteSet& b);
LocallyFiniteSet translate_set(const LocallyFiniteSet& s, const Rational& tau);
LocallyFiniteSet reflect_set(const LocallyFiniteSet& s);
inline std::vector<Rational> enumerate(const LocallyFiniteSet& s, const Window& w) {
  return s.enumerate(w);
}
inline SetClass classify(const LocallyFiniteSet& s) { return s.classify(); }

}  // namespace bdist
