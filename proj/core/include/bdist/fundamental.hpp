#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bdist/dist.hpp"

namespace bdist {

/// The fundamental functions of a distribution f:
/// F(t', t'') = <f, chi((t', t''))>, F0(t) = <f, chi({t})>, and the one-sided limits
/// F*(t) = F(t - 0, t), F_*(t) = F(t, t + 0).
///
/// Copies share one memo cache; lookups and inserts are serialized by a mutex.
class FundamentalBundle {
 public:
  explicit FundamentalBundle(Distribution source);

  const Distribution& source() const { return source_; }

  /// 0 when t1 >= t2.
  Bit F_open(const Rational& t1, const Rational& t2) const;
  Bit F_point(const Rational& t) const;
  /// Throws ErrorCode::LimitNotStabilized if the two confirmation epsilons disagree.
  Bit F_star(const Rational& t) const;
  Bit F_substar(const Rational& t) const;

 private:
  struct Cache;
  Bit one_sided(const Rational& t, bool left) const;

  Distribution source_;
  std::shared_ptr<Cache> cache_;
};

/// Indicator of (t1, t2) lying in the support of F.
inline Bit support_indicator(const FundamentalBundle& b, const Rational& t1, const Rational& t2) {
  return b.F_open(t1, t2);
}

struct SupportWindowReport {
  std::vector<Rational> probes;  // critical abscissas of the source in w plus w's ends
  std::vector<Rational> points;  // probes with F0 = 1
  std::vector<std::pair<Rational, Rational>> pairs;  // adjacent probe pairs with F = 1
};

SupportWindowReport support_window_report(const FundamentalBundle& b, const Window& w);

/// Strictly increasing abscissas t_0 = w.lo < ... < t_n = w.hi such that F and F0 vanish
/// inside every open piece (t_i, t_{i+1}). Starts from the critical abscissas and bisects
/// a failing piece a few times before giving up with ErrorCode::NoVanishingFamily.
std::vector<Rational> decompose(const FundamentalBundle& b, const Window& w);

/// The functional phi -> XOR_i F_point(t_i) phi(t_i) ^ XOR_i F_pair(t_i, t_{i+1}) phi(m_i)
/// over phi's breakpoints t_i and the midpoints m_i between them.
class FundamentalFunctional {
 public:
  using PairFn = std::function<Bit(const Rational&, const Rational&)>;
  using PointFn = std::function<Bit(const Rational&)>;

  FundamentalFunctional(PairFn pair, PointFn point) : pair_(std::move(pair)), point_(std::move(point)) {}

  Bit apply(const TestFunction& phi) const;

 private:
  PairFn pair_;
  PointFn point_;
};

FundamentalFunctional from_fundamental(FundamentalFunctional::PairFn pair, FundamentalFunctional::PointFn point);
FundamentalFunctional from_fundamental(const FundamentalBundle& b);

struct RegularityVerdict {
  enum class Kind { RegularOnWindow, SingularWitness };
  Kind kind = Kind::RegularOnWindow;
  Window window{0, 0};
  Rational at;        // witness abscissa when singular
  std::string which;  // "F*", "F_*" or "F0"
};

/// Probes F*, F_* at the critical abscissas, window ends and midpoints, and F0 at the
/// midpoints (where it must vanish for F0 to have isolated 1-points).
RegularityVerdict regularity_criterion(const FundamentalBundle& b, const Window& w);

/// "REGULAR on [A, B]" or "SINGULAR at t=T (WHICH)".
std::string to_string(const RegularityVerdict& v);

struct FundamentalRow {
  Rational t;
  Bit f0;
  Bit f_star;
  Bit f_substar;
};

struct FundamentalPair {
  Rational lo;
  Rational hi;
  Bit f;
};

struct FundamentalTable {
  std::vector<FundamentalRow> rows;
  std::vector<FundamentalPair> pairs;
};

/// F0, F*, F_* at the critical abscissas of the source in w (plus w's ends) and F on adjacent pairs.
FundamentalTable fundamental_table(const FundamentalBundle& b, const Window& w);

}  // namespace bdist
