#pragma once

// Scalar layer shared by every other module: the two-element Boolean ring,
// exact rational abscissas, closed windows and the error type.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace bdist {

/// Element of the Boolean ring {0, 1}: `^` is addition mod 2, `*` and `&` are multiplication.
class Bit {
 public:
  constexpr Bit() = default;
  constexpr explicit Bit(bool v) : value_(v) {}

  static constexpr Bit zero() { return Bit(false); }
  static constexpr Bit one() { return Bit(true); }

  constexpr bool value() const { return value_; }
  constexpr explicit operator bool() const { return value_; }
  constexpr int as_int() const { return value_ ? 1 : 0; }

  friend constexpr Bit operator^(Bit a, Bit b) { return Bit(a.value_ != b.value_); }
  friend constexpr Bit operator*(Bit a, Bit b) { return Bit(a.value_ && b.value_); }
  friend constexpr Bit operator&(Bit a, Bit b) { return a * b; }
  constexpr Bit& operator^=(Bit o) { return *this = *this ^ o; }
  constexpr Bit& operator*=(Bit o) { return *this = *this * o; }
  friend constexpr bool operator==(Bit, Bit) = default;

 private:
  bool value_ = false;
};

inline std::string to_string(Bit b) { return b ? "1" : "0"; }

enum class ErrorCode {
  EmptyInterval,
  InvalidWindow,
  ZeroPeriod,
  Unrepresentable,
  UnboundedSupport,
  NotIntegrable,
  LimitNotStabilized,
  NoVanishingFamily,
  ConvolutionUndefined,
  ClosureFailure,
  UnknownSuite,
  Syntax,
  Type,
  VersionMismatch,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

using BigInt = mpz_class;

/// Exact rational number with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts `p/q`, plain integers and finite decimals (`-0.125`), converted exactly.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Canonical text: integers as `n`, others as `p/q`.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational midpoint(const Rational& a, const Rational& b);
/// Least common multiple of two positive rationals (the smallest positive common multiple).
Rational rational_lcm(const Rational& a, const Rational& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

/// Closed interval [lo, hi] of the time axis.
class Window {
 public:
  Window(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& t) const { return lo_ <= t && t <= hi_; }
  Window shifted(const Rational& by) const { return {lo_ + by, hi_ + by}; }
  Window widened(const Rational& by) const { return {lo_ - by, hi_ + by}; }
  Window hull(const Window& o) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// 1 iff `n` is odd.
Bit parity(const BigInt& n);
inline Bit parity(std::uint64_t n) { return Bit((n & 1U) != 0); }

/// Returns (parity(m + n), parity(m) ^ parity(n)); the two components always agree.
std::pair<Bit, Bit> parity_additivity_check(const BigInt& m, const BigInt& n);

/// XOR of a finite sequence; the empty sequence sums to 0.
Bit mod2_sum(std::span<const Bit> bits);
inline Bit mod2_sum(std::initializer_list<Bit> bits) {
  return mod2_sum(std::span<const Bit>(bits.begin(), bits.size()));
}

}  // namespace bdist
