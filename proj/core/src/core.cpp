#include "bdist/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace bdist {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::ZeroPeriod: return "ZeroPeriod";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::UnboundedSupport: return "UnboundedSupport";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::LimitNotStabilized: return "LimitNotStabilized";
    case ErrorCode::NoVanishingFamily: return "NoVanishingFamily";
    case ErrorCode::ConvolutionUndefined: return "ConvolutionUndefined";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Type: return "TypeError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::Syntax, "malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const BigInt d{std::string(den)};
    if (d == 0) bad_literal(text);
    out = Rational(BigInt(std::string(num)), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_literal(text);
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    out = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    out = Rational(BigInt(std::string(body)));
  }
  return negative ? -out : out;
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Rational rational_lcm(const Rational& a, const Rational& b) {
  // lcm(p1/q1, p2/q2) = lcm(p1, p2) / gcd(q1, q2) for reduced positive fractions.
  BigInt num;
  BigInt den;
  mpz_lcm(num.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  return Rational(num, den);
}

std::size_t RationalHash::operator()(const Rational& r) const {
  return std::hash<std::string>{}(r.str());
}

Window::Window(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(ErrorCode::InvalidWindow, "window with lo > hi");
}

Window Window::hull(const Window& o) const {
  return {std::min(lo_, o.lo_), std::max(hi_, o.hi_)};
}

Bit parity(const BigInt& n) { return Bit(mpz_odd_p(n.get_mpz_t()) != 0); }

std::pair<Bit, Bit> parity_additivity_check(const BigInt& m, const BigInt& n) {
  return {parity(BigInt(m + n)), parity(m) ^ parity(n)};
}

Bit mod2_sum(std::span<const Bit> bits) {
  Bit acc;
  for (Bit b : bits) acc ^= b;
  return acc;
}

}  // namespace bdist
