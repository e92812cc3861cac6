#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bdist/dist.hpp"

namespace bdist {

enum class Axis { T, U };
enum class Side { Left, Right };

/// A B2-valued linear functional on two-variable test functions.
///
/// The default-constructed value is the null distribution (an empty Regular2).
class Distribution2 {
 public:
  enum class Kind { Tensor, Regular2, Xor2, Translate2, PartialLimit, PartialDeriv };

  struct Node {
    Kind kind = Kind::Regular2;
    Distribution f;  // Tensor
    Distribution g;
    std::vector<std::pair<Rational, Rational>> pairs;                     // Regular2, sorted, no repeats
    std::vector<std::pair<LocallyFiniteSet, LocallyFiniteSet>> products;  // Regular2, XORed on top of pairs
    Rational tau;  // Translate2
    Rational nu;
    Axis axis = Axis::T;  // PartialLimit, PartialDeriv
    Side side = Side::Left;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  Distribution2();

  /// Regular2 with finitely many support pairs; a pair listed twice cancels.
  static Distribution2 regular2(std::vector<std::pair<Rational, Rational>> pairs);
  /// Regular2 supported on S x T.
  static Distribution2 product_support(LocallyFiniteSet s, LocallyFiniteSet t);
  static Distribution2 from_node(Node node);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  Distribution2 lhs() const { return Distribution2(node_->a); }
  Distribution2 rhs() const { return Distribution2(node_->b); }
  Distribution2 child() const { return Distribution2(node_->a); }
  bool is_null() const { return kind() == Kind::Regular2 && node_->pairs.empty() && node_->products.empty(); }

 private:
  explicit Distribution2(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Order in which a tensor product evaluates its nested pairings.
enum class Nesting { TFirst, UFirst };

/// For Tensor(f, g) with TFirst: phi'(t) = <g, phi2(t, .)>, result <f, phi'>; UFirst swaps the roles.
Bit apply2(const Distribution2& F, const TestFunction2& phi2, Nesting nesting = Nesting::TFirst);

/// f (x) g; Regular x Regular normalizes to a Regular2 with product support.
Distribution2 tensor(const Distribution& f, const Distribution& g);
Distribution2 xor2(const Distribution2& F, const Distribution2& G);
Distribution2 translate2(const Distribution2& F, const Rational& tau, const Rational& nu);
/// On a Tensor node the operator moves onto the factor of the chosen axis.
Distribution2 partial_limit(const Distribution2& F, Axis axis, Side side);
Distribution2 partial_deriv(const Distribution2& F, Axis axis, Side side);

namespace raw {
Distribution2 tensor(const Distribution& f, const Distribution& g);
Distribution2 partial_limit(const Distribution2& F, Axis axis, Side side);
Distribution2 partial_deriv(const Distribution2& F, Axis axis, Side side);
}  // namespace raw

/// (<f (x) g, phi2>, <g (x) f, transpose(phi2)>).
std::pair<Bit, Bit> commutativity_check(const Distribution& f, const Distribution& g, const TestFunction2& phi2);

/// Critical abscissas of F along one axis inside w.
std::vector<Rational> critical_points2(const Distribution2& F, Axis axis, const Window& w);

/// f * g, defined for: f = Regular({0}) or g = Regular({0}) (unity); Regular * Regular with
/// one finite support or both inferiorly finite or both superiorly finite; f a finite XOR of
/// point and lateral atoms with any g. Throws ErrorCode::ConvolutionUndefined otherwise.
Distribution convolve(const Distribution& f, const Distribution& g);

/// <f(t), <g(u), phi(t + u)>> evaluated directly: point atoms of f read the inner map
/// t -> <g, phi(. + t)> at their abscissa and lateral atoms take its one-sided limit.
/// Requires f to be a finite atom combination without the parity atom.
Bit convolve_nested(const Distribution& f, const Distribution& g, const TestFunction& phi);

struct ConvolutionAlgebraSpec {
  std::vector<Distribution> generators;
  std::size_t closure_depth = 2;
};

struct ClosureReport {
  bool family_closed = false;  // every product is a finite atom combination, checked on the panel
  bool span_stable = false;    // every product already lies in the span of the generators
  bool unity = false;          // Regular({0}) lies in the span of the closed element set
  bool commutative = false;
  bool associative = false;
  std::size_t elements = 0;    // size of the closed element set
  std::size_t products = 0;    // products checked
  std::string first_noncommuting;  // "x (*) y" witness, empty if none

  bool passed() const { return family_closed && unity; }
};

/// Closes the generators under * to the given depth, identifies every product with a
/// finite atom combination and verifies the identification on the panel. Commutativity
/// and associativity are reported, not required; both compare atom forms exactly.
/// Throws ErrorCode::ClosureFailure with the offending product when identification fails.
ClosureReport algebra_closure_check(const ConvolutionAlgebraSpec& spec, const std::vector<TestFunction>& panel);

}  // namespace bdist
