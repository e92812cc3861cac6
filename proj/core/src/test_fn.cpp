#include "bdist/test_fn.hpp"

namespace bdist {

TestFunction::TestFunction(StepFunction f) : fn_(std::move(f)) {
  if (fn_.left_tail() || fn_.right_tail()) {
    throw Error(ErrorCode::UnboundedSupport, "function does not vanish outside a bounded interval");
  }
}

std::optional<Window> TestFunction::hull() const {
  if (fn_.breakpoints().empty()) return std::nullopt;
  return Window(fn_.breakpoints().front(), fn_.breakpoints().back());
}

TestFunction as_test_function(const StepFunction& f) { return TestFunction(f); }

TestFunction scale(const StepFunction& psi, const TestFunction& phi) { return TestFunction(and_fn(psi, phi.fn())); }

TestFunction translate(const TestFunction& phi, const Rational& tau) {
  return TestFunction(translate_fn(phi.fn(), tau));
}

Bit integral(const TestFunction& g) {
  std::uint64_t count = 0;
  for (Bit b : g.fn().interval_values()) {
    if (b) throw Error(ErrorCode::NotIntegrable, "support contains an open interval");
  }
  for (Bit b : g.fn().point_values()) count += b ? 1 : 0;
  return parity(count);
}

ComponentCount component_count(const TestFunction& phi) {
  ComponentCount out;
  for (const auto& c : support_descriptor(phi.fn()).components) {
    if (c.kind == SupportComponent::Kind::Open) {
      ++out.open;
    } else {
      ++out.points;
    }
  }
  return out;
}

}  // namespace bdist
