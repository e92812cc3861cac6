#pragma once

#include <gtest/gtest.h>

#include "bdist/dsl.hpp"
#include "bdist/fundamental.hpp"
#include "bdist/oracle.hpp"

namespace bdist::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

inline StepFunction fn(const char* text) { return dsl::eval_fn(dsl::parse(text)); }
inline TestFunction phi(const char* text) { return TestFunction(fn(text)); }
inline Distribution dist(const char* text) { return dsl::eval_dist(dsl::parse(text)); }
inline Distribution raw_dist(const char* text) { return dsl::eval_dist(dsl::parse(text), dsl::EvalMode::Raw); }
inline TestFunction2 fn2(const char* text) { return dsl::eval_fn2(dsl::parse(text)); }
inline LocallyFiniteSet set(const char* text) { return dsl::eval_set(dsl::parse_set(text)); }

inline std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Unrepresentable;
}

}  // namespace bdist::testing
