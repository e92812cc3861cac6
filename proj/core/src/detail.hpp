#pragma once

#include <vector>

#include "bdist/point_sets.hpp"

namespace bdist::detail {

/// Sums xi + eta in w (xi in f, eta in g) reached by an odd number of pairs, sorted.
/// Throws ErrorCode::ConvolutionUndefined when the pair sums are not locally finite.
std::vector<Rational> spike_sums(const LocallyFiniteSet& f, const LocallyFiniteSet& g, const Window& w);

}  // namespace bdist::detail
