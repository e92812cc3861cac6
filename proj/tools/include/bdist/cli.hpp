#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bdist/step_fn.hpp"

namespace bdist::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,   // syntax, type, header and usage errors
  kDomainError = 3,  // NotIntegrable, ConvolutionUndefined, UnboundedSupport and the rest
  kNoVanishingFamily = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text waveform: one column per critical abscissa and per midpoint between them.
std::string plot_ascii(const StepFunction& f, const Window& w);
/// Standalone SVG waveform without scripting.
std::string plot_svg(const StepFunction& f, const Window& w);

}  // namespace bdist::cli
