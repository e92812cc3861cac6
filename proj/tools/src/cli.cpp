#include "bdist/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "bdist/fundamental.hpp"
#include "bdist/oracle.hpp"

namespace bdist::cli {

namespace {

// Inline expression, or the body of a .bd file after its header.
std::string source_text(const std::string& value) {
  if (value.size() > 3 && value.ends_with(".bd")) {
    std::ifstream in(value, std::ios::binary);
    if (!in) throw Error(ErrorCode::Syntax, "cannot read '" + value + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::string(dsl::strip_header(buf.str()));
  }
  return value;
}

dsl::Ast parse_as(const std::string& value, dsl::Sort want) {
  const dsl::Ast a = dsl::parse(source_text(value));
  const dsl::Sort got = dsl::sort_of(a);
  if (got != want) {
    throw Error(ErrorCode::Type, "expected a " + std::string(dsl::sort_name(want)) + ", got a " +
                                     std::string(dsl::sort_name(got)));
  }
  return a;
}

Distribution read_dist(const std::string& v) { return dsl::eval_dist(parse_as(v, dsl::Sort::Dist)); }
StepFunction read_fn(const std::string& v) { return dsl::eval_fn(parse_as(v, dsl::Sort::Fn)); }
TestFunction read_test_fn(const std::string& v) { return TestFunction(read_fn(v)); }
TestFunction2 read_fn2(const std::string& v) { return dsl::eval_fn2(parse_as(v, dsl::Sort::Fn2)); }

Window read_window(const std::vector<std::string>& ends) {
  return Window(Rational::parse(ends.at(0)), Rational::parse(ends.at(1)));
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax:
    case ErrorCode::Type:
    case ErrorCode::VersionMismatch:
    case ErrorCode::EmptyInterval:
    case ErrorCode::ZeroPeriod:
    case ErrorCode::UnknownSuite:
      return kParseError;
    default:
      return kDomainError;
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("BDIST_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Syntax, std::string("BDIST_SEED is not a number: '") + s + "'");
    }
  }
  return 1;
}

void print_table(const FundamentalBundle& b, const Window& w, std::ostream& out) {
  const FundamentalTable tab = fundamental_table(b, w);
  std::size_t width = 1;
  for (const auto& r : tab.rows) width = std::max(width, r.t.str().size());
  out << "source: " << dsl::to_text(b.source()) << "\n";
  out << "window: [" << w.lo().str() << ", " << w.hi().str() << "]\n";
  out << std::left << std::setw(static_cast<int>(width)) << "t" << "  F0  F*  F_*\n";
  for (const auto& r : tab.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.t.str() << "  " << to_string(r.f0) << "   "
        << to_string(r.f_star) << "   " << to_string(r.f_substar) << "\n";
  }
  for (const auto& p : tab.pairs) {
    out << "F(" << p.lo.str() << ", " << p.hi.str() << ") = " << to_string(p.f) << "\n";
  }
}

// Returns false when no vanishing family exists on w.
bool print_decomposition(const FundamentalBundle& b, const Window& w, std::ostream& out) {
  try {
    out << "decomposition:";
    for (const auto& t : decompose(b, w)) out << ' ' << t.str();
    out << "\n";
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoVanishingFamily) throw;
    out << " none (no vanishing family on the window)\n";
    return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus of binary distributions", "bdist"};
  app.require_subcommand(1);

  std::string dist_expr, phi_expr, fn_expr, set_expr, fn2_expr, f_expr, g_expr, suite, format = "ascii", out_path,
      gens, nesting = "t";
  std::vector<std::string> window;
  bool trace = false;
  bool strict = false;
  bool nested = false;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  std::size_t depth = 2;

  auto* eval = app.add_subcommand("eval", "Apply a distribution to a test function");
  eval->add_option("--dist", dist_expr, "distribution expression or .bd file")->required();
  eval->add_option("--phi", phi_expr, "test function expression or .bd file")->required();
  eval->add_flag("--trace", trace, "print the recursion with the chosen epsilons");

  auto* canon = app.add_subcommand("canon", "Print the canonical form of a value");
  auto* canon_fn = canon->add_option("--fn", fn_expr, "function expression");
  auto* canon_dist = canon->add_option("--dist", dist_expr, "distribution expression");
  auto* canon_set = canon->add_option("--set", set_expr, "set expression");
  auto* canon_fn2 = canon->add_option("--fn2", fn2_expr, "two-variable function expression");
  canon_fn->excludes(canon_dist, canon_set, canon_fn2);
  canon_dist->excludes(canon_set, canon_fn2);
  canon_set->excludes(canon_fn2);

  auto* fund = app.add_subcommand("fund", "Tabulate the fundamental functions on a window");
  fund->add_option("--dist", dist_expr)->required();
  fund->add_option("--window", window)->expected(2)->required();
  fund->add_flag("--strict", strict, "exit 4 when no vanishing decomposition exists");

  auto* regular = app.add_subcommand("regular", "Run the regularity criterion on a window");
  regular->add_option("--dist", dist_expr)->required();
  regular->add_option("--window", window)->expected(2)->required();
  regular->add_flag("--strict", strict, "also require a vanishing decomposition (exit 4 otherwise)");

  auto* conv = app.add_subcommand("conv", "Convolve two distributions");
  conv->add_option("--f", f_expr)->required();
  conv->add_option("--g", g_expr)->required();
  conv->add_option("--phi", phi_expr, "apply the product to this test function");
  conv->add_flag("--nested", nested, "evaluate through the nested pairing instead of the product");

  auto* tens = app.add_subcommand("tensor", "Apply a direct product to a two-variable test function");
  tens->add_option("--f", f_expr)->required();
  tens->add_option("--g", g_expr)->required();
  tens->add_option("--phi2", fn2_expr)->required();
  tens->add_option("--nesting", nesting, "t (t-first) or u (u-first)")->check(CLI::IsMember({"t", "u"}));

  auto* check = app.add_subcommand("check", "Run identity suites");
  check->add_option("--suite", suite, "suite name or 'all'")->required();
  check->add_option("--seed", seed, "seed (default BDIST_SEED or 1)");
  check->add_option("--cases", cases, "cases per suite");

  auto* plot = app.add_subcommand("plot", "Render a waveform");
  plot->add_option("--fn", fn_expr)->required();
  plot->add_option("--window", window)->expected(2)->required();
  plot->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  plot->add_option("--out", out_path, "output file (default stdout)");

  auto* algebra = app.add_subcommand("algebra", "Close a convolution algebra over its generators");
  algebra->add_option("--gen", gens, "generators separated by ';'")->required();
  algebra->add_option("--depth", depth);
  algebra->add_option("--cases", cases, "test functions in the panel");
  algebra->add_option("--seed", seed, "seed (default BDIST_SEED or 1)");

  std::vector<std::string> argv{"bdist"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*eval) {
      const Distribution f = read_dist(dist_expr);
      const TestFunction phi = read_test_fn(phi_expr);
      Trace t;
      const Bit b = apply(f, phi, trace ? &t : nullptr);
      for (const auto& line : t.lines) out << line << "\n";
      out << to_string(b) << "\n";
    } else if (*canon) {
      if (!fn_expr.empty()) {
        out << dsl::to_text(read_fn(fn_expr)) << "\n";
      } else if (!dist_expr.empty()) {
        out << dsl::to_text(read_dist(dist_expr)) << "\n";
      } else if (!set_expr.empty()) {
        out << dsl::to_text(dsl::eval_set(dsl::parse_set(source_text(set_expr)))) << "\n";
      } else if (!fn2_expr.empty()) {
        out << dsl::to_text(read_fn2(fn2_expr)) << "\n";
      } else {
        err << "canon: one of --fn, --dist, --set, --fn2 is required\n";
        return kParseError;
      }
    } else if (*fund) {
      const FundamentalBundle b(read_dist(dist_expr));
      const Window w = read_window(window);
      print_table(b, w, out);
      if (!print_decomposition(b, w, out) && strict) {
        err << "error: NoVanishingFamily: F does not vanish on any refinement of the window\n";
        return kNoVanishingFamily;
      }
    } else if (*regular) {
      const FundamentalBundle b(read_dist(dist_expr));
      const Window w = read_window(window);
      out << to_string(regularity_criterion(b, w)) << "\n";
      if (strict) {
        try {
          decompose(b, w);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoVanishingFamily) throw;
          err << "error: NoVanishingFamily: " << e.what() << "\n";
          return kNoVanishingFamily;
        }
      }
    } else if (*conv) {
      const Distribution f = read_dist(f_expr);
      const Distribution g = read_dist(g_expr);
      if (phi_expr.empty()) {
        out << dsl::to_text(convolve(f, g)) << "\n";
      } else {
        const TestFunction phi = read_test_fn(phi_expr);
        out << to_string(nested ? convolve_nested(f, g, phi) : apply(convolve(f, g), phi)) << "\n";
      }
    } else if (*tens) {
      const Distribution2 fg = tensor(read_dist(f_expr), read_dist(g_expr));
      out << to_string(apply2(fg, read_fn2(fn2_expr), nesting == "t" ? Nesting::TFirst : Nesting::UFirst)) << "\n";
    } else if (*check) {
      CasePanel panel;
      panel.seed = check->count("--seed") ? seed : default_seed();
      panel.cases = cases;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      bool ok = true;
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, panel);
        out << r.json() << "\n";
        ok = ok && r.ok();
      }
      return ok ? kOk : kCheckFailed;
    } else if (*plot) {
      const StepFunction f = read_fn(fn_expr);
      const Window w = read_window(window);
      const std::string text = format == "svg" ? plot_svg(f, w) : plot_ascii(f, w);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot write '" << out_path << "'\n";
          return kDomainError;
        }
        file << text;
      }
    } else if (*algebra) {
      ConvolutionAlgebraSpec spec;
      std::stringstream ss(gens);
      for (std::string item; std::getline(ss, item, ';');) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        spec.generators.push_back(read_dist(item));
      }
      spec.closure_depth = depth;
      CasePanel panel;
      panel.seed = algebra->count("--seed") ? seed : default_seed();
      Generator g(panel, 0);
      std::vector<TestFunction> phis;
      for (std::size_t i = 0; i < cases; ++i) phis.push_back(g.test_function());
      ClosureReport r;
      try {
        r = algebra_closure_check(spec, phis);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ClosureFailure) throw;
        out << "closed: no\n";
        err << "error: ClosureFailure: " << e.what() << "\n";
        return kCheckFailed;
      }
      auto yes = [](bool b) { return b ? "yes" : "no"; };
      out << "generators: " << spec.generators.size() << "\n";
      out << "elements: " << r.elements << "\n";
      out << "products: " << r.products << "\n";
      out << "closed: " << yes(r.family_closed) << "\n";
      out << "span stable: " << yes(r.span_stable) << "\n";
      out << "unity: " << yes(r.unity) << "\n";
      out << "commutative: " << yes(r.commutative);
      if (!r.first_noncommuting.empty()) out << " (" << r.first_noncommuting << ")";
      out << "\n";
      out << "associative: " << yes(r.associative) << "\n";
      out << "verdict: " << (r.passed() ? "convolution algebra" : "not closed") << "\n";
      return r.passed() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace bdist::cli
