#include <sstream>

#include "bdist/cli.hpp"

namespace bdist::cli {

namespace {

struct Column {
  bool point = false;
  Rational at;
  Bit value;
  Bit left;   // limits, only meaningful for point columns
  Bit right;
};

std::vector<Column> columns(const StepFunction& f, const Window& w) {
  if (!(w.lo() < w.hi())) throw Error(ErrorCode::InvalidWindow, "plot needs lo < hi");
  std::vector<Rational> pts{w.lo()};
  for (const auto& b : f.breakpoints()) {
    if (w.lo() < b && b < w.hi()) pts.push_back(b);
  }
  pts.push_back(w.hi());
  std::vector<Column> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) {
      const Rational m = midpoint(pts[i - 1], pts[i]);
      out.push_back({false, m, f.eval(m), {}, {}});
    }
    out.push_back({true, pts[i], f.eval(pts[i]), f.left_limit(pts[i]), f.right_limit(pts[i])});
  }
  return out;
}

// A point column shows a filled dot at the attained value and an open dot at an excluded limit.
bool excluded(const Column& c) { return c.point && (c.left != c.value || c.right != c.value); }

}  // namespace

std::string plot_ascii(const StepFunction& f, const Window& w) {
  const auto cols = columns(f, w);
  std::size_t width = 3;
  for (const auto& c : cols) {
    if (c.point) width = std::max(width, c.at.str().size() + 2);
  }
  std::string rows[2];
  std::string labels;
  for (const auto& c : cols) {
    for (int level = 1; level >= 0; --level) {
      const bool on = c.value == Bit(level == 1);
      char mark = on ? '-' : ' ';
      if (excluded(c)) mark = on ? '*' : 'o';
      std::string cell(width, mark == '-' ? '-' : ' ');
      if (mark == '*' || mark == 'o') cell[width / 2] = mark;
      rows[level] += cell;
    }
    std::string label = c.point ? c.at.str() : "";
    const std::size_t pad = width - label.size();
    labels += std::string(pad / 2, ' ') + label + std::string(pad - pad / 2, ' ');
  }
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::ostringstream os;
  os << "1 |" << trim(rows[1]) << "\n";
  os << "0 |" << trim(rows[0]) << "\n";
  os << "   " << trim(labels) << "\n";
  return os.str();
}

std::string plot_svg(const StepFunction& f, const Window& w) {
  const auto cols = columns(f, w);
  const double left = 40;
  const double span = 640;
  const double y1 = 30;
  const double y0 = 90;
  const double lo = w.lo().to_double();
  const double scale = span / (w.hi().to_double() - lo);
  auto x = [&](const Rational& t) { return left + (t.to_double() - lo) * scale; };
  auto y = [&](Bit b) { return b ? y1 : y0; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"130\" viewBox=\"0 0 720 130\">\n";
  os << "<rect width=\"720\" height=\"130\" fill=\"white\"/>\n";
  os << "<text x=\"10\" y=\"" << y1 + 4 << "\" font-family=\"monospace\" font-size=\"12\">1</text>\n";
  os << "<text x=\"10\" y=\"" << y0 + 4 << "\" font-family=\"monospace\" font-size=\"12\">0</text>\n";
  // Interval pieces as horizontal segments.
  for (std::size_t i = 1; i + 1 < cols.size(); i += 2) {
    os << "<line x1=\"" << x(cols[i - 1].at) << "\" y1=\"" << y(cols[i].value) << "\" x2=\"" << x(cols[i + 1].at)
       << "\" y2=\"" << y(cols[i].value) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& c : cols) {
    if (!c.point) continue;
    os << "<text x=\"" << x(c.at) << "\" y=\"120\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
       << c.at.str() << "</text>\n";
    if (!excluded(c)) continue;
    os << "<circle cx=\"" << x(c.at) << "\" cy=\"" << y(c.value)
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<circle cx=\"" << x(c.at) << "\" cy=\"" << y(Bit(!c.value.value()))
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bdist::cli
