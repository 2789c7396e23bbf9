#include "pwc/plot.hpp"

#include <cstdio>
#include <sstream>

namespace pwc {

namespace {

constexpr double kSize = 512;
constexpr double kLeft = 96;
constexpr double kTop = 40;
constexpr double kSide = 384;  // unit square edge in pixels

double px(const Scalar& x) { return kLeft + kSide * x.to_double(); }
double py(const Scalar& y) { return kTop + kSide * (1.0 - y.to_double()); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string plot_svg(const PiecewiseAffineMap& g, const std::string& caption) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 " << kSize << ' '
     << kSize << "\">\n";
  os << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kSide << "\" height=\"" << kSide
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  const Scalar zero(0);
  const Scalar one(1);
  os << "<text x=\"" << num(px(one)) << "\" y=\"" << num(py(zero) + 18) << "\" text-anchor=\"middle\">1</text>\n";
  os << "<text x=\"" << num(px(zero) - 8) << "\" y=\"" << num(py(one) + 5) << "\" text-anchor=\"end\">1</text>\n";

  for (const Scalar& x : g.discontinuities()) {
    os << "<line class=\"guide\" x1=\"" << num(px(x)) << "\" y1=\"" << num(py(zero)) << "\" x2=\"" << num(px(x))
       << "\" y2=\"" << num(py(one)) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(py(zero) + 18) << "\" text-anchor=\"middle\" font-size=\"12\">"
       << escape(x.str()) << "</text>\n";
  }

  const GapSet gap = g.gap_set();
  for (std::size_t j = 0; j < gap.size(); ++j) {
    const Interval& G = gap.components[j];
    for (const Scalar* y : {&G.lo, &G.hi}) {
      if (*y == zero || *y == one) continue;
      os << "<line class=\"guide\" x1=\"" << num(px(zero)) << "\" y1=\"" << num(py(*y)) << "\" x2=\"" << num(px(one))
         << "\" y2=\"" << num(py(*y)) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    }
    // Brace left of the value axis, tip pointing away from the square.
    const double x0 = kLeft - 8;
    const double y0 = py(G.hi);
    const double y1 = py(G.lo);
    const double ym = (y0 + y1) / 2;
    os << "<path class=\"brace\" d=\"M " << num(x0) << ' ' << num(y0) << " Q " << num(x0 - 6) << ' ' << num(y0) << ' '
       << num(x0 - 6) << ' ' << num(y0 + 6) << " L " << num(x0 - 6) << ' ' << num(ym - 6) << " Q " << num(x0 - 6)
       << ' ' << num(ym) << ' ' << num(x0 - 12) << ' ' << num(ym) << " Q " << num(x0 - 6) << ' ' << num(ym) << ' '
       << num(x0 - 6) << ' ' << num(ym + 6) << " L " << num(x0 - 6) << ' ' << num(y1 - 6) << " Q " << num(x0 - 6)
       << ' ' << num(y1) << ' ' << num(x0) << ' ' << num(y1) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const std::string label = gap.size() == 1 ? "G=G_1" : "G_" + std::to_string(j + 1);
    os << "<text x=\"" << num(x0 - 16) << "\" y=\"" << num(ym + 5) << "\" text-anchor=\"end\" font-size=\"14\">"
       << label << "</text>\n";
  }

  for (std::size_t i = 1; i <= g.branch_count(); ++i) {
    const Interval dom = g.domain(static_cast<int>(i));
    const Interval img = g.image(static_cast<int>(i));
    os << "<line class=\"branch\" x1=\"" << num(px(dom.lo)) << "\" y1=\"" << num(py(img.lo)) << "\" x2=\""
       << num(px(dom.hi)) << "\" y2=\"" << num(py(img.hi)) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    os << "<circle class=\"closed\" cx=\"" << num(px(dom.lo)) << "\" cy=\"" << num(py(img.lo))
       << "\" r=\"4\" fill=\"black\" stroke=\"black\"/>\n";
    os << "<circle class=\"open\" cx=\"" << num(px(dom.hi)) << "\" cy=\"" << num(py(img.hi))
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }

  if (!caption.empty())
    os << "<text x=\"" << num(kLeft + kSide / 2) << "\" y=\"" << num(kSize - 16) << "\" text-anchor=\"middle\">"
       << escape(caption) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace pwc
