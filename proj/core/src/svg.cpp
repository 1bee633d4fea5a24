#include "algebrarium/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace algebrarium::svg {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 55;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

const char* color(std::size_t i) { return kPalette[i % (sizeof kPalette / sizeof *kPalette)]; }

void header(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
     << "</text>\n";
}

void legend(std::ostringstream& os, const std::vector<std::string>& names) {
  double y = kTop + 10;
  for (std::size_t i = 0; i < names.size(); ++i, y += 18) {
    const double x = kWidth - kRight + 15;
    os << "<rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"12\" height=\"12\" fill=\"" << color(i)
       << "\"/>\n<text x=\"" << num(x + 18) << "\" y=\"" << num(y + 1) << "\">" << escape(names[i]) << "</text>\n";
  }
}

// Linear map from data units (already log-transformed if needed) to pixels.
struct Scale {
  double lo;
  double hi;
  double pixel_lo;
  double pixel_hi;

  double operator()(double v) const {
    const double t = (v - lo) / (hi - lo);
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
};

}  // namespace

std::string xy_chart(const Axes& axes, const std::vector<Series>& series) {
  double xlo = std::numeric_limits<double>::infinity();
  double xhi = -xlo;
  double ylo = xlo;
  double yhi = -xlo;
  auto usable_x = [&](double x) { return std::isfinite(x) && (!axes.log2_x || x > 0); };
  auto usable_y = [&](double y) { return std::isfinite(y) && (!axes.log_y || y > 0); };
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
      if (!usable_x(s.xs[i]) || !usable_y(s.ys[i])) continue;
      const double x = axes.log2_x ? std::log2(s.xs[i]) : s.xs[i];
      const double y = axes.log_y ? std::log10(s.ys[i]) : s.ys[i];
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (!std::isfinite(xlo)) {
    xlo = 0;
    xhi = 1;
    ylo = 0;
    yhi = 1;
  }
  if (axes.y_lo < axes.y_hi && !axes.log_y) {
    ylo = axes.y_lo;
    yhi = axes.y_hi;
  }
  if (axes.diagonal) {
    xlo = ylo = std::min(xlo, ylo);
    xhi = yhi = std::max(xhi, yhi);
  }
  if (xhi <= xlo) xhi = xlo + 1;
  if (yhi <= ylo) yhi = ylo + 1;

  const Scale sy{ylo, yhi, kHeight - kBottom, kTop};
  auto px = [&](double x) {
    const double t = ((axes.log2_x ? std::log2(x) : x) - xlo) / (xhi - xlo);
    return kLeft + t * (kWidth - kRight - kLeft);
  };
  auto py = [&](double y) { return sy(axes.log_y ? std::log10(y) : y); };

  std::ostringstream os;
  header(os, axes.title);
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
     << num(y0 - y1) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fy = ylo + (yhi - ylo) * i / 4.0;
    const double yy = sy(fy);
    const double label = axes.log_y ? std::pow(10.0, fy) : fy;
    os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(yy) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(yy)
       << "\" stroke=\"#ddd\"/>\n<text x=\"" << num(x0 - 6) << "\" y=\"" << num(yy + 4)
       << "\" text-anchor=\"end\">" << tick_label(label) << "</text>\n";
    const double fx = xlo + (xhi - xlo) * i / 4.0;
    const double xx = kLeft + (fx - xlo) / (xhi - xlo) * (x1 - x0);
    const double xlabel = axes.log2_x ? std::exp2(fx) : fx;
    os << "<text x=\"" << num(xx) << "\" y=\"" << num(y0 + 16) << "\" text-anchor=\"middle\">"
       << tick_label(xlabel) << "</text>\n";
  }
  os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 12) << "\" text-anchor=\"middle\">"
     << escape(axes.x_label) << "</text>\n<text x=\"16\" y=\"" << num((y0 + y1) / 2)
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << num((y0 + y1) / 2) << ")\">"
     << escape(axes.y_label) << "</text>\n";
  if (axes.diagonal) {
    os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1)
       << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }

  std::vector<std::string> names;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    names.push_back(s.name);
    std::string path;
    for (std::size_t i = 0; i < s.xs.size() && i < s.ys.size(); ++i) {
      if (!usable_x(s.xs[i]) || !usable_y(s.ys[i])) continue;
      path += (path.empty() ? "" : " ") + num(px(s.xs[i])) + "," + num(py(s.ys[i]));
      if (s.mark != Mark::Line) {
        os << "<circle cx=\"" << num(px(s.xs[i])) << "\" cy=\"" << num(py(s.ys[i])) << "\" r=\"3\" fill=\""
           << color(si) << "\" fill-opacity=\"0.7\"/>\n";
      }
    }
    if (s.mark != Mark::Points && !path.empty()) {
      os << "<polyline points=\"" << path << "\" fill=\"none\" stroke=\"" << color(si) << "\" stroke-width=\"2\"/>\n";
    }
  }
  legend(os, names);
  os << "</svg>\n";
  return os.str();
}

std::string bar_chart(const std::string& title, const std::vector<std::string>& categories,
                      const std::vector<BarGroup>& groups) {
  double vmax = 0;
  for (const auto& g : groups) {
    for (double v : g.values) vmax = std::max(vmax, v);
  }
  if (vmax <= 0) vmax = 1;
  std::ostringstream os;
  header(os, title);
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y0)
     << "\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = vmax * i / 4.0;
    const double yy = y0 - (y0 - y1) * i / 4.0;
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(yy + 4) << "\" text-anchor=\"end\">" << tick_label(v)
       << "</text>\n";
  }
  const double slot = categories.empty() ? 0 : (x1 - x0) / static_cast<double>(categories.size());
  const double bar = groups.empty() ? 0 : slot * 0.8 / static_cast<double>(groups.size());
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const double base_x = x0 + slot * static_cast<double>(c) + slot * 0.1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double v = c < groups[g].values.size() ? groups[g].values[c] : 0.0;
      const double h = (y0 - y1) * v / vmax;
      os << "<rect x=\"" << num(base_x + bar * static_cast<double>(g)) << "\" y=\"" << num(y0 - h) << "\" width=\""
         << num(bar) << "\" height=\"" << num(h) << "\" fill=\"" << color(g) << "\"/>\n";
    }
    os << "<text x=\"" << num(x0 + slot * (static_cast<double>(c) + 0.5)) << "\" y=\"" << num(y0 + 16)
       << "\" text-anchor=\"middle\">" << escape(categories[c]) << "</text>\n";
  }
  std::vector<std::string> names;
  for (const auto& g : groups) names.push_back(g.name);
  legend(os, names);
  os << "</svg>\n";
  return os.str();
}

}  // namespace algebrarium::svg
