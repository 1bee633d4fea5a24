#pragma once

#include <string>
#include <vector>

// Minimal static SVG charts for the report directory.
namespace algebrarium::svg {

enum class Mark { Line, Points, LineAndPoints };

struct Series {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
  Mark mark = Mark::LineAndPoints;
};

struct Axes {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log2_x = false;
  bool log_y = false;
  /// Fixed y range; auto-scaled when lo >= hi.
  double y_lo = 0.0;
  double y_hi = 1.0;
  /// Draws y = x.
  bool diagonal = false;
};

std::string xy_chart(const Axes& axes, const std::vector<Series>& series);

struct BarGroup {
  std::string name;
  std::vector<double> values;  // one per category
};

std::string bar_chart(const std::string& title, const std::vector<std::string>& categories,
                      const std::vector<BarGroup>& groups);

}  // namespace algebrarium::svg
