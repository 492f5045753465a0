#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "ddist/geom.hpp"
#include "ddist/measures.hpp"

namespace ddist::test {

inline AxisBox box2(double x0, double x1, double y0, double y1) {
  return AxisBox({x0, y0}, {x1, y1});
}

inline Instance unit_instance(std::size_t d, std::vector<AxisBox> boxes) {
  return Instance(DomainBox::unit(d), std::move(boxes));
}

/// Largest componentwise difference, treating missing entries as zero.
inline double max_diff(const DepthDistribution& a, const DepthDistribution& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const double x = k < a.size() ? a[k] : 0.0;
    const double y = k < b.size() ? b[k] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

inline double max_diff(const DepthDistribution& a, std::initializer_list<double> b) {
  return max_diff(a, DepthDistribution(std::vector<double>(b)));
}

inline std::string show(const DepthDistribution& dd) {
  std::ostringstream out;
  out.precision(17);
  out << '(';
  for (std::size_t k = 0; k < dd.size(); ++k) out << (k ? ", " : "") << dd[k];
  out << ')';
  return out.str();
}

}  // namespace ddist::test
