#include "garm/geom/types.hpp"

#include <algorithm>
#include <cmath>

namespace garm {

const std::vector<std::string>& curve_name_vocabulary() {
  static const std::vector<std::string> names = {
      "neckline", "hemline_upper", "waist",
      "hemline_bottom", "cuff_left", "cuff_right"};
  return names;
}

bool is_known_curve_name(const std::string& name) {
  const auto& v = curve_name_vocabulary();
  return std::find(v.begin(), v.end(), name) != v.end();
}

double ScalarImage::sample(double x, double y) const {
  x = std::clamp(x, 0.0, static_cast<double>(width - 1));
  y = std::clamp(y, 0.0, static_cast<double>(height - 1));
  if (width == 1 || height == 1)
    return at(static_cast<int>(std::round(x)), static_cast<int>(std::round(y)));
  const int x0 = std::min(static_cast<int>(std::floor(x)), width - 2);
  const int y0 = std::min(static_cast<int>(std::floor(y)), height - 2);
  const double fx = x - x0, fy = y - y0;
  return (1 - fx) * (1 - fy) * at(x0, y0) + fx * (1 - fy) * at(x0 + 1, y0) +
         (1 - fx) * fy * at(x0, y0 + 1) + fx * fy * at(x0 + 1, y0 + 1);
}

}  // namespace garm
