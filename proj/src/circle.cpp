#include "apollo/circle.hpp"
#include <cmath>

namespace apollo {

void Circle::center_radius(double& cx, double& cy, double& r) const {
  if (a == 0) throw std::invalid_argument("line has no center");
  double ad = a.convert_to<double>();
  cx = -b.re.convert_to<double>() / ad;
  cy = -b.im.convert_to<double>() / ad;
  double d = disc().convert_to<double>();
  r = std::sqrt(d) / std::abs(ad);
}

}  // namespace apollo
