#pragma once

#include <cstddef>
#include <vector>

#include "roadfield/errors.hpp"

namespace roadfield {

enum class FrontParam {
  GraphInY,  // samples are (y, x = phi(y)); abscissa strictly decreasing in y
  GraphInX,  // samples are (x, y = phi(x)) near the contact point
};

// Free-boundary curve as a single-valued graph. The parametrization tag is
// explicit because the contact region is a graph in x while the tail is a
// graph in y; mixing the two silently is how axis bugs happen.
struct FrontCurve {
  FrontParam param = FrontParam::GraphInY;
  std::vector<double> abscissa;  // y values (GraphInY) or x values (GraphInX)
  std::vector<double> ordinate;  // x = phi(y) resp. y = phi(x)

  std::size_t size() const { return abscissa.size(); }
  void validate() const;  // strict monotonicity of abscissae, finiteness

  // Swap roles of the two coordinates over a monotone stretch of samples.
  FrontCurve reparametrized(FrontParam target) const;

  // Linear interpolation of the ordinate at a given abscissa value.
  double interpolate(double at) const;
};

}  // namespace roadfield
