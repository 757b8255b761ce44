#pragma once

#include <cstddef>
#include <vector>

#include "roadfield/errors.hpp"

namespace roadfield {

// Uniform node-centered grid on [x_min, x_max] x [-L, 0]. Row j sits at
// y_j = -j*dy with row 0 on the road and row ny-1 at the bottom y = -L.
// Evolution runs reuse the same type with |y| read as height above the road.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  double L = 1.0;
  int nx = 16;
  int ny = 16;
  double dx = 0.0;
  double dy = 0.0;

  Grid() = default;
  Grid(double x_min_, double x_max_, double L_, int nx_, int ny_);

  double x(int i) const { return x_min + i * dx; }
  double y(int j) const { return -j * dy; }
  std::vector<double> x_nodes() const;
  std::vector<double> y_nodes() const;
};

}  // namespace roadfield
