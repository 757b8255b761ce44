#pragma once

#include <vector>

#include "roadfield/grid.hpp"

namespace roadfield {

// Road density u(x) and field density v(x, y) at one time instant.
// v is stored row-major: v[j*nx + i] with row j a horizontal slice.
struct RoadFieldState {
  double t = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> u;  // nx
  std::vector<double> v;  // nx * ny

  RoadFieldState() = default;
  RoadFieldState(int nx_, int ny_)
      : nx(nx_), ny(ny_), u(nx_, 0.0), v(static_cast<size_t>(nx_) * ny_, 0.0) {}

  double& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
  double at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }

  bool finite() const;
};

}  // namespace roadfield
