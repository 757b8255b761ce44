#include <cmath>
#include <limits>

#include "roadfield/front.hpp"
#include "roadfield/grid.hpp"
#include "roadfield/params.hpp"
#include "roadfield/state.hpp"

namespace roadfield {

namespace {
void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    fail(ErrorCode::NonPositiveParameter,
         std::string("parameter '") + name + "' must be strictly positive");
}
}  // namespace

ModelParams validate_params(const ModelParams& p) {
  require_positive(p.d, "d");
  require_positive(p.D, "D");
  require_positive(p.mu, "mu");
  require_positive(p.nu, "nu");
  require_positive(p.L, "L");
  if (p.model == Model::OneSpecies && p.D < p.d)
    fail(ErrorCode::DiffusivityOrder,
         "one-species model requires D >= d (got D = " + std::to_string(p.D) +
             ", d = " + std::to_string(p.d) + ")");
  return p;
}

double reference_speed_c0(double d) {
  require_positive(d, "d");
  return d;
}

double reference_wave_profile(double d, double y) {
  double c0 = reference_speed_c0(d);
  if (y > 0.0) return 0.0;
  return 1.0 - std::exp((c0 / d) * y);
}

Grid::Grid(double x_min_, double x_max_, double L_, int nx_, int ny_)
    : x_min(x_min_), x_max(x_max_), L(L_), nx(nx_), ny(ny_) {
  if (!(x_max > x_min))
    fail(ErrorCode::BadConfig, "grid requires x_max > x_min");
  if (!(L > 0.0)) fail(ErrorCode::NonPositiveParameter, "grid depth L");
  if (nx < 16 || ny < 16)
    fail(ErrorCode::BadConfig, "grid requires nx >= 16 and ny >= 16");
  dx = (x_max - x_min) / (nx - 1);
  dy = L / (ny - 1);
}

std::vector<double> Grid::x_nodes() const {
  std::vector<double> xs(nx);
  for (int i = 0; i < nx; ++i) xs[i] = x(i);
  return xs;
}

std::vector<double> Grid::y_nodes() const {
  std::vector<double> ys(ny);
  for (int j = 0; j < ny; ++j) ys[j] = y(j);
  return ys;
}

bool RoadFieldState::finite() const {
  for (double a : u)
    if (!std::isfinite(a)) return false;
  for (double a : v)
    if (!std::isfinite(a)) return false;
  return true;
}

void FrontCurve::validate() const {
  if (abscissa.size() != ordinate.size())
    fail(ErrorCode::BadConfig, "front sample arrays differ in length");
  if (abscissa.size() < 2) fail(ErrorCode::EmptyFront, "front has < 2 samples");
  bool inc = abscissa[1] > abscissa[0];
  for (std::size_t k = 0; k + 1 < abscissa.size(); ++k) {
    double step = abscissa[k + 1] - abscissa[k];
    if ((inc && step <= 0.0) || (!inc && step >= 0.0))
      fail(ErrorCode::BadConfig, "front abscissae are not strictly monotone");
  }
  for (std::size_t k = 0; k < abscissa.size(); ++k)
    if (!std::isfinite(abscissa[k]) || !std::isfinite(ordinate[k]))
      fail(ErrorCode::BadConfig, "front contains non-finite samples");
}

FrontCurve FrontCurve::reparametrized(FrontParam target) const {
  if (target == param) return *this;
  FrontCurve out;
  out.param = target;
  out.abscissa = ordinate;
  out.ordinate = abscissa;
  out.validate();
  return out;
}

double FrontCurve::interpolate(double at) const {
  if (abscissa.size() < 2)
    fail(ErrorCode::InsufficientData, "front interpolation needs >= 2 samples");
  bool inc = abscissa.back() > abscissa.front();
  std::size_t n = abscissa.size();
  // clamp outside the sampled range
  auto before = [&](double a, double b) { return inc ? a <= b : a >= b; };
  if (before(at, abscissa.front())) return ordinate.front();
  if (before(abscissa.back(), at)) return ordinate.back();
  std::size_t lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (before(abscissa[mid], at))
      lo = mid;
    else
      hi = mid;
  }
  double t = (at - abscissa[lo]) / (abscissa[hi] - abscissa[lo]);
  return ordinate[lo] + t * (ordinate[hi] - ordinate[lo]);
}

}  // namespace roadfield
