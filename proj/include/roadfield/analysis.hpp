#pragma once

#include <vector>

#include "roadfield/front.hpp"
#include "roadfield/grid.hpp"
#include "roadfield/params.hpp"

namespace roadfield {

// Angle law: sin(alpha) = c0 / c, far-field slope -cotan(alpha).
struct AngleReport {
  double c = 0.0;
  double c0 = 0.0;
  double alpha = 0.0;
  double slope_measured = 0.0;
  double slope_predicted = 0.0;
  double rel_error = 0.0;
  double tail_rate = 0.0;   // fitted omega, +inf sentinel when below noise
  double tail_bound = 0.0;  // 0.5 * c * sin(alpha)
};

struct ScalingReport {
  std::vector<double> D;
  std::vector<double> c;
  double fitted_exponent = 0.0;
  bool bound_check = false;      // fitted exponent <= 0.55
  bool monotone = false;         // c nondecreasing in D
};

struct BarrierReport {
  double gamma = 0.0;
  double worst_margin = 0.0;     // min over nodes of u - (1-e^{gamma x})^+
  bool pass = false;
  double worst_bulk_sign = 0.0;  // max of bulk operator on the barrier
  double worst_road_sign = 0.0;  // max of road operator on the barrier
  bool operator_subsolution = false;
};

// alpha = arcsin(c0/c); throws SpeedBelowReference when c < c0.
double predicted_angle(double c, double c0);

// Least-squares slope of x against y over the deepest window_fraction of
// samples, excluding the bottom band rows already removed by the caller.
double measure_asymptotic_slope(const FrontCurve& front,
                                double window_fraction);

// Fits log|phi'(y) - slope_limit| ~ omega * y over the window where the
// residual exceeds the noise floor. Returns +inf (ResidualBelowNoise
// sentinel) when the tail is already flat to solver tolerance.
double fit_exponential_tail(const FrontCurve& front, double slope_limit,
                            double noise_floor);

// Least-squares fit y = a x^2 through the contact point (GraphInX samples).
double fit_contact_parabola(const FrontCurve& front, double D);

// Least-squares fit y = lambda x through the contact point.
double fit_contact_slope(const FrontCurve& front);

// Log-log fit of c against D, bound check at exponent 0.55.
ScalingReport fit_speed_scaling(const std::vector<std::pair<double, double>>& pairs);

// Nodewise verification of u >= (1 - e^{gamma x})^+ - 1e-6 for a field
// translated so the front's leftmost point is at x = 0, plus the discrete
// subsolution sign of the barrier under the bulk and road operators.
BarrierReport check_subsolution_barrier(const std::vector<double>& field,
                                        double c, const ModelParams& p,
                                        const Grid& grid, double gamma,
                                        double x_leftmost);

}  // namespace roadfield
