#pragma once

#include <string>
#include <vector>

#include "roadfield/front.hpp"
#include "roadfield/grid.hpp"
#include "roadfield/params.hpp"

namespace roadfield {

enum class WaveMethod { TrialFB, Regularized };

struct SolverOptions {
  double tau = 0.0;        // front relaxation step; 0 -> 0.5*dx
  double kappa = 0.5;      // speed relaxation gain
  double tol_fb = 1e-3;    // free-boundary residual tolerance
  double tol_lin = 1e-10;  // linear-solve tolerance
  int max_outer = 4000;
  WaveMethod method = WaveMethod::TrialFB;
  double epsilon = 0.05;   // reaction width for Regularized
  bool continuation = true;  // coarse-to-fine grid continuation
  double c_init = 0.0;       // 0 -> c0 * sqrt(D/d), floored at 1.1*c0
  int verbosity = 0;

  void validate() const;
};

// Travelling-wave solution of the truncated problem: speed, front graph
// x = phi(y), the field on the grid, and free-boundary diagnostics.
struct WaveSolution {
  double c = 0.0;
  FrontCurve front;            // GraphInY, contact normalized to (0, 0)
  std::vector<double> field;   // nx*ny row-major; u (one species) or v
  std::vector<double> road;    // nx; two-species road density, else empty
  double fb_residual = 0.0;    // max ||grad u| - 1| over measured samples
  double contact_drift = 0.0;
  int iterations = 0;
  bool converged = false;
  Grid grid;
  ModelParams params;
  std::vector<double> residual_history;
  std::vector<double> c_history;
  double wall_distance = 0.0;  // x_max minus rightmost front sample
};

// Discrete front: x-position per grid row, rows 0..n_front-1. Rows deeper
// than y = -L+1+2dy carry no front; the far-field profile is positive there.
struct TrialFront {
  std::vector<double> phi;
  int rows() const { return static_cast<int>(phi.size()); }
};

int front_rows(const Grid& grid, double L);

// Linear elliptic solve at a fixed trial front and speed.
//  bulk     -d Lap u + c u_x = 0 on the positivity side {x < phi(y)}
//  road     -D u_xx + c u_x + (1/mu) u_y = 0          (one species, row 0)
//           d v_y = mu u - v coupled to -D u'' + c u' + (1/mu) v_y = 0
//                                                      (two species)
//  walls    u = 1 at x_min and y = -L; u = (1 - y - L)^+ at x_max
// Dirichlet u = 0 on the front via Shortley-Weller cut stencils.
struct FieldSolve {
  std::vector<double> field;  // nx*ny
  std::vector<double> road;   // nx (two species only)
};

FieldSolve solve_field_given_front(const TrialFront& front, double c,
                                   const ModelParams& p, const Grid& grid,
                                   double tol_lin,
                                   const std::vector<double>* warm_field = nullptr,
                                   const std::vector<double>* warm_road = nullptr);

// |grad u| at each front sample via a one-sided second-order stencil along
// the inward normal; shrinks to first order where the domain is too thin
// (near the contact). NaN marks samples with no usable stencil.
std::vector<double> boundary_gradient(const std::vector<double>& field,
                                      const TrialFront& front,
                                      const Grid& grid);

// phi_new = phi + tau * (|grad u| - 1), sample-wise, no smoothing.
TrialFront update_front(const TrialFront& front,
                        const std::vector<double>& gradients, double tau);

// c_new = c + kappa * contact_drift, then the caller translates the front
// so phi(0) = 0. Throws SpeedNonPositive if the update would cross zero.
double update_speed(double c, double contact_drift, double kappa);

// Full travelling-wave solve: outer loop of field solve, boundary gradient,
// front update and speed update, with coarse-to-fine continuation.
WaveSolution solve_wave(const ModelParams& p, const Grid& grid,
                        const SolverOptions& opts);

// Independent cross-check: -d Lap u + c u_x + beta_eps(u) = 0 with
// beta_eps(s) = (1/eps) B(s/eps), B >= 0 supported in (0,1) and
// int B = d/2, marched in pseudo-time to a steady travelling state.
// The front is the u = eps level set.
WaveSolution solve_wave_regularized(const ModelParams& p, const Grid& grid,
                                    const SolverOptions& opts);

// 1D oracle for the regularized method: speed of the travelling wave of
// -d phi'' + c phi' + beta_eps(phi) = 0, phi(-inf)=1, phi(+inf)=0,
// solved by a bordered Newton iteration. Converges to c0 = d as eps -> 0.
double regularized_speed_1d(double d, double epsilon);

// Smoothed reaction bump: beta_eps(s) = (1/eps) B(s/eps) with
// B(t) = norm * t^2 (1-t)^2 on (0,1), int_0^1 B = d/2.
double beta_eps(double s, double epsilon, double d);
double beta_eps_prime(double s, double epsilon, double d);

}  // namespace roadfield
