#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "roadfield/front.hpp"
#include "roadfield/grid.hpp"
#include "roadfield/params.hpp"
#include "roadfield/state.hpp"

namespace roadfield {

// The evolution system is integrated on x in [x_min, x_max], y in [0, H]
// with the road along y = 0 and the field above it; H is taken from the
// grid depth. Diffusion is backward Euler via alternating-direction sweeps,
// the logistic reaction f(v) = v - v^2 is explicit, and the road-field
// exchange is folded implicitly into the vertical sweep so that the
// discrete exchange terms cancel exactly in the total-mass budget.
enum class EvolutionVariant { Exchange, Wentzell };
enum class Reaction { None, Logistic };

struct EvolutionConfig {
  ModelParams params;
  Grid grid;
  double dt = 0.05;
  double t_end = 40.0;
  Reaction reaction = Reaction::Logistic;
  double level = 0.5;             // front-extraction threshold
  EvolutionVariant variant = EvolutionVariant::Exchange;
  double coulon_half_width = 1.0; // u0 = indicator of [-w, w], v0 = 0
  bool user_initial = false;      // if set, run() starts from initial_state
  RoadFieldState initial_state;

  void validate() const;
  RoadFieldState initial() const;
};

// One recorded level-set front: the curve, its furthest point in the
// propagation direction, and the road crossing of u at level nu/(2 mu).
struct FrontRecord {
  double t = 0.0;
  FrontCurve front;          // GraphInY: (y, largest x with v >= level)
  double leading_x = 0.0;
  double leading_y = 0.0;
  double road_position = 0.0;
  bool road_position_valid = false;
};

// Advance one time step. Throws StabilityViolation when values leave
// [0 - 0.1, bound + 10%] or become non-finite.
RoadFieldState step(const RoadFieldState& state, const EvolutionConfig& cfg);

struct EvolutionResult {
  std::vector<RoadFieldState> snapshots;
  std::vector<FrontRecord> records;
};

// Integrate to t_end, recording at the requested times (rounded up to the
// next step boundary). Deterministic for a fixed config.
EvolutionResult run(const EvolutionConfig& cfg,
                    const std::vector<double>& snapshot_times);

// Largest-x crossing of v = level per grid row, linearly interpolated.
// Rows that never reach the level are omitted; all-empty throws EmptyFront.
FrontCurve extract_front(const RoadFieldState& state, const Grid& grid,
                         double level);

// Sample maximizing x; ties broken toward the road (smallest |y|).
std::pair<double, double> leading_edge(const FrontCurve& front);

// Least-squares slope of front position at a probe height against time.
double estimate_speed(const std::vector<FrontRecord>& records, double y_probe,
                      double t_lo, double t_hi);

}  // namespace roadfield
