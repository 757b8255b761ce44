#include "roadfield/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roadfield/banded.hpp"
#include "roadfield/threads.hpp"

namespace roadfield {

namespace {

// Tridiagonal factorization reused across rows/columns with identical
// coefficients (uniform grid, fixed dt).
struct TridiagFactor {
  std::vector<double> inv_piv;
  std::vector<double> cp;  // modified upper diagonal
  std::vector<double> lower;
  int n = 0;

  void factor(const std::vector<double>& lo, const std::vector<double>& di,
              const std::vector<double>& up) {
    n = static_cast<int>(di.size());
    inv_piv.resize(n);
    cp.resize(n);
    lower = lo;
    double piv = di[0];
    inv_piv[0] = 1.0 / piv;
    cp[0] = up[0] / piv;
    for (int i = 1; i < n; ++i) {
      piv = di[i] - lo[i] * cp[i - 1];
      inv_piv[i] = 1.0 / piv;
      cp[i] = up[i] * inv_piv[i];
    }
  }

  void solve(double* rhs) const {
    rhs[0] *= inv_piv[0];
    for (int i = 1; i < n; ++i)
      rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) * inv_piv[i];
    for (int i = n - 2; i >= 0; --i) rhs[i] -= cp[i] * rhs[i + 1];
  }
};

// 1D implicit diffusion matrix (I - dt*k*Dxx) with mirror (no-flux) walls.
void diffusion_line(int n, double r, std::vector<double>& lo,
                    std::vector<double>& di, std::vector<double>& up) {
  lo.assign(n, -r);
  di.assign(n, 1.0 + 2.0 * r);
  up.assign(n, -r);
  di[0] = 1.0 + r;      // mirror ghost: flux-free wall
  di[n - 1] = 1.0 + r;
  lo[0] = 0.0;
  up[n - 1] = 0.0;
}

void check_state(const RoadFieldState& s, const EvolutionConfig& cfg) {
  double ub = cfg.params.nu / cfg.params.mu;
  double vmax = 0.0, vmin = 0.0, umax = 0.0, umin = 0.0;
  for (double a : s.v) {
    if (!std::isfinite(a)) fail(ErrorCode::StabilityViolation, "non-finite v");
    vmax = std::max(vmax, a);
    vmin = std::min(vmin, a);
  }
  for (double a : s.u) {
    if (!std::isfinite(a)) fail(ErrorCode::StabilityViolation, "non-finite u");
    umax = std::max(umax, a);
    umin = std::min(umin, a);
  }
  if (vmax > 1.1 || vmin < -0.1 || umax > 1.1 * std::max(ub, 1e-300) ||
      umin < -0.1 * ub)
    fail(ErrorCode::StabilityViolation,
         "state left [0,1] x [0, nu/mu] by more than 10%");
}

}  // namespace

void EvolutionConfig::validate() const {
  validate_params(params);
  if (!(dt > 0.0)) fail(ErrorCode::BadConfig, "dt must be positive");
  if (!(t_end >= 0.0)) fail(ErrorCode::BadConfig, "t_end must be >= 0");
  if (!(level > 0.0 && level < 1.0))
    fail(ErrorCode::BadConfig, "level must lie in (0,1)");
  if (user_initial &&
      (initial_state.nx != grid.nx || initial_state.ny != grid.ny))
    fail(ErrorCode::BadConfig, "initial state does not match the grid");
}

RoadFieldState EvolutionConfig::initial() const {
  if (user_initial) return initial_state;
  RoadFieldState s(grid.nx, grid.ny);
  for (int i = 0; i < grid.nx; ++i)
    s.u[i] = std::abs(grid.x(i)) <= coulon_half_width ? 1.0 : 0.0;
  return s;
}

RoadFieldState step(const RoadFieldState& state, const EvolutionConfig& cfg) {
  const Grid& g = cfg.grid;
  const ModelParams& p = cfg.params;
  const int nx = g.nx, ny = g.ny;
  const double dt = cfg.dt, dx = g.dx, dy = g.dy;

  RoadFieldState s = state;

  // explicit logistic reaction in the field
  if (cfg.reaction == Reaction::Logistic)
    for (double& a : s.v) a += dt * (a - a * a);

  // x sweep: implicit horizontal diffusion, rows independent
  {
    std::vector<double> lo, di, up;
    TridiagFactor field_fac, road_fac;
    diffusion_line(nx, dt * p.d / (dx * dx), lo, di, up);
    field_fac.factor(lo, di, up);
    int xrows = ny;
    bool wentzell = cfg.variant == EvolutionVariant::Wentzell;
    // the road (or the Wentzell row) diffuses with D
    diffusion_line(nx, dt * p.D / (dx * dx), lo, di, up);
    road_fac.factor(lo, di, up);
    parallel_for(xrows, [&](int j) {
      double* row = s.v.data() + static_cast<size_t>(j) * nx;
      if (wentzell && j == 0)
        road_fac.solve(row);
      else
        field_fac.solve(row);
    });
    if (!wentzell) road_fac.solve(s.u.data());
  }

  // y sweep: implicit vertical diffusion with the exchange folded in
  if (cfg.variant == EvolutionVariant::Exchange) {
    // finite-volume lines; row 0 and the top row are half cells.
    // Exchange is eliminated implicitly: u^{n+1} = (u* + dt nu w0)/(1 + mu dt),
    // so the w0 coefficient keeps the column tridiagonal and the discrete
    // exchange terms cancel in the total mass budget (for d = 1).
    double r = p.d * dt / (dy * dy);
    std::vector<double> lo(ny), di(ny), up(ny);
    for (int j = 0; j < ny; ++j) {
      lo[j] = -r;
      di[j] = 1.0 + 2.0 * r;
      up[j] = -r;
    }
    // row 0: (dy/2)(w0 - v0*)/dt = d (w1 - w0)/dy + d (mu u - nu w0)/(1+mu dt)...
    // scaled by 2dt/dy:
    di[0] = 1.0 + 2.0 * r + 2.0 * dt * p.d * p.nu / (dy * (1.0 + p.mu * dt));
    up[0] = -2.0 * r;
    lo[0] = 0.0;
    // top row half cell, no-flux above
    di[ny - 1] = 1.0 + 2.0 * r;
    lo[ny - 1] = -2.0 * r;
    up[ny - 1] = 0.0;
    TridiagFactor fac;
    fac.factor(lo, di, up);
    std::vector<double> unew(nx);
    parallel_for(nx, [&](int i) {
      std::vector<double> col(ny);
      for (int j = 0; j < ny; ++j) col[j] = s.at(i, j);
      col[0] += 2.0 * dt * p.d * p.mu * s.u[i] / (dy * (1.0 + p.mu * dt));
      fac.solve(col.data());
      for (int j = 0; j < ny; ++j) s.at(i, j) = col[j];
      unew[i] = (s.u[i] + dt * p.nu * col[0]) / (1.0 + p.mu * dt);
    });
    s.u = unew;
  } else {
    // Wentzell row replaces the separate road unknown:
    //   dv/dt - D v_xx - (1/mu) dv/dy = 0 at y = 0 (field above the road);
    // the x part ran in the x sweep, the one-sided dv/dy couples rows 0..2.
    double r = p.d * dt / (dy * dy);
    double w = dt / (2.0 * dy * p.mu);
    parallel_for(nx, [&](int i) {
      BandedMatrix m(ny, 1, 2);
      std::vector<double> col(ny);
      for (int j = 0; j < ny; ++j) col[j] = s.at(i, j);
      m.at(0, 0) = 1.0 + 3.0 * w;
      m.at(0, 1) = -4.0 * w;
      m.at(0, 2) = 1.0 * w;
      for (int j = 1; j < ny - 1; ++j) {
        m.at(j, j - 1) = -r;
        m.at(j, j) = 1.0 + 2.0 * r;
        m.at(j, j + 1) = -r;
      }
      m.at(ny - 1, ny - 2) = -2.0 * r;
      m.at(ny - 1, ny - 1) = 1.0 + 2.0 * r;
      m.solve(col.data());
      for (int j = 0; j < ny; ++j) s.at(i, j) = col[j];
    });
  }

  s.t = state.t + dt;
  check_state(s, cfg);
  return s;
}

FrontCurve extract_front(const RoadFieldState& state, const Grid& grid,
                         double level) {
  if (!(level > 0.0 && level < 1.0))
    fail(ErrorCode::BadConfig, "level must lie in (0,1)");
  FrontCurve f;
  f.param = FrontParam::GraphInY;
  for (int j = 0; j < grid.ny; ++j) {
    const double* row = state.v.data() + static_cast<size_t>(j) * grid.nx;
    // largest x with v >= level
    int hit = -1;
    for (int i = grid.nx - 1; i >= 0; --i)
      if (row[i] >= level) {
        hit = i;
        break;
      }
    if (hit < 0) continue;
    double xc;
    if (hit == grid.nx - 1)
      xc = grid.x_max;
    else
      xc = grid.x(hit) +
           grid.dx * (row[hit] - level) / (row[hit] - row[hit + 1]);
    f.abscissa.push_back(j * grid.dy);  // height above the road
    f.ordinate.push_back(xc);
  }
  if (f.abscissa.empty())
    fail(ErrorCode::EmptyFront, "field lies below the level everywhere");
  return f;
}

std::pair<double, double> leading_edge(const FrontCurve& front) {
  if (front.size() == 0) fail(ErrorCode::EmptyFront, "empty front");
  std::size_t best = 0;
  for (std::size_t k = 1; k < front.size(); ++k) {
    double x = front.ordinate[k];
    if (x > front.ordinate[best] ||
        (x == front.ordinate[best] &&
         std::abs(front.abscissa[k]) < std::abs(front.abscissa[best])))
      best = k;
  }
  return {front.ordinate[best], front.abscissa[best]};
}

double estimate_speed(const std::vector<FrontRecord>& records, double y_probe,
                      double t_lo, double t_hi) {
  std::vector<double> ts, xs;
  for (const auto& r : records) {
    if (r.t < t_lo || r.t > t_hi || r.front.size() < 2) continue;
    double lo = std::min(r.front.abscissa.front(), r.front.abscissa.back());
    double hi = std::max(r.front.abscissa.front(), r.front.abscissa.back());
    if (y_probe < lo || y_probe > hi) continue;
    ts.push_back(r.t);
    xs.push_back(r.front.interpolate(y_probe));
  }
  if (ts.size() < 3)
    fail(ErrorCode::InsufficientData,
         "speed fit needs >= 3 front records in the window");
  double n = static_cast<double>(ts.size());
  double st = 0, sx = 0, stt = 0, stx = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    st += ts[k];
    sx += xs[k];
    stt += ts[k] * ts[k];
    stx += ts[k] * xs[k];
  }
  double denom = n * stt - st * st;
  if (denom == 0.0) fail(ErrorCode::InsufficientData, "degenerate time window");
  return (n * stx - st * sx) / denom;
}

EvolutionResult run(const EvolutionConfig& cfg,
                    const std::vector<double>& snapshot_times) {
  cfg.validate();
  EvolutionResult out;
  RoadFieldState s = cfg.initial();
  s.t = 0.0;

  std::vector<double> times = snapshot_times;
  std::sort(times.begin(), times.end());

  auto record = [&](const RoadFieldState& st) {
    FrontRecord r;
    r.t = st.t;
    try {
      r.front = extract_front(st, cfg.grid, cfg.level);
      auto le = leading_edge(r.front);
      r.leading_x = le.first;
      r.leading_y = le.second;
    } catch (const Error&) {
      // level not reached yet: record an empty front
    }
    bool wentzell = cfg.variant == EvolutionVariant::Wentzell;
    double thresh = wentzell ? cfg.level
                             : cfg.params.nu / (2.0 * cfg.params.mu);
    const double* road = wentzell ? st.v.data() : st.u.data();
    int hit = -1;
    for (int i = cfg.grid.nx - 1; i >= 0; --i)
      if (road[i] >= thresh) {
        hit = i;
        break;
      }
    if (hit >= 0) {
      r.road_position_valid = true;
      if (hit == cfg.grid.nx - 1)
        r.road_position = cfg.grid.x_max;
      else
        r.road_position = cfg.grid.x(hit) +
                          cfg.grid.dx * (road[hit] - thresh) /
                              (road[hit] - road[hit + 1]);
    }
    out.records.push_back(std::move(r));
    out.snapshots.push_back(st);
  };

  std::size_t next = 0;
  while (next < times.size() && times[next] <= 1e-12) {
    record(s);
    ++next;
  }
  if (cfg.t_end <= 0.0) {
    if (out.snapshots.empty()) record(s);
    return out;
  }

  long nsteps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  for (long k = 0; k < nsteps; ++k) {
    s = step(s, cfg);
    while (next < times.size() && s.t >= times[next] - 1e-9) {
      record(s);
      ++next;
    }
  }
  if (out.snapshots.empty() || out.snapshots.back().t < s.t - 1e-9)
    if (next >= times.size()) record(s);
  return out;
}

}  // namespace roadfield
