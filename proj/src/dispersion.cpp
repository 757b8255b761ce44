#include "roadfield/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace roadfield {

namespace {

// beta * cotanh(beta L), finite at beta -> 0 where it tends to 1/L.
double beta_coth_betaL(double beta, double L) {
  double t = beta * L;
  if (t < 1e-6) return (1.0 / L) * (1.0 + t * t / 3.0);
  return beta / std::tanh(t);
}

// d beta mu ch(bL) / (sh(bL) + d beta ch(bL)) evaluated as
// d beta mu / (tanh(bL) + d beta), overflow-free for large bL.
double two_species_fraction(double beta, double d, double mu, double L) {
  double t = beta * L;
  if (t < 1e-6) return d * mu * beta / (beta * (L + d));
  return d * beta * mu / (std::tanh(t) + d * beta);
}

double beta_from_bulk(double alpha, double c, double d) {
  double b2 = (c * alpha - d * alpha * alpha) / d;
  return b2 > 0.0 ? std::sqrt(b2) : 0.0;
}

}  // namespace

Residuals residual_one_species(double alpha, double beta, double c,
                               const ModelParams& p) {
  double bulk = -p.d * (alpha * alpha + beta * beta) + c * alpha;
  double road = -p.D * alpha * alpha + c * alpha +
                beta_coth_betaL(beta, p.L) / p.mu;
  return {bulk, road};
}

Residuals residual_two_species(double alpha, double beta, double c,
                               const ModelParams& p) {
  double bulk = -p.d * (alpha * alpha + beta * beta) + c * alpha;
  double road = -p.D * alpha * alpha + c * alpha +
                two_species_fraction(beta, p.d, p.mu, p.L);
  return {bulk, road};
}

DispersionRoot solve_exponents(double c, const ModelParams& p) {
  if (!(c > 0.0)) fail(ErrorCode::NonPositiveParameter, "c");
  validate_params(p);

  auto road = [&](double alpha) {
    double beta = beta_from_bulk(alpha, c, p.d);
    return p.model == Model::OneSpecies
               ? residual_one_species(alpha, beta, c, p).road
               : residual_two_species(alpha, beta, c, p).road;
  };

  double hi_end = c / p.d;
  double eps = 1e-12 * hi_end;
  double lo = eps, hi = hi_end - eps;

  // sign scan for the smallest bracket; geometric spacing resolves roots
  // many orders of magnitude below c/d (e.g. alpha ~ 1/sqrt(mu L D))
  const int kScan = 4000;
  double a_prev = lo, f_prev = road(lo);
  double bra_lo = 0.0, bra_hi = 0.0;
  bool found = false;
  double ratio = std::pow(hi / lo, 1.0 / kScan);
  for (int k = 1; k <= kScan; ++k) {
    double a = lo * std::pow(ratio, k);
    if (k == kScan) a = hi;
    double f = road(a);
    if (f == 0.0) {
      bra_lo = bra_hi = a;
      found = true;
      break;
    }
    if ((f_prev < 0.0) != (f < 0.0)) {
      bra_lo = a_prev;
      bra_hi = a;
      found = true;
      break;
    }
    a_prev = a;
    f_prev = f;
  }
  if (!found)
    fail(ErrorCode::NoRootInBracket,
         "road residual does not change sign on (eps, c/d - eps) for c = " +
             std::to_string(c));

  double a_lo = bra_lo, a_hi = bra_hi;
  double f_lo = road(a_lo);
  for (int it = 0; it < 200 && a_hi - a_lo > 0.0; ++it) {
    double mid = 0.5 * (a_lo + a_hi);
    if (mid == a_lo || mid == a_hi) break;
    double fm = road(mid);
    if (fm == 0.0) {
      a_lo = a_hi = mid;
      break;
    }
    if ((fm < 0.0) == (f_lo < 0.0)) {
      a_lo = mid;
      f_lo = fm;
    } else {
      a_hi = mid;
    }
  }
  double alpha = 0.5 * (a_lo + a_hi);

  // Newton polish with a numerical derivative
  for (int it = 0; it < 8; ++it) {
    double f = road(alpha);
    double h = std::max(1e-9 * alpha, 1e-18);
    double fp = (road(alpha + h) - road(alpha - h)) / (2.0 * h);
    if (fp == 0.0) break;
    double next = alpha - f / fp;
    if (!(next > eps) || !(next < hi_end - eps)) break;
    if (std::abs(next - alpha) < 1e-17 * std::max(1.0, alpha)) {
      alpha = next;
      break;
    }
    alpha = next;
  }

  DispersionRoot root;
  root.alpha = alpha;
  root.beta = beta_from_bulk(alpha, c, p.d);
  root.c = c;
  root.params = p;
  Residuals r = p.model == Model::OneSpecies
                    ? residual_one_species(root.alpha, root.beta, c, p)
                    : residual_two_species(root.alpha, root.beta, c, p);
  root.residual_bulk = r.bulk;
  root.residual_road = r.road;
  double scale = std::max(1.0, std::abs(c * alpha));
  if (std::max(std::abs(r.bulk), std::abs(r.road)) > 1e-10 * scale)
    fail(ErrorCode::NonConvergence,
         "dispersion root residual above 1e-10 after refinement");
  return root;
}

std::pair<double, double> asymptotic_exponents(AsymptoticCase which, double c,
                                               const ModelParams& p) {
  double d = p.d, D = p.D, mu = p.mu, L = p.L;
  if (p.model == Model::OneSpecies) {
    if (which == AsymptoticCase::Case1)
      return {std::sqrt(1.0 / (mu * L * D)),
              std::sqrt(c / (d * std::sqrt(mu * D * L)))};
    return {std::cbrt(c / (d * D * D)),
            mu * std::pow(c / std::sqrt(D), 2.0 / 3.0)};
  }
  if (which == AsymptoticCase::Case1)
    return {std::sqrt(mu / (L * D)),
            std::sqrt(c * std::sqrt(mu) / (d * std::sqrt(D * L)))};
  return {std::cbrt(c / (d * D * D)),
          (1.0 / mu) * std::pow(c / std::sqrt(D), 2.0 / 3.0)};
}

double exponential_barrier(double x, double y, const DispersionRoot& root) {
  return std::exp(root.alpha * x) * std::sinh(root.beta * (y + root.params.L));
}

}  // namespace roadfield
