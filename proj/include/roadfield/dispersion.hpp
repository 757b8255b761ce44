#pragma once

#include <utility>

#include "roadfield/params.hpp"

namespace roadfield {

// Exponent pair (alpha, beta) of a linearized exponential solution
// e^{alpha x} sh(beta (y + L)), together with the residuals of the two
// dispersion equations re-evaluated at the root.
struct DispersionRoot {
  double alpha = 0.0;
  double beta = 0.0;
  double residual_bulk = 0.0;
  double residual_road = 0.0;
  double c = 0.0;
  ModelParams params;
};

// The three parameter limits with closed-form exponent estimates.
enum class AsymptoticCase { Case1, Case2, Case3 };

struct Residuals {
  double bulk;
  double road;
};

// Bulk equation -d(a^2+b^2) + c a and the one-species road equation
// -D a^2 + c a + (b/mu) cotanh(b L). Pure evaluation; series fallback for
// b*L below 1e-6 avoids the 0/0 in the cotanh term.
Residuals residual_one_species(double alpha, double beta, double c,
                               const ModelParams& p);

// Two-species road equation: -D a^2 + c a
//   + d b mu ch(b L) / (sh(b L) + d b ch(b L)).
// The printed denominator has a bare "sh"; it is read as sh(b L).
Residuals residual_two_species(double alpha, double beta, double c,
                               const ModelParams& p);

// Eliminates beta(alpha) = sqrt((c a - d a^2)/d) from the bulk equation and
// solves the road equation for alpha on (eps, c/d - eps) by a sign scan,
// bisection, and a Newton polish. Returns the smallest positive root.
// Throws NoRootInBracket / NonConvergence.
DispersionRoot solve_exponents(double c, const ModelParams& p);

// Closed-form asymptotic exponent pairs for the chosen model and case.
// One species:  case 1 -> (sqrt(1/(mu L D)), sqrt(c/(d sqrt(mu D L))))
//               cases 2,3 -> ((c/(d D^2))^{1/3}, mu (c/sqrt(D))^{2/3})
// Two species:  case 1 -> (sqrt(mu/(L D)), sqrt(c sqrt(mu)/(d sqrt(D L))))
//               cases 2,3 -> ((c/(d D^2))^{1/3}, (1/mu)(c/sqrt(D))^{2/3})
std::pair<double, double> asymptotic_exponents(AsymptoticCase which, double c,
                                               const ModelParams& p);

// e^{alpha x} sh(beta (y + L)) for y in [-L, 0].
double exponential_barrier(double x, double y, const DispersionRoot& root);

}  // namespace roadfield
