#pragma once

#include <string>

#include "roadfield/errors.hpp"

namespace roadfield {

enum class Model { OneSpecies, TwoSpecies };

inline const char* to_string(Model m) {
  return m == Model::OneSpecies ? "one_species" : "two_species";
}

// Physical constants of the road-field system. All quantities are
// dimensionless in code; d and D are the field and road diffusivities,
// mu and nu the exchange rates, L the cylinder depth.
struct ModelParams {
  double d = 1.0;
  double D = 10.0;
  double mu = 1.0;
  double nu = 1.0;  // ignored by the one-species model
  double L = 20.0;
  Model model = Model::OneSpecies;
};

// Returns p unchanged if valid. The one-species model additionally
// requires D >= d.
ModelParams validate_params(const ModelParams& p);

// Speed of the 1D free-boundary reference wave: -d phi'' + c phi' = 0 on
// y < 0, phi(-inf) = 1, phi(0) = 0, |phi'(0-)| = 1. Closed form c0 = d.
double reference_speed_c0(double d);

// Profile of that wave: phi0(y) = 1 - exp((c0/d) y) for y <= 0, 0 above.
double reference_wave_profile(double d, double y);

}  // namespace roadfield
