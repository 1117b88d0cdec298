#pragma once

#include <vector>

#include "probeline/model.hpp"

namespace probeline {

// Selects which strong-field structures enter the evaluation.  All eight
// combinations are legal.
//   include_splitting    -- the |G|^2 term in the common resolvent
//                           denominator (field broadening / splitting)
//   include_population   -- the (1 - gamma_mn/gamma_m) 2 gamma/gamma_n term
//                           (field-driven population transfer)
//   include_interference -- the (gamma + i Omega) / (gamma_gm + i(Omega_mu -
//                           Omega)) term (correlated two-photon emission)
struct ContributionToggles {
  bool include_splitting = true;
  bool include_population = true;
  bool include_interference = true;
};

// One probe-detuning sample of the normalized gain together with its
// breakdown.  The three part columns share the common (field-modified)
// resolvent, so they are a reporting breakdown rather than independent
// physical effects; with all toggles on they sum to `total` up to rounding.
struct GainSample {
  double omega_mu = 0.0;
  double total = 0.0;
  double splitting_only = 0.0;    // resolvent term alone (bracket == 1)
  double population_part = 0.0;   // population term of the bracket
  double interference_part = 0.0; // interference term of the bracket
};

// Normalized weak-probe gain alpha_mu / alpha_mu^0 at probe detuning
// omega_mu.  Real part of the full complex expression; finite for all valid
// inputs because every denominator keeps a positive real part.
double alpha_ratio(const RelaxationSet& m, const DriveField& d,
                   PopulationRatio x, double omega_mu);

// (rho_mm - rho_nn) / dn_mn, the saturated drive-transition population
// difference relative to its unsaturated value.  In (0, 1].
double population_difference_mn(const RelaxationSet& m, const DriveField& d);

// (n_g - rho_nn) / dn_gn; may turn negative at strong saturation.
double population_difference_gn(const RelaxationSet& m, const DriveField& d,
                                PopulationRatio x);

// Evaluates the gain with the deselected terms zeroed.  With all toggles on,
// total equals alpha_ratio exactly (same code path).
GainSample contributions(const RelaxationSet& m, const DriveField& d,
                         PopulationRatio x, double omega_mu,
                         const ContributionToggles& toggles = {});

// Grid evaluation.  spectrum() fans the points out across OpenMP threads;
// spectrum_serial() is the plain-loop reference kept for testing and
// benchmarking.  Results are identical bit for bit.
std::vector<GainSample> spectrum(const RelaxationSet& m, const DriveField& d,
                                 PopulationRatio x, const ProbeGrid& grid,
                                 const ContributionToggles& toggles = {});
std::vector<GainSample> spectrum_serial(const RelaxationSet& m,
                                        const DriveField& d, PopulationRatio x,
                                        const ProbeGrid& grid,
                                        const ContributionToggles& toggles = {});

}  // namespace probeline
