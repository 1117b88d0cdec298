#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "probeline/model.hpp"

namespace probeline {

// The two complex roots of
//   alpha^2 - (gamma_gn - gamma_gm + i Omega) alpha + |G|^2 = 0.
// roots() labels alpha1 with the principal "+" square-root branch;
// track_roots() may relabel for continuity and then sets swapped_from_principal.
// The unordered root set is branch-independent.
struct RootPair {
  std::complex<double> alpha1;
  std::complex<double> alpha2;
  bool swapped_from_principal = false;
};

// One Lorentzian-like component of the two-pole form of the gain.  Component
// k is the pole at gamma_gn + i omega_mu == alpha_k: its center is Im alpha_k
// and its half-width gamma_gn - Re alpha_k.  peak_height is |amplitude| /
// halfwidth, the height the term alone would have at its center (approximate
// when the components overlap).
struct Component {
  double center = 0.0;
  double halfwidth = 0.0;
  std::complex<double> amplitude{0.0, 0.0};
  double peak_height = 0.0;
};

struct ComponentSummary {
  std::array<Component, 2> comp{};
  bool degenerate = false;  // amplitudes are NaN when true
};

struct Decomposition {
  ComponentSummary components;
  double value = 0.0;  // two-term sum at the requested probe detuning
};

RootPair roots(const RelaxationSet& m, const DriveField& d);

// Roots collapse below this separation; partial fractions are then
// numerically meaningless (double pole) and callers must fall back to
// alpha_ratio.
double degeneracy_threshold(const RelaxationSet& m, const DriveField& d);

// Limiting root expressions for a resonant drive (Omega = 0).  The branch is
// selected by the ratio 4|G|^2 / (gamma_gn - gamma_gm)^2; throws
// AmbiguousRegime when that ratio lies in [0.1, 10] so neither limit applies.
RootPair asymptotic_roots_resonant(const RelaxationSet& m, double g_sq);

// Limiting roots for gamma_gn == gamma_gm, Omega != 0; branch selected by
// 4|G|^2 / Omega^2 with the same ambiguity window.
RootPair asymptotic_roots_balanced(const RelaxationSet& m, const DriveField& d);

// Two-pole evaluation of the gain at one probe detuning.  Throws
// DegenerateRoots when |alpha1 - alpha2| <= degeneracy_threshold.
Decomposition decompose(const RelaxationSet& m, const DriveField& d,
                        PopulationRatio x, double omega_mu);

// Centers, half-widths and amplitudes of the two components.  The
// single-argument form uses the pure-splitting (x = 0) amplitudes.
// Degenerate root pairs yield NaN amplitudes and degenerate == true.
ComponentSummary component_summary(const RelaxationSet& m, const DriveField& d);
ComponentSummary component_summary(const RelaxationSet& m, const DriveField& d,
                                   PopulationRatio x);

// Root labels followed along a parameter path, pairing each step with the
// previous one by least total displacement so component identity survives
// square-root branch crossings.  swap_steps records indices where the
// pairing either swapped relative to the principal labels or was an exact
// tie (branch crossing).
struct TrackedRoots {
  std::vector<RootPair> pairs;
  std::vector<std::size_t> swap_steps;
};

// Throws StepTooLarge when both pairings move farther than
// max_step_fraction * (root scale) in a single step.
TrackedRoots track_roots(const RelaxationSet& m,
                         std::span<const DriveField> path,
                         double max_step_fraction = 0.5);

}  // namespace probeline
