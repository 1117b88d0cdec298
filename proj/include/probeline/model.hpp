#pragma once

#include <vector>

#include "probeline/errors.hpp"

namespace probeline {

// Relaxation constants of the three-level ladder (upper level m, probed
// level g in between, common lower level n).  All values are half-widths /
// level widths in angular-frequency units; any consistent unit system works
// and the CLI defaults to units where gamma (the drive line) equals 1.
struct RelaxationSet {
  double gamma_gn;         // probe line g-n half-width
  double gamma_gm;         // adjacent (two-photon) line g-m half-width
  double gamma;            // drive line m-n half-width
  double gamma_m;          // width of level m
  double gamma_n;          // width of level n
  double gamma_mn_branch;  // m -> n transfer probability, 0 <= . <= gamma_m
};

// Strong resonant field on the m-n transition: intensity |G|^2 (square of
// the Rabi-type coupling) and its rest-frame detuning.
struct DriveField {
  double g_sq = 0.0;
  double detuning = 0.0;
};

// Ratio of the unsaturated population differences, x = dn_mn / dn_gn.
// The probed difference dn_gn is assumed nonzero; all outputs are
// normalized, so its magnitude and sign never enter explicitly.
struct PopulationRatio {
  double x = 0.0;
};

// Strictly increasing, nonempty list of probe detunings.
class ProbeGrid {
 public:
  explicit ProbeGrid(std::vector<double> points);
  static ProbeGrid linspace(double min, double max, std::size_t count);

  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }

 private:
  std::vector<double> points_;
};

// Returns the set unchanged iff every invariant holds, otherwise throws
// InvalidModel naming the violated invariant.
RelaxationSet validate(const RelaxationSet& raw);

// (gamma_m + gamma_n - gamma_mn_branch) / (gamma_m gamma_n gamma).
// The saturation parameter is kappa = 2 * tau_squared * |G|^2.
double tau_squared(const RelaxationSet& m);

double saturation_kappa(const RelaxationSet& m, double g_sq);

// Inverse of saturation_kappa in |G|^2, so field strength can be specified
// as kappa (the way sweep presets state it).
double g_sq_from_kappa(const RelaxationSet& m, double kappa);

}  // namespace probeline
