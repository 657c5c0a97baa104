#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fda/config.hpp"
#include "fda/sweep.hpp"

namespace fda {

// Desired steady-state magnitude response sampled on the half-open
// normalized-frequency grid f_theta[k] = -0.5 + k/K, k = 0..K-1, where
// f_theta = sin(theta)/2.  The endpoint +0.5 aliases onto -0.5 and is
// excluded.
struct DesiredPattern {
  int grid_size = 0;          // K
  std::vector<double> mask;   // desired |AF| per bin, >= 0
  std::vector<std::pair<double, double>> regions_deg;  // provenance

  static double ftheta_bin(int k, int grid_size);
  static std::vector<double> ftheta_bins(int grid_size);
};

// Builds a unity mask over the union of closed angular intervals (degrees).
// Throws ValidationError for an empty region list, intervals outside
// [-90, 90] or with hi < lo, or grid_size < 2.
DesiredPattern region_mask(
    std::span<const std::pair<double, double>> regions_deg, int grid_size);

// Inverse-transform weight synthesis, truncated to the first m_antennas taps:
//   w_m = (1/K) sum_k mask[k] exp(+j 2 pi f_theta[k] m).
// Requires grid_size >= m_antennas.  Weights are returned unnormalized;
// peak_af reports the achieved pattern maximum so callers may renormalize.
struct SynthesizedWeights {
  std::vector<std::complex<double>> weights;
  double residual = 0.0;  // RMS of (|achieved AF| - mask) over design bins
  double peak_af = 0.0;   // max |achieved AF| over design bins
};

SynthesizedWeights synthesize_weights(const DesiredPattern& desired,
                                      int m_antennas);

// Compact-model pattern of the synthesized weights over an angle grid at
// observation time t (target range fixes t_o).
BeamGrid designed_pattern(const SynthesizedWeights& weights,
                          const ArrayConfig& config, const Target& target,
                          double t, std::span<const double> theta_grid,
                          bool continuous_wave = false);

// Pattern translation in f_theta = sin(theta)/2 between observation times:
// delta_f = -f_o (t - t_o).  Features wrap modulo the length-1 period
// (grating-lobe reentry).
double predict_shift(const ArrayConfig& config, double t, double t_o);

// Wraps a normalized frequency into [-0.5, 0.5).
double wrap_ftheta(double f_theta);

// Angle a pattern feature at angle_rad has moved to after a shift of
// delta_ftheta, following the wrap rule.
double shift_angle(double angle_rad, double delta_ftheta);

// Time the pattern at theta_point stays within threshold_db of its sweep
// maximum over t in [t_o, t_o + T] (contiguous run containing the maximum).
// The given weights replace the config taper.  Throws std::runtime_error when
// the point is never illuminated.
double dwell_time(std::span<const std::complex<double>> weights,
                  const ArrayConfig& config, const Target& target,
                  double theta_point_rad, double threshold_db);

}  // namespace fda
