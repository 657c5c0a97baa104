#include "fda/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fda/array_factor.hpp"
#include "fda/constants.hpp"
#include "fda/errors.hpp"
#include "fda/timing.hpp"

namespace fda {

double DesiredPattern::ftheta_bin(int k, int grid_size) {
  return -0.5 + static_cast<double>(k) / grid_size;
}

std::vector<double> DesiredPattern::ftheta_bins(int grid_size) {
  std::vector<double> bins(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    bins[static_cast<std::size_t>(k)] = ftheta_bin(k, grid_size);
  }
  return bins;
}

DesiredPattern region_mask(
    std::span<const std::pair<double, double>> regions_deg, int grid_size) {
  if (grid_size < 2) {
    throw ValidationError("grid_size: must be >= 2");
  }
  if (regions_deg.empty()) {
    throw ValidationError("regions_deg: at least one interval required");
  }
  for (const auto& [lo, hi] : regions_deg) {
    if (!(lo <= hi)) {
      throw ValidationError("regions_deg: interval with hi < lo");
    }
    if (lo < -90.0 || hi > 90.0) {
      throw ValidationError("regions_deg: interval outside [-90, 90]");
    }
  }

  DesiredPattern desired;
  desired.grid_size = grid_size;
  desired.regions_deg.assign(regions_deg.begin(), regions_deg.end());
  desired.mask.assign(static_cast<std::size_t>(grid_size), 0.0);
  for (int k = 0; k < grid_size; ++k) {
    const double angle_deg =
        rad_to_deg(std::asin(2.0 * DesiredPattern::ftheta_bin(k, grid_size)));
    for (const auto& [lo, hi] : regions_deg) {
      if (angle_deg >= lo && angle_deg <= hi) {
        desired.mask[static_cast<std::size_t>(k)] = 1.0;
        break;
      }
    }
  }
  return desired;
}

SynthesizedWeights synthesize_weights(const DesiredPattern& desired,
                                      int m_antennas) {
  const int grid_size = desired.grid_size;
  if (m_antennas < 1) {
    throw ValidationError("m_antennas: must be >= 1");
  }
  if (grid_size < m_antennas) {
    throw ValidationError(
        "grid_size: must be >= m_antennas for inverse-transform synthesis (" +
        std::to_string(grid_size) + " < " + std::to_string(m_antennas) + ")");
  }
  if (desired.mask.size() != static_cast<std::size_t>(grid_size)) {
    throw ValidationError("mask: length must equal grid_size");
  }

  SynthesizedWeights result;
  result.weights.resize(static_cast<std::size_t>(m_antennas));
  for (int m = 0; m < m_antennas; ++m) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < grid_size; ++k) {
      acc += desired.mask[static_cast<std::size_t>(k)] *
             std::polar(1.0, two_pi * DesiredPattern::ftheta_bin(k, grid_size) *
                                 m);
    }
    result.weights[static_cast<std::size_t>(m)] =
        acc / static_cast<double>(grid_size);
  }

  // Forward evaluation on the design bins for the fit report.
  double sq_sum = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    std::complex<double> af{0.0, 0.0};
    for (int m = 0; m < m_antennas; ++m) {
      af += result.weights[static_cast<std::size_t>(m)] *
            std::polar(1.0, -two_pi * DesiredPattern::ftheta_bin(k, grid_size) *
                                m);
    }
    const double magnitude = std::abs(af);
    const double deviation =
        magnitude - desired.mask[static_cast<std::size_t>(k)];
    sq_sum += deviation * deviation;
    result.peak_af = std::max(result.peak_af, magnitude);
  }
  result.residual = std::sqrt(sq_sum / grid_size);
  return result;
}

BeamGrid designed_pattern(const SynthesizedWeights& weights,
                          const ArrayConfig& config, const Target& target,
                          double t, std::span<const double> theta_grid,
                          bool continuous_wave) {
  ArrayConfig designed = config;
  designed.weights = weights.weights;
  designed.validate();

  AxisSpec angle_axis;
  angle_axis.axis = SweepAxis::Angle;
  angle_axis.values.assign(theta_grid.begin(), theta_grid.end());
  FixedPoint fixed{t, target.range_m, target.angle_rad};
  return sweep(designed, {angle_axis}, fixed, Model::Compact, continuous_wave);
}

double predict_shift(const ArrayConfig& config, double t, double t_o) {
  return -config.offset_hz * (t - t_o);
}

double wrap_ftheta(double f_theta) {
  return f_theta - std::floor(f_theta + 0.5);
}

double shift_angle(double angle_rad, double delta_ftheta) {
  const double shifted =
      wrap_ftheta(0.5 * std::sin(angle_rad) + delta_ftheta);
  return std::asin(2.0 * shifted);
}

double dwell_time(std::span<const std::complex<double>> weights,
                  const ArrayConfig& config, const Target& target,
                  double theta_point_rad, double threshold_db) {
  ArrayConfig cfg = config;
  cfg.weights.assign(weights.begin(), weights.end());
  cfg.validate();

  const double t_o = propagation_delay(target);
  const Target point{target.range_m, theta_point_rad};

  constexpr int n_steps = 20000;
  const double dt = cfg.pulse_s / n_steps;
  std::vector<double> powers(n_steps + 1);
  for (int i = 0; i <= n_steps; ++i) {
    const double t = t_o + i * dt;
    powers[static_cast<std::size_t>(i)] =
        beampattern(cfg, point, t, Model::Compact);
  }
  const std::size_t peak = static_cast<std::size_t>(
      std::max_element(powers.begin(), powers.end()) - powers.begin());
  if (!(powers[peak] > 0.0)) {
    throw std::runtime_error(
        "dwell time undefined: point is never illuminated above zero power");
  }
  const double threshold = powers[peak] * std::pow(10.0, -threshold_db / 10.0);
  std::size_t lo = peak;
  while (lo > 0 && powers[lo - 1] >= threshold) {
    --lo;
  }
  std::size_t hi = peak;
  while (hi + 1 < powers.size() && powers[hi + 1] >= threshold) {
    ++hi;
  }
  if (lo == 0 && hi + 1 == powers.size()) {
    return cfg.pulse_s;  // whole support window within threshold
  }
  return (hi - lo) * dt;
}

}  // namespace fda
