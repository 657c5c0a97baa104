#include "fda/array_factor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fda/constants.hpp"
#include "fda/errors.hpp"

namespace fda {

namespace {

// Full-model phase of element m (in cycles, carrier factored out):
// m*(f_o*(t - t_o) + f_c*d*sin(theta)/c + m*f_o*d*sin(theta)/c).
double element_phase_cycles(const ArrayConfig& config, double sin_theta,
                            double t_minus_to, int m) {
  const double geometric = config.carrier_hz * config.spacing_m * sin_theta /
                           speed_of_light;
  const double quadratic = config.offset_hz * config.spacing_m * sin_theta /
                           speed_of_light;
  return m * (config.offset_hz * t_minus_to + geometric + m * quadratic);
}

}  // namespace

std::complex<double> array_factor(const ArrayConfig& config,
                                  const Target& target, double t,
                                  bool continuous_wave) {
  const double t_o = propagation_delay(target);
  const double sin_theta = std::sin(target.angle_rad);
  const auto [first, last] = continuous_wave
                                 ? std::pair<int, int>{0, config.m_antennas}
                                 : active_range(config, target, t);
  std::complex<double> af{0.0, 0.0};
  for (int m = first; m < last; ++m) {
    const double phase = element_phase_cycles(config, sin_theta, t - t_o, m);
    af += config.weights[static_cast<std::size_t>(m)] *
          std::polar(1.0, -two_pi * phase);
  }
  return af;
}

std::complex<double> array_factor_compact(const ArrayConfig& config,
                                          const Target& target, double t,
                                          bool continuous_wave) {
  if (!config.has_half_wavelength_spacing()) {
    throw ValidationError(
        "spacing_m: compact model requires half-wavelength spacing "
        "(within 1e-9 relative of c/(2 f_c))");
  }
  const double t_o = propagation_delay(target);
  if (!continuous_wave && (t < t_o || t > t_o + config.pulse_s)) {
    return {0.0, 0.0};
  }
  const double f_theta = 0.5 * std::sin(target.angle_rad);
  const double u = config.offset_hz * (t - t_o) + f_theta;
  std::complex<double> af{0.0, 0.0};
  for (int m = 0; m < config.m_antennas; ++m) {
    af += config.weights[static_cast<std::size_t>(m)] *
          std::polar(1.0, -two_pi * m * u);
  }
  return af;
}

double beampattern(const ArrayConfig& config, const Target& target, double t,
                   Model model, bool continuous_wave) {
  const std::complex<double> af =
      (model == Model::Exact)
          ? array_factor(config, target, t, continuous_wave)
          : array_factor_compact(config, target, t, continuous_wave);
  return std::norm(af);
}

double steady_state_beampattern(const ArrayConfig& config,
                                const Target& target, double t) {
  const SteadyWindow window = steady_window(config, target);
  if (t < window.begin_s || t > window.end_s) {
    throw std::domain_error(
        "steady-state pattern undefined at t = " + std::to_string(t) +
        " s; all pulses overlap only on [" + std::to_string(window.begin_s) +
        ", " + std::to_string(window.end_s) + "] s");
  }
  return std::norm(array_factor(config, target, t));
}

double peak_power_bound(const ArrayConfig& config, const Target& target,
                        double t, bool continuous_wave) {
  const auto [first, last] = continuous_wave
                                 ? std::pair<int, int>{0, config.m_antennas}
                                 : active_range(config, target, t);
  double magnitude_sum = 0.0;
  for (int m = first; m < last; ++m) {
    magnitude_sum += std::abs(config.weights[static_cast<std::size_t>(m)]);
  }
  return magnitude_sum * magnitude_sum;
}

BeamSample sample(const ArrayConfig& config, const Target& target, double t,
                  Model model, bool continuous_wave) {
  BeamSample s;
  s.time_s = t;
  s.target = target;
  s.af = (model == Model::Exact)
             ? array_factor(config, target, t, continuous_wave)
             : array_factor_compact(config, target, t, continuous_wave);
  s.power = std::norm(s.af);
  return s;
}

}  // namespace fda
