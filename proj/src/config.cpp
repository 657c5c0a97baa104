#include "fda/config.hpp"

#include <cmath>
#include <string>

#include "fda/constants.hpp"
#include "fda/errors.hpp"

namespace fda {

std::vector<std::complex<double>> progressive_weights(int m_antennas,
                                                      double initial_phase_rad) {
  if (m_antennas < 1) {
    throw ValidationError("m_antennas: must be >= 1");
  }
  std::vector<std::complex<double>> w(static_cast<std::size_t>(m_antennas));
  for (int m = 0; m < m_antennas; ++m) {
    w[static_cast<std::size_t>(m)] = std::polar(1.0, -m * initial_phase_rad);
  }
  return w;
}

ArrayConfig ArrayConfig::make(int m_antennas, double spacing_m,
                              double carrier_hz, double offset_hz,
                              double pulse_s, double initial_phase_rad) {
  ArrayConfig cfg;
  cfg.m_antennas = m_antennas;
  cfg.spacing_m = spacing_m;
  cfg.carrier_hz = carrier_hz;
  cfg.offset_hz = offset_hz;
  cfg.pulse_s = pulse_s;
  cfg.initial_phase_rad = initial_phase_rad;
  cfg.weights = progressive_weights(m_antennas, initial_phase_rad);
  cfg.validate();
  return cfg;
}

double ArrayConfig::wavelength() const { return speed_of_light / carrier_hz; }

double ArrayConfig::half_wavelength(double carrier_hz) {
  return speed_of_light / (2.0 * carrier_hz);
}

bool ArrayConfig::has_half_wavelength_spacing(double rel_tol) const {
  const double ref = half_wavelength(carrier_hz);
  return std::abs(spacing_m - ref) <= rel_tol * ref;
}

void ArrayConfig::validate() const {
  if (m_antennas < 1) {
    throw ValidationError("m_antennas: must be >= 1");
  }
  if (!(spacing_m > 0.0) || !std::isfinite(spacing_m)) {
    throw ValidationError("spacing_m: must be finite and > 0");
  }
  if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz)) {
    throw ValidationError("carrier_hz: must be finite and > 0");
  }
  if (!(pulse_s > 0.0) || !std::isfinite(pulse_s)) {
    throw ValidationError("pulse_s: must be finite and > 0");
  }
  if (!std::isfinite(offset_hz)) {
    throw ValidationError("offset_hz: must be finite");
  }
  if (!std::isfinite(initial_phase_rad)) {
    throw ValidationError("initial_phase_rad: must be finite");
  }
  if (weights.size() != static_cast<std::size_t>(m_antennas)) {
    throw ValidationError("weights: length must equal m_antennas (" +
                          std::to_string(weights.size()) + " vs " +
                          std::to_string(m_antennas) + ")");
  }
}

void Target::validate() const {
  if (!(range_m > 0.0) || !std::isfinite(range_m)) {
    throw ValidationError("range_m: must be finite and > 0");
  }
  if (!(std::abs(angle_rad) <= pi / 2.0)) {
    throw ValidationError("angle_rad: must lie in [-pi/2, pi/2]");
  }
}

}  // namespace fda
