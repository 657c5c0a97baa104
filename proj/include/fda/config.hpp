#pragma once

#include <complex>
#include <vector>

namespace fda {

// Progressive phase taper w_m = exp(-j*m*phi_o), m = 0..m_antennas-1.
std::vector<std::complex<double>> progressive_weights(int m_antennas,
                                                      double initial_phase_rad);

// Uniform linear transmit array with a small per-element frequency offset.
// Element m radiates at carrier_hz + m*offset_hz for pulse_s seconds.
struct ArrayConfig {
  int m_antennas = 0;            // M >= 1
  double spacing_m = 0.0;        // inter-element spacing d, m
  double carrier_hz = 0.0;       // f_c, Hz
  double offset_hz = 0.0;        // inter-element frequency offset f_o, Hz
  double pulse_s = 0.0;          // pulse duration T, s
  double initial_phase_rad = 0.0;  // phi_o, progressive phase step
  std::vector<std::complex<double>> weights;  // per-element taps, size M

  // Config with weights defaulted to the progressive taper of phi_o.
  static ArrayConfig make(int m_antennas, double spacing_m, double carrier_hz,
                          double offset_hz, double pulse_s,
                          double initial_phase_rad = 0.0);

  double wavelength() const;               // c / f_c
  static double half_wavelength(double carrier_hz);

  // True when spacing_m matches c/(2 f_c) to the given relative tolerance.
  bool has_half_wavelength_spacing(double rel_tol = 1e-9) const;

  // Throws ValidationError naming the offending field.
  void validate() const;
};

// Point scatterer position in (range, angle) polar form.
struct Target {
  double range_m = 0.0;    // R_o > 0
  double angle_rad = 0.0;  // theta in [-pi/2, pi/2]

  void validate() const;
};

}  // namespace fda
