#pragma once

#include <complex>

#include "fda/config.hpp"
#include "fda/timing.hpp"

namespace fda {

// Signal-model variants.
//
// Exact: per-element phase m*(f_o*(t - t_o) + f_c*d*sin(theta)/c
//        + m*f_o*d*sin(theta)/c), with each element gated by its own arrival
//        window [t_o - tau_m, t_o - tau_m + T].  Transients appear as partial
//        sums over the arrived-and-unexpired elements.
// Compact: half-wavelength simplification f_c*d/c = 1/2, the m^2 term and the
//        per-element arrival stagger dropped; all elements share the support
//        window [t_o, t_o + T].
enum class Model {
  Exact,
  Compact,
};

// Complex array factor at the target at observation time t, with the common
// carrier factor exp(-j*2*pi*f_c*(t - t_o)) removed.  Elements are summed in
// ascending index order (deterministic accumulation).  Exactly zero when no
// element is active.  continuous_wave removes the pulse gating entirely.
std::complex<double> array_factor(const ArrayConfig& config,
                                  const Target& target, double t,
                                  bool continuous_wave = false);

// Compact-model array factor: sum_m w_m exp(-j*2*pi*m*(f_o*(t-t_o)
// + sin(theta)/2)) on t in [t_o, t_o + T] (all t if continuous_wave).
// Requires spacing within 1e-9 relative of half a carrier wavelength;
// throws ValidationError otherwise.
std::complex<double> array_factor_compact(const ArrayConfig& config,
                                          const Target& target, double t,
                                          bool continuous_wave = false);

// |array factor|^2 under the chosen model.
double beampattern(const ArrayConfig& config, const Target& target, double t,
                   Model model, bool continuous_wave = false);

// Steady-state pattern; defined only while all M pulses overlap the target.
// Throws std::domain_error outside [latest arrival, earliest arrival + T].
double steady_state_beampattern(const ArrayConfig& config,
                                const Target& target, double t);

// Largest power the active subarray can deliver: (sum of active |w_m|)^2.
// Attained when all active phase terms align.
double peak_power_bound(const ArrayConfig& config, const Target& target,
                        double t, bool continuous_wave = false);

// One evaluated point of the pattern.
struct BeamSample {
  double time_s = 0.0;
  Target target;
  std::complex<double> af;  // complex array factor
  double power = 0.0;       // |af|^2
};

BeamSample sample(const ArrayConfig& config, const Target& target, double t,
                  Model model, bool continuous_wave = false);

}  // namespace fda
