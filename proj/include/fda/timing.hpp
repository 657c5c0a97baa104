#pragma once

#include <utility>

#include "fda/config.hpp"

namespace fda {

// Illumination phase of a target at a given observation instant.  Arrival
// windows are closed: an element whose pulse arrives or expires exactly at t
// counts as active.
enum class BeamStateKind {
  NotIlluminated,  // before the first pulse arrives
  Transient1,      // pulses still arriving, not all present yet
  Steady,          // all M pulses overlap at the target
  Transient2,      // pulses expiring one by one
  Expired,         // after the last pulse has passed
};

struct BeamState {
  BeamStateKind kind = BeamStateKind::NotIlluminated;
  int active_antennas = 0;  // 0..M
};

const char* to_string(BeamStateKind kind);

// One-way propagation delay t_o = R_o / c.
double propagation_delay(const Target& target);

// Path-difference delay tau_m = m * d * sin(theta) / c (signed).
double path_delay(const ArrayConfig& config, const Target& target, int m);

// Arrival time of element m's pulse at the target: t_o - tau_m.
// Throws std::out_of_range for m outside [0, M).
double element_delay(const ArrayConfig& config, const Target& target, int m);

// Contiguous index range [first, last) of elements whose pulses overlap the
// target at time t.  Arrivals are monotone in m, so the active set is always
// contiguous.
std::pair<int, int> active_range(const ArrayConfig& config,
                                 const Target& target, double t);

BeamState classify_state(const ArrayConfig& config, const Target& target,
                         double t);

// Interval during which all M pulses overlap at the target:
// [latest arrival, earliest arrival + T].  Empty when |tau_{M-1}| > T.
struct SteadyWindow {
  double begin_s = 0.0;
  double end_s = 0.0;
};

SteadyWindow steady_window(const ArrayConfig& config, const Target& target);

}  // namespace fda
