#include "fda/timing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fda/constants.hpp"

namespace fda {

const char* to_string(BeamStateKind kind) {
  switch (kind) {
    case BeamStateKind::NotIlluminated:
      return "not-illuminated";
    case BeamStateKind::Transient1:
      return "transient-1";
    case BeamStateKind::Steady:
      return "steady";
    case BeamStateKind::Transient2:
      return "transient-2";
    case BeamStateKind::Expired:
      return "expired";
  }
  return "?";
}

double propagation_delay(const Target& target) {
  return target.range_m / speed_of_light;
}

double path_delay(const ArrayConfig& config, const Target& target, int m) {
  return m * config.spacing_m * std::sin(target.angle_rad) / speed_of_light;
}

double element_delay(const ArrayConfig& config, const Target& target, int m) {
  if (m < 0 || m >= config.m_antennas) {
    throw std::out_of_range("element index " + std::to_string(m) +
                            " outside [0, " +
                            std::to_string(config.m_antennas) + ")");
  }
  return propagation_delay(target) - path_delay(config, target, m);
}

std::pair<int, int> active_range(const ArrayConfig& config,
                                 const Target& target, double t) {
  const int m_count = config.m_antennas;
  int first = m_count;
  int last = 0;
  for (int m = 0; m < m_count; ++m) {
    const double arrival = element_delay(config, target, m);
    if (t >= arrival && t <= arrival + config.pulse_s) {
      first = std::min(first, m);
      last = std::max(last, m + 1);
    }
  }
  if (first >= last) {
    return {0, 0};
  }
  return {first, last};
}

BeamState classify_state(const ArrayConfig& config, const Target& target,
                         double t) {
  const int m_count = config.m_antennas;
  double first_arrival = element_delay(config, target, 0);
  double last_arrival = first_arrival;
  int active = 0;
  for (int m = 0; m < m_count; ++m) {
    const double arrival = element_delay(config, target, m);
    first_arrival = std::min(first_arrival, arrival);
    last_arrival = std::max(last_arrival, arrival);
    if (t >= arrival && t <= arrival + config.pulse_s) {
      ++active;
    }
  }

  BeamState state;
  state.active_antennas = active;
  if (active == m_count) {
    state.kind = BeamStateKind::Steady;
  } else if (active == 0) {
    state.kind = (t < first_arrival) ? BeamStateKind::NotIlluminated
                                     : BeamStateKind::Expired;
  } else {
    state.kind = (t < last_arrival) ? BeamStateKind::Transient1
                                    : BeamStateKind::Transient2;
  }
  return state;
}

SteadyWindow steady_window(const ArrayConfig& config, const Target& target) {
  double first_arrival = element_delay(config, target, 0);
  double last_arrival = first_arrival;
  for (int m = 1; m < config.m_antennas; ++m) {
    const double arrival = element_delay(config, target, m);
    first_arrival = std::min(first_arrival, arrival);
    last_arrival = std::max(last_arrival, arrival);
  }
  return {last_arrival, first_arrival + config.pulse_s};
}

}  // namespace fda
