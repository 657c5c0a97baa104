#include "fda/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fda/constants.hpp"
#include "fda/errors.hpp"
#include "fda/timing.hpp"

namespace fda {

namespace {

// sin(x)/x with the analytic value at x = 0.
double dsinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double checked_asin(double x, const char* what) {
  if (std::abs(x) > 1.0) {
    throw std::domain_error(std::string(what) + ": arcsine argument " +
                            std::to_string(x) + " outside [-1, 1]");
  }
  return std::asin(x);
}

}  // namespace

BeamwidthReport rayleigh_beamwidth(const ArrayConfig& config) {
  config.validate();
  const double m_count = static_cast<double>(config.m_antennas);
  const double phase_term = config.initial_phase_rad / pi;
  BeamwidthReport report;
  report.theta_peak_rad = checked_asin(-phase_term, "beam peak");
  report.theta_first_null_rad =
      checked_asin(2.0 / m_count - phase_term, "first null");
  report.bw_exact_rad = report.theta_first_null_rad - report.theta_peak_rad;
  report.bw_approx_rad =
      2.0 / m_count +
      config.initial_phase_rad * config.initial_phase_rad / (m_count * pi * pi);
  return report;
}

CorrelationMatrix correlation_matrix(const ArrayConfig& config,
                                     const Target& target, bool ignore_tau) {
  config.validate();
  const int m_count = config.m_antennas;
  const double t_pulse = config.pulse_s;
  const double phi_o = config.initial_phase_rad;
  const double f_o = config.offset_hz;

  CorrelationMatrix matrix;
  matrix.size = m_count;
  matrix.entries.resize(static_cast<std::size_t>(m_count) *
                        static_cast<std::size_t>(m_count));

  const double t_o = propagation_delay(target);
  for (int m = 0; m < m_count; ++m) {
    for (int n = 0; n < m_count; ++n) {
      const int diff = n - m;
      std::complex<double> entry;
      if (diff == 0) {
        // A pulse always fully overlaps itself; keep the documented unit
        // diagonal exact instead of recomputing it as overlap/T.
        entry = {1.0, 0.0};
      } else if (ignore_tau) {
        entry = std::polar(dsinc(diff * pi * f_o * t_pulse),
                           diff * (phi_o + pi * f_o * t_pulse));
      } else {
        // Overlap of pulse m (present on [t_o - tau_m, t_o - tau_m + T]) and
        // pulse n; zero when the pulses never coincide at the target.
        const double arrival_m = element_delay(config, target, m);
        const double arrival_n = element_delay(config, target, n);
        const double lo = std::max(arrival_m, arrival_n);
        const double hi = std::min(arrival_m, arrival_n) + t_pulse;
        if (hi <= lo) {
          entry = {0.0, 0.0};
        } else {
          const double eta = f_o * diff;
          const std::complex<double> k =
              std::polar(1.0, diff * (phi_o - two_pi * f_o * t_o));
          if (eta == 0.0) {
            entry = k * ((hi - lo) / t_pulse);
          } else {
            const std::complex<double> j2pe{0.0, two_pi * eta};
            entry = k * (std::exp(j2pe * hi) - std::exp(j2pe * lo)) /
                    (j2pe * t_pulse);
          }
        }
      }
      matrix.entries[static_cast<std::size_t>(m) *
                         static_cast<std::size_t>(m_count) +
                     static_cast<std::size_t>(n)] = entry;
    }
  }
  return matrix;
}

AveragePattern average_power(const ArrayConfig& config,
                             std::span<const double> theta_grid) {
  config.validate();
  const int m_count = config.m_antennas;
  const double product = config.offset_hz * config.pulse_s;  // f_o T
  const double phi_o = config.initial_phase_rad;
  const double gamma = pi * product;

  // The tau-ignored matrix does not depend on the target position.
  const CorrelationMatrix matrix =
      correlation_matrix(config, Target{1.0, 0.0}, /*ignore_tau=*/true);

  AveragePattern pattern;
  pattern.angles_rad.assign(theta_grid.begin(), theta_grid.end());
  pattern.power.resize(theta_grid.size());
  const bool with_components = gamma != 0.0;
  if (with_components) {
    pattern.p1.resize(theta_grid.size());
    pattern.p2.resize(theta_grid.size());
  }

  std::vector<std::complex<double>> steering(
      static_cast<std::size_t>(m_count));
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    const double sin_theta = std::sin(theta_grid[i]);
    for (int n = 0; n < m_count; ++n) {
      steering[static_cast<std::size_t>(n)] =
          std::polar(1.0, n * pi * sin_theta);
    }
    std::complex<double> quad{0.0, 0.0};
    for (int m = 0; m < m_count; ++m) {
      std::complex<double> row{0.0, 0.0};
      for (int n = 0; n < m_count; ++n) {
        row += matrix.at(m, n) * steering[static_cast<std::size_t>(n)];
      }
      quad += std::conj(steering[static_cast<std::size_t>(m)]) * row;
    }
    pattern.power[i] = quad.real();

    if (with_components) {
      const double kappa = pi * sin_theta + gamma + phi_o;
      double sum_p1 = 0.0;
      double sum_p2 = 0.0;
      for (int n = 1; n < m_count; ++n) {
        const double term =
            std::sin(n * (gamma + kappa)) + std::sin(n * (gamma - kappa));
        sum_p1 += term / n;
        sum_p2 += term;
      }
      pattern.p1[i] = sum_p1;
      pattern.p2[i] = sum_p2;
    }
  }

  pattern.ftheta_edge_low = -(product + phi_o / two_pi);
  pattern.ftheta_edge_high = -phi_o / two_pi;
  if (std::abs(2.0 * pattern.ftheta_edge_low) <= 1.0) {
    pattern.theta1_rad = std::asin(2.0 * pattern.ftheta_edge_low);
  }
  if (std::abs(2.0 * pattern.ftheta_edge_high) <= 1.0) {
    pattern.theta2_rad = std::asin(2.0 * pattern.ftheta_edge_high);
  }
  if (pattern.theta1_rad && pattern.theta2_rad) {
    pattern.se_exact_rad = *pattern.theta2_rad - *pattern.theta1_rad;
  }
  pattern.se_approx_rad =
      2.0 * product + (2.0 * phi_o / pi) * product * product;
  return pattern;
}

double average_power_closed_form(const ArrayConfig& config, double theta_rad) {
  const int m_count = config.m_antennas;
  const double gamma = pi * config.offset_hz * config.pulse_s;
  const double kappa =
      pi * std::sin(theta_rad) + gamma + config.initial_phase_rad;
  double power = static_cast<double>(m_count);
  for (int n = 1; n < m_count; ++n) {
    power += 2.0 * (m_count - n) * dsinc(n * gamma) * std::cos(n * kappa);
  }
  return power;
}

FotVerdict check_fot_bound(const ArrayConfig& config) {
  const double product = std::abs(config.offset_hz * config.pulse_s);
  if (product > 0.5) {
    return FotVerdict::Violated;
  }
  if (product > 0.45) {
    return FotVerdict::Marginal;
  }
  return FotVerdict::Valid;
}

const char* to_string(FotVerdict verdict) {
  switch (verdict) {
    case FotVerdict::Valid:
      return "VALID";
    case FotVerdict::Marginal:
      return "MARGINAL";
    case FotVerdict::Violated:
      return "VIOLATED";
  }
  return "?";
}

Plateau find_plateau(std::span<const double> angles_rad,
                     std::span<const double> power, double threshold_db) {
  if (angles_rad.size() != power.size() || power.empty()) {
    throw ValidationError("plateau: angle and power vectors must match");
  }
  const std::size_t peak = static_cast<std::size_t>(
      std::max_element(power.begin(), power.end()) - power.begin());
  const double threshold = power[peak] * std::pow(10.0, -threshold_db / 10.0);
  std::size_t lo = peak;
  while (lo > 0 && power[lo - 1] >= threshold) {
    --lo;
  }
  std::size_t hi = peak;
  while (hi + 1 < power.size() && power[hi + 1] >= threshold) {
    ++hi;
  }
  if (hi == lo) {
    throw std::runtime_error(
        "plateau spans fewer than two grid samples; pattern too narrow for "
        "the grid");
  }
  return {angles_rad[lo], angles_rad[hi], angles_rad[hi] - angles_rad[lo]};
}

double measure_se_empirical(const AveragePattern& pattern,
                            double threshold_db) {
  return find_plateau(pattern.angles_rad, pattern.power, threshold_db)
      .width_rad;
}

double measure_peak_to_null(std::span<const double> angles_rad,
                            std::span<const double> power) {
  if (angles_rad.size() != power.size() || power.size() < 3) {
    throw ValidationError(
        "peak-to-null: need matching vectors with at least three samples");
  }
  const std::size_t peak = static_cast<std::size_t>(
      std::max_element(power.begin(), power.end()) - power.begin());
  for (std::size_t i = peak + 1; i + 1 < power.size(); ++i) {
    if (power[i] <= power[i - 1] && power[i] <= power[i + 1] &&
        power[i] < power[peak]) {
      return angles_rad[i] - angles_rad[peak];
    }
  }
  throw std::runtime_error(
      "no local minimum found above the pattern peak on this grid");
}

}  // namespace fda
