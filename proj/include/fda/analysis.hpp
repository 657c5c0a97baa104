#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "fda/config.hpp"

namespace fda {

// Closed-form width of the steady-state main lobe at t = t_o under the
// progressive taper: peak at asin(-phi_o/pi), first null at
// asin(2/M - phi_o/pi).
struct BeamwidthReport {
  double theta_peak_rad = 0.0;        // asin(-phi_o/pi)
  double theta_first_null_rad = 0.0;  // asin(2/M - phi_o/pi)
  double bw_exact_rad = 0.0;          // first null - peak
  double bw_approx_rad = 0.0;         // 2/M + phi_o^2/(M pi^2)
};

// Throws std::domain_error when either arcsine argument leaves [-1, 1].
BeamwidthReport rayleigh_beamwidth(const ArrayConfig& config);

// Hermitian M x M waveform correlation matrix at the target, normalized so
// the diagonal is 1.  Entry (m, n) is the pulse-overlap average of
// s_m(t) s_n*(t) under the progressive taper.  With ignore_tau the
// path-difference stagger tau(theta) is dropped from the integration limits
// and phases, giving
//   R(m, n) = exp(j (n-m) (phi_o + pi f_o T)) * sinc((n-m) pi f_o T)
// with sinc(x) = sin(x)/x.  Diagonal entries use the analytic eta -> 0 limit.
struct CorrelationMatrix {
  int size = 0;
  std::vector<std::complex<double>> entries;  // row-major, size*size

  const std::complex<double>& at(int m, int n) const {
    return entries[static_cast<std::size_t>(m) *
                       static_cast<std::size_t>(size) +
                   static_cast<std::size_t>(n)];
  }
};

CorrelationMatrix correlation_matrix(const ArrayConfig& config,
                                     const Target& target, bool ignore_tau);

// Pulse-averaged transmit power pattern P(theta) and its closed-form edge
// predictions.  Angle-domain edges are absent when the corresponding sine
// leaves [-1, 1] (exactly the f_o*T bound failing).
struct AveragePattern {
  std::vector<double> angles_rad;
  std::vector<double> power;  // P(theta), quadratic-form evaluation
  std::vector<double> p1;     // decomposition term, empty when f_o = 0
  std::vector<double> p2;     // decomposition term, empty when f_o = 0

  double ftheta_edge_low = 0.0;   // -(f_o T + phi_o/(2 pi)), sin-domain
  double ftheta_edge_high = 0.0;  // -phi_o/(2 pi), sin-domain
  std::optional<double> theta1_rad;  // asin(2 * ftheta_edge_low)
  std::optional<double> theta2_rad;  // asin(2 * ftheta_edge_high)
  std::optional<double> se_exact_rad;  // theta2 - theta1
  double se_approx_rad = 0.0;  // 2 f_o T + (2 phi_o/pi) (f_o T)^2
};

// Evaluates P(theta) = a^H(theta) R a(theta) with the tau-ignored correlation
// matrix over the given angle grid (radians).  The progressive taper of
// initial_phase_rad is assumed; config.weights is not consulted.
AveragePattern average_power(const ArrayConfig& config,
                             std::span<const double> theta_grid);

// Same quantity through the sinc series
//   P = M + 2 sum_{n=1}^{M-1} (M - n) sin(n g) cos(n k) / (n g),
// g = pi f_o T, k = pi sin(theta) + pi f_o T + phi_o (f_o = 0 handled as the
// g -> 0 limit, i.e. the phased-array pattern).
double average_power_closed_form(const ArrayConfig& config, double theta_rad);

// Offset-time product check: the average pattern's edge predictions require
// |f_o T| <= 0.5.  Marginal flags products inside (0.45, 0.5], which satisfy
// the bound but sit close to it.
enum class FotVerdict {
  Valid,
  Marginal,
  Violated,
};

FotVerdict check_fot_bound(const ArrayConfig& config);
const char* to_string(FotVerdict verdict);

// Contiguous run of grid samples within threshold_db of the pattern maximum,
// containing the maximum itself.
struct Plateau {
  double theta_low_rad = 0.0;
  double theta_high_rad = 0.0;
  double width_rad = 0.0;
};

// Throws std::runtime_error when the run spans fewer than two samples
// (pattern too narrow for the grid).
Plateau find_plateau(std::span<const double> angles_rad,
                     std::span<const double> power, double threshold_db);

// Width of the threshold_db plateau of an average pattern, radians.
double measure_se_empirical(const AveragePattern& pattern,
                            double threshold_db);

// Distance from the pattern maximum to the first local minimum at higher
// angle (peak-to-null scan on a sampled pattern).  Throws std::runtime_error
// when no null exists to the right of the peak.
double measure_peak_to_null(std::span<const double> angles_rad,
                            std::span<const double> power);

}  // namespace fda
