#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hifse/network.hpp"

namespace hifse {

/// Fault-resistance trajectory: polynomial build-up from r_start down to
/// r_shoulder over buildup_s, constant shoulder afterwards, with an optional
/// blocking window that re-inserts a near-open impedance.
struct RfProfile {
  double r_start_ohm = 4000.0;
  double r_shoulder_ohm = 1500.0;
  double buildup_s = 0.4;
  /// Coefficients in ascending powers of normalized build-up time u in [0,1].
  std::vector<double> poly_coeffs;
  /// Blocking window (on, off) in seconds since fault start.
  std::optional<std::pair<double, double>> intermittency_s;
  /// Blocking resistance; 0 means auto = max(1e9, 1e6 * r_shoulder_ohm).
  double r_open_ohm = 0.0;

  double resolved_r_open() const;
  void validate() const;

  /// Cubic ease between the endpoints (the default build-up shape).
  static RfProfile smoothstep(double r_start, double r_shoulder, double buildup_s);
  /// Least-squares polynomial through (u, r) control points, degree <= 6.
  static RfProfile fit_control_points(double r_start, double r_shoulder,
                                      double buildup_s,
                                      std::span<const std::pair<double, double>> points,
                                      int degree);
};

/// Fault resistance at `t` seconds since fault start.
double rf_at(const RfProfile& profile, double t);

/// Antiparallel diode breakdown voltages; unequal values produce the
/// half-cycle asymmetry of arcing faults.
struct DiodePair {
  double v_p_volts = 300.0;
  double v_n_volts = 200.0;
  void validate() const;
};

struct HifScenario {
  int bus = 0;
  Phase phase = Phase::A;
  double t_start_s = 0.5;
  double duration_s = 1.0;
  RfProfile rf;
  DiodePair diodes;

  bool active_at(double t) const {
    return t >= t_start_s && t <= t_start_s + duration_s;
  }
  void validate(const NetworkTopology& topology) const;
};

inline constexpr int kSamplesPerCycle = 128;
inline constexpr double kNominalHz = 60.0;

/// Piecewise-linear diode conduction: i = (v - v_p)/r_f above the positive
/// breakdown, (v + v_n)/r_f below the negative one, zero in the dead band.
std::vector<double> hif_current_waveform(std::span<const double> v_samples,
                                         double r_f_ohm, const DiodePair& diodes);

/// Single-bin Fourier projection of one cycle of samples onto the
/// fundamental, scaled to an RMS phasor (sqrt(2)*cos(wt) -> 1 at angle 0).
/// Requires at least 32 uniform samples covering exactly one cycle.
std::complex<double> fundamental_phasor(std::span<const double> samples);

/// Complex power drawn by the fault at time `t`: reconstructs one voltage
/// cycle from the RMS phasor (volts), pushes it through the diode/resistance
/// model with R_f held constant over the cycle, and composes S = V conj(I).
/// Units: volts in, W/var out.
std::complex<double> hif_equivalent_injection(std::complex<double> v_bus_volts,
                                              const HifScenario& scenario, double t);

}  // namespace hifse
