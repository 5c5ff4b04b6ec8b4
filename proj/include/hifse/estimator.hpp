#pragma once

#include <Eigen/Dense>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hifse/measurement_model.hpp"
#include "hifse/simulation.hpp"

namespace hifse {

enum class WeightingRule {
  magnitude_proportional,  // step one: sigma_i = |z_i| / 100
  meter_precision,         // step two: fixed sigma per measurement kind
};

struct MeterPrecision {
  double flow_pu = 0.008;
  double injection_pu = 0.010;
  double voltage_pu = 0.004;
  double synthetic_pu = 0.030;

  double sigma_for(const MeasurementSpec& spec) const;
};

struct WeightingStep {
  WeightingRule rule = WeightingRule::magnitude_proportional;
  MeterPrecision meters;
  double magnitude_fraction = 0.01;
  double tiny_value_pu = 1e-6;
  double floor_sigma_pu = 1e-4;

  static WeightingStep one() { return {}; }
  static WeightingStep two(const MeterPrecision& meters = {}) {
    WeightingStep w;
    w.rule = WeightingRule::meter_precision;
    w.meters = meters;
    return w;
  }
  double sigma_for(const MeasurementSpec& spec, double z) const;
};

class EstimationError : public std::runtime_error {
 public:
  EstimationError(const std::string& what, Phase phase)
      : std::runtime_error(what), phase(phase) {}
  Phase phase;
};

inline constexpr double kLeverageClamp = 1e-12;
inline constexpr double kCriticalLeverage = 1.0 - 1e-9;

/// II = sqrt(1 - K_ii) / sqrt(K_ii); +inf for K_ii = 0. The diagonal is
/// clamped to [kLeverageClamp, 1 - kLeverageClamp] before the ratio.
double innovation_index(double k_ii);

/// Composed measurement error and its sigma-normalized form:
/// CME = r * sqrt(1 + 1/II^2), CME^N = CME / sigma.
struct ComposedError {
  double cme = 0.0;
  double cme_n = 0.0;
};
ComposedError cme(double residual, double ii, double sigma);

/// K = H (H' R^-1 H)^-1 H' R^-1, evaluated through a whitened QR so the
/// idempotence and trace identities hold near machine precision.
Eigen::MatrixXd projection_matrix(const Eigen::MatrixXd& jacobian,
                                  const Eigen::VectorXd& r_inv_diag);

/// Leverage diagonal K_ii without forming the full projector.
Eigen::VectorXd projection_diagonal(const Eigen::MatrixXd& jacobian,
                                    const Eigen::VectorXd& r_inv_diag);

/// One weighted least-squares step: argmin ||H dx - dz||_{R^-1}.
/// Throws EstimationError(phase) if H is column-rank deficient.
Eigen::VectorXd wls_linear_solve(const Eigen::MatrixXd& jacobian,
                                 const Eigen::VectorXd& r_inv_diag,
                                 const Eigen::VectorXd& dz, Phase phase = Phase::A);

/// Detectable / masked split of an error vector: e = K e + (I - K) e.
struct ErrorDecomposition {
  Eigen::VectorXd detectable;    // (I - K) e, the residual-visible part
  Eigen::VectorXd undetectable;  // K e
};
ErrorDecomposition decompose_error(const Eigen::VectorXd& error, const Eigen::MatrixXd& k);

/// Per-measurement undetectable magnitude implied by the residual and the
/// leverage: |e_U,i| = |r_i| / II_i.
Eigen::VectorXd undetectable_magnitude(const Eigen::VectorXd& residual,
                                       const Eigen::VectorXd& k_diagonal);

struct PhaseEstimation {
  Phase phase = Phase::A;
  std::vector<int> spec_indices;  // into the plan's spec list
  Eigen::VectorXd state;          // packed estimate (2n - 1)
  Eigen::VectorXd residual;       // z - h(x), per measurement
  Eigen::VectorXd sigma;          // weighting sigmas used
  Eigen::VectorXd k_diagonal;
  Eigen::VectorXd innovation;  // II per measurement
  Eigen::VectorXd cme;
  Eigen::VectorXd cme_n;
  std::vector<int> critical;  // in-phase indices with K_ii ~ 1
  double objective = 0.0;     // J = sum (CME_i / sigma_i)^2
  int iterations = 0;
  bool converged = false;
  Eigen::MatrixXd jacobian;    // H at the estimate
  Eigen::VectorXd r_inv_diag;  // 1 / sigma^2

  Eigen::MatrixXd projection() const { return projection_matrix(jacobian, r_inv_diag); }
};

struct EstimationResult {
  std::array<PhaseEstimation, kPhaseCount> phase;
  bool converged = false;

  const PhaseEstimation& for_phase(Phase p) const { return phase[static_cast<int>(p)]; }
  double objective_total() const;
};

struct EstimatorOptions {
  double tolerance = 1e-8;  // max |dx|
  int max_iterations = 50;
};

/// Per-phase Newton-Raphson WLS estimate with the innovation analytics
/// populated at the converged point. Phases are estimated independently;
/// x0 supplies warm starts (packed, one per phase).
EstimationResult wls_estimate(const NetworkTopology& topology, const MeasurementPlan& plan,
                              const MeasurementSet& measurements, const WeightingStep& weighting,
                              const std::optional<std::array<Eigen::VectorXd, kPhaseCount>>& x0 = std::nullopt,
                              const EstimatorOptions& options = {});

/// The spec subset and model for one phase of the plan.
MeasurementModel phase_model(const NetworkTopology& topology, const MeasurementPlan& plan,
                             Phase phase);

}  // namespace hifse
