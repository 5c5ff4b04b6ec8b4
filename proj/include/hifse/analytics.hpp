#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hifse/estimator.hpp"
#include "hifse/stats.hpp"

namespace hifse {

enum class DofConvention {
  measurement_count,  // dof = m_i, the per-phase measurement count
  classical,          // dof = m_i - N
};

struct Chi2Test {
  Phase phase = Phase::A;
  double p = 0.95;
  int dof = 0;
  double threshold = 0.0;
  double j = 0.0;
  bool detected = false;
};

/// Per-phase chi-squared test of the composed-error objective.
std::array<Chi2Test, kPhaseCount> detect(const EstimationResult& result, double p,
                                         DofConvention convention = DofConvention::measurement_count);

struct CmeRankEntry {
  std::string label;
  Phase phase = Phase::A;
  int spec_index = -1;  // into the plan
  double ii = 0.0;
  double cme_n = 0.0;
};

/// Entries of one phase with |CME^N| above beta, descending by |CME^N|;
/// ties broken lexicographically by label. Signed CME^N values preserved.
std::vector<CmeRankEntry> rank_cme(const PhaseEstimation& estimation,
                                   const MeasurementPlan& plan, double beta);

struct Classification {
  enum class Verdict { no_error, measurement_error, parameter_error, ambiguous };

  struct BranchCandidate {
    int from = 0;
    int to = 0;
    int suspected_bus = 0;  // endpoint with the largest |CME^N| injection
  };

  Verdict verdict = Verdict::no_error;
  double beta = 3.0;
  std::vector<std::string> labels;  // exceedances backing the verdict
  std::vector<BranchCandidate> branches;
  int suspected_bus = 0;  // 0 unless verdict == parameter_error
};

std::string verdict_name(Classification::Verdict v);

/// Parameter-error spread rule: some branch i-j has both directed flow
/// measurements of one kind above beta plus at least one endpoint injection
/// above beta. Qualifying branches that agree on the suspected bus give the
/// parameter_error verdict; disagreeing disjoint branches are ambiguous;
/// exceedances without any qualifying branch are measurement errors.
Classification classify(const std::vector<CmeRankEntry>& ranked, const MeasurementPlan& plan,
                        double beta);

struct ViScore {
  int bus = 0;
  double vi = 0.0;
};

/// Bus vulnerability to masked errors: RMS gap between the CME and residual
/// sensitivity rows (S_r = I - K, S_CME row l scaled by 1/sqrt(1 - K_ll))
/// over the measurements incident to the bus. Descending by VI.
std::vector<ViScore> vi_scores(const Eigen::MatrixXd& projection,
                               const std::vector<MeasurementSpec>& phase_specs,
                               const NetworkTopology& topology);

struct SyntheticSet {
  std::vector<MeasurementSpec> specs;
  std::vector<double> values;  // h_j at the previous estimate
  bool from_previous_estimate = false;
  std::string warning;
};

struct SyntheticOptions {
  int quota = 0;                  // VI-ranked buses to reinforce
  int low_redundancy_count = 4;   // incident-measurement count considered weak
  double sigma_pu = 0.030;
};

/// Injection-type synthetic measurements at the quota highest-VI buses that
/// lack redundancy, plus at buses incident to structurally critical
/// measurements. Values come from the previous estimate; without one the set
/// is empty and carries a warning.
SyntheticSet generate_synthetic(const EstimationResult* previous, const NetworkTopology& topology,
                                const MeasurementPlan& plan,
                                const std::vector<ViScore>& scores,
                                const SyntheticOptions& options);

struct ParameterErrorEstimate {
  int from = 0;
  int to = 0;
  double delta_p = 0.0;
  double h_p0 = 0.0;
};

/// First-order parameter error: delta_p = (z_i - h_i0) / H_p0.
/// Throws std::invalid_argument when |H_p0| < 1e-12 (insensitive parameter).
ParameterErrorEstimate estimate_parameter_error(double z_i, double h_i0, double h_p0);

/// Sensitivity of the load-side injection measurement at `bus` to an added
/// shunt conductance on that bus (per-unit), evaluated at the estimate.
double shunt_conductance_jacobian(const PhaseEstimation& estimation,
                                  const NetworkTopology& topology, int bus);

struct AnalyticsOptions {
  double p = 0.95;
  double beta = 3.0;
  DofConvention dof = DofConvention::measurement_count;
  MeterPrecision meters;
  WeightingStep step_one = WeightingStep::one();
  EstimatorOptions estimator;
  SyntheticOptions synthetic;
};

struct DetectionReport {
  std::array<Chi2Test, kPhaseCount> step1_tests;
  bool any_detected = false;
  std::optional<std::array<Chi2Test, kPhaseCount>> step2_tests;
  std::vector<CmeRankEntry> ranking;  // detected phases, merged, descending
  Classification classification;
};

struct PipelineOutcome {
  EstimationResult step1;
  std::optional<EstimationResult> step2;
  DetectionReport report;
  SyntheticSet synthetic;  // appended to the estimation input, may be empty
};

/// Two-step gross-error pipeline: step one weighted by measurement magnitude
/// plus the chi-squared detection test; on detection, step two re-estimates
/// with meter precision weights and runs the CME^N ranking/classification.
/// `previous` feeds warm starts and synthetic-measurement values.
PipelineOutcome two_step_pipeline(const NetworkTopology& topology, const MeasurementPlan& plan,
                                  const MeasurementSet& measurements,
                                  const AnalyticsOptions& options,
                                  const EstimationResult* previous = nullptr);

}  // namespace hifse
