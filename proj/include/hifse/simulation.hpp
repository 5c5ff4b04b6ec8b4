#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hifse/measurement.hpp"
#include "hifse/power_flow.hpp"

namespace hifse {

/// Deterministic generator; the gaussian path is an explicit Box-Muller so
/// streams are reproducible independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return std::generate_canonical<double, 53>(gen_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double gaussian();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Additive Gaussian noise with sigma_i = relative * |truth_i|; truths below
/// `tiny_truth_pu` get `floor_sigma_pu` instead so no weight degenerates.
struct NoiseModel {
  double relative = 0.01;
  double tiny_truth_pu = 1e-6;
  double floor_sigma_pu = 1e-4;
  bool zero_noise = false;

  double sigma_for_truth(double truth) const;
};

/// One snapshot's metered values, aligned with the plan's spec order.
/// Noise-free truths are retained for test oracles and reports.
struct MeasurementSet {
  double timestamp_s = 0.0;
  std::vector<double> values;
  std::vector<double> truth;
  std::vector<double> sigma;  // generation sigmas (0 under zero noise)
};

/// Noise-free sensor truth for one spec. Flows and voltage magnitudes read
/// the solved physics; load-bus injections read the metered load (the meter
/// sits on the load side of the lateral, so an active fault between bus and
/// load never shows up here); the substation injection reads the physics.
double measurement_truth(const MeasurementSpec& spec, const NetworkTopology& topology,
                         const LoadProfile& loads, const PhasorSolution& solution);

MeasurementSet generate_measurements(const PhasorSolution& solution,
                                     const NetworkTopology& topology,
                                     const LoadProfile& loads,
                                     const MeasurementPlan& plan, std::uint64_t seed,
                                     const NoiseModel& noise = {});

struct TimelineOptions {
  double pre_fault_s = 0.5;
  double post_fault_s = 0.5;
  double snapshot_period_s = 0.1;
  std::uint64_t base_seed = 1;
  NoiseModel noise;
  PowerFlowOptions power_flow;
};

struct Snapshot {
  int index = 0;
  double t_s = 0.0;
  PhasorSolution solution;
  MeasurementSet measurements;
  bool fault_active = false;
};

struct Timeline {
  std::vector<Snapshot> snapshots;
  double fault_start_s = 0.0;  // window of the scenario, 0/0 when absent
  double fault_end_s = 0.0;
};

/// Independent snapshots covering pre-fault, fault and post-fault intervals.
/// Snapshot k draws its noise from seed base_seed XOR k. Solver failures are
/// rethrown tagged with the snapshot index.
Timeline run_timeline(const NetworkTopology& topology,
                      const std::optional<HifScenario>& scenario,
                      const MeasurementPlan& plan, const TimelineOptions& options);

}  // namespace hifse
