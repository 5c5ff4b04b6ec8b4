#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hifse/io.hpp"

namespace hifse {

struct SnapshotSummary {
  int index = 0;
  double t_s = 0.0;
  std::array<double, kPhaseCount> j{};
  double threshold = 0.0;
  std::array<bool, kPhaseCount> detected{};
  bool fault_active = false;
  bool step2_run = false;
  Classification::Verdict verdict = Classification::Verdict::no_error;
  int suspected_bus = 0;
  std::array<double, kPhaseCount> upstream_current_a{};  // branch feeding the fault bus
  double hif_current_a = 0.0;
};

/// Scenario-level outcome. Phase-level flags use a persistence rule: a phase
/// is flagged when its J exceeds the threshold on `persistence` consecutive
/// snapshots, which keeps single-snapshot chi-squared chatter out of the
/// run verdict.
struct RunSummary {
  std::vector<SnapshotSummary> snapshots;
  std::optional<double> first_detection_s;
  std::array<bool, kPhaseCount> phase_flagged{};
  std::optional<Phase> detected_phase;
  Classification final_classification;
  std::string top_cme_label;  // at the final classified snapshot
  // Current bookkeeping for the faulted phase (amps, RMS).
  double prefault_upstream_a = 0.0;
  double fault_upstream_a = 0.0;
  double displacement_a = 0.0;
  double smallest_detectable_hif_a = 0.0;
  double hif_current_max_a = 0.0;
  bool failed = false;
  std::string failure;
};

struct MonteCarloSummary {
  int runs = 0;
  int failed_runs = 0;
  int faulted_phase_detected = 0;   // J crossed during the fault window
  int healthy_phase_flagged = 0;    // persistent false flag on another phase
  int top_cme_is_fault_injection = 0;
  int classified_as_parameter_error = 0;
  int classified_true_bus = 0;
  int detections = 0;  // no-fault configs: runs with any phase flagged
  std::vector<RunSummary> failures;

  double rate(int count) const { return runs ? static_cast<double>(count) / runs : 0.0; }
};

/// Execute one scenario: timeline, per-snapshot two-step pipeline, summary.
/// When `emit_files` is set, writes into config.output_dir:
///   j_evolution.csv, current_comparison.csv, cme_ranking.csv,
///   detection_report.json / .txt, rms_summary.csv, run_summary.json,
///   measurements.csv / .json
RunSummary run_scenario(const io::ScenarioConfig& config, bool emit_files = true);

/// Repeat the scenario with per-run derived seeds and aggregate the rates.
/// Runs execute in parallel up to config.workers; failed runs are collected,
/// not rethrown.
MonteCarloSummary run_monte_carlo(const io::ScenarioConfig& config, bool emit_files = true);

io::json run_summary_to_json(const RunSummary& summary);
io::json monte_carlo_to_json(const MonteCarloSummary& summary);

/// Seed for run `k` of a Monte Carlo batch (splitmix64 of the base seed).
std::uint64_t derive_run_seed(std::uint64_t base, int run_index);

}  // namespace hifse
