#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hifse/analytics.hpp"
#include "hifse/simulation.hpp"

namespace hifse::io {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), field_path(path) {}
  std::string field_path;
};

/// Full run description; every physical field name carries its unit.
struct ScenarioConfig {
  std::string network = "builtin:baran-wu-33";  // or file:<path>
  std::optional<HifScenario> fault;
  std::uint64_t noise_seed = 1;
  NoiseModel noise;
  TimelineOptions timeline;  // noise/base_seed mirrored from the above
  AnalyticsOptions analytics;
  int persistence = 3;  // consecutive exceedances for a phase-level verdict
  int monte_carlo_runs = 100;
  int workers = 0;  // 0 = hardware concurrency
  std::string output_dir = "out";

  NetworkTopology load_network() const;
  void validate() const;
};

ScenarioConfig parse_scenario_config(const json& j);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);
json scenario_config_to_json(const ScenarioConfig& config);

NetworkTopology parse_network(const json& j);
json network_to_json(const NetworkTopology& topology);
NetworkTopology load_network_file(const std::filesystem::path& path);

json measurement_plan_to_json(const MeasurementPlan& plan);
MeasurementPlan parse_measurement_plan(const json& j);

/// Snapshot series document: network name, plan, per-unit bases, snapshots.
json timeline_to_json(const Timeline& timeline, const NetworkTopology& topology,
                      const MeasurementPlan& plan, const std::string& network_name);
struct TimelineDocument {
  NetworkTopology topology;
  MeasurementPlan plan;
  Timeline timeline;  // solutions absent; measurements populated
};
TimelineDocument parse_timeline(const json& j);

/// CSV emission: one row per measurement per snapshot.
/// Columns: snapshot,t_s,index,kind,location,phase,truth,value,sigma
std::string timeline_to_csv(const Timeline& timeline, const MeasurementPlan& plan);

json estimation_to_json(const EstimationResult& result, const MeasurementPlan& plan);
/// Per-measurement analytics table: label,phase,ii,cme,cme_n
std::string estimation_to_csv(const EstimationResult& result, const MeasurementPlan& plan);

json detection_report_to_json(const DetectionReport& report);
/// Human-readable per-phase table in the report layout: header line with
/// J vs threshold and the verdict, then the descending CME^N list.
std::string detection_report_to_text(const DetectionReport& report);

std::string format_double(double v);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace hifse::io
