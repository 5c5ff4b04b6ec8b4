#pragma once

#include <string>
#include <vector>

#include "hifse/network.hpp"

namespace hifse {

enum class MeasurementKind { p_flow, q_flow, p_injection, q_injection, v_magnitude };
enum class MeasurementSource { real, synthetic };

bool is_flow(MeasurementKind k);
bool is_injection(MeasurementKind k);
std::string kind_name(MeasurementKind k);
MeasurementKind kind_from_name(const std::string& name);

/// One metered quantity. Flows are directed (metered at `from`, toward `to`);
/// injections and voltage magnitudes use `from` as the bus and leave `to` = 0.
struct MeasurementSpec {
  MeasurementKind kind = MeasurementKind::v_magnitude;
  int from = 0;
  int to = 0;
  Phase phase = Phase::A;
  MeasurementSource source = MeasurementSource::real;
  double sigma_pu = 0.01;  // declared meter precision, per-unit

  /// Label in the report convention: "P:20", "Q:19-20", "V:1".
  std::string label() const;
  bool touches_bus(int bus_id) const;
};

/// Ordered measurement set covering all three phases identically.
struct MeasurementPlan {
  std::vector<MeasurementSpec> specs;

  int size() const { return static_cast<int>(specs.size()); }
  /// Per-phase measurement count m_i; throws if phases are unbalanced.
  int per_phase_count() const;
  int phase_count(Phase p) const;
  std::vector<int> phase_indices(Phase p) const;
  /// Global redundancy level m_i / (2n - 1).
  double grl(const NetworkTopology& topology) const;
};

/// P/Q injections at every bus, P/Q flows in both directions on every closed
/// branch, and the substation voltage magnitude, replicated per phase.
/// For the 33-bus feeder this is 66 + 128 + 1 = 195 specs per phase (GRL = 3).
MeasurementPlan default_measurement_plan(const NetworkTopology& topology);

}  // namespace hifse
