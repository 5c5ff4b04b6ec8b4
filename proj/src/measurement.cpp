#include "hifse/measurement.hpp"

#include <stdexcept>

namespace hifse {

bool is_flow(MeasurementKind k) {
  return k == MeasurementKind::p_flow || k == MeasurementKind::q_flow;
}

bool is_injection(MeasurementKind k) {
  return k == MeasurementKind::p_injection || k == MeasurementKind::q_injection;
}

std::string kind_name(MeasurementKind k) {
  switch (k) {
    case MeasurementKind::p_flow: return "P-flow";
    case MeasurementKind::q_flow: return "Q-flow";
    case MeasurementKind::p_injection: return "P-inj";
    case MeasurementKind::q_injection: return "Q-inj";
    case MeasurementKind::v_magnitude: return "V-mag";
  }
  return "?";
}

MeasurementKind kind_from_name(const std::string& name) {
  if (name == "P-flow") return MeasurementKind::p_flow;
  if (name == "Q-flow") return MeasurementKind::q_flow;
  if (name == "P-inj") return MeasurementKind::p_injection;
  if (name == "Q-inj") return MeasurementKind::q_injection;
  if (name == "V-mag") return MeasurementKind::v_magnitude;
  throw std::invalid_argument("unknown measurement kind '" + name + "'");
}

std::string MeasurementSpec::label() const {
  std::string prefix;
  switch (kind) {
    case MeasurementKind::p_flow: case MeasurementKind::p_injection: prefix = "P:"; break;
    case MeasurementKind::q_flow: case MeasurementKind::q_injection: prefix = "Q:"; break;
    case MeasurementKind::v_magnitude: prefix = "V:"; break;
  }
  if (is_flow(kind)) return prefix + std::to_string(from) + "-" + std::to_string(to);
  return prefix + std::to_string(from);
}

bool MeasurementSpec::touches_bus(int bus_id) const {
  return from == bus_id || (is_flow(kind) && to == bus_id);
}

int MeasurementPlan::phase_count(Phase p) const {
  int count = 0;
  for (const auto& s : specs)
    if (s.phase == p) ++count;
  return count;
}

int MeasurementPlan::per_phase_count() const {
  const int a = phase_count(Phase::A);
  if (a != phase_count(Phase::B) || a != phase_count(Phase::C))
    throw std::logic_error("measurement plan is unbalanced across phases");
  return a;
}

std::vector<int> MeasurementPlan::phase_indices(Phase p) const {
  std::vector<int> idx;
  for (int i = 0; i < size(); ++i)
    if (specs[i].phase == p) idx.push_back(i);
  return idx;
}

double MeasurementPlan::grl(const NetworkTopology& topology) const {
  return static_cast<double>(per_phase_count()) / topology.state_count();
}

MeasurementPlan default_measurement_plan(const NetworkTopology& topology) {
  if (!validate_radial(topology))
    throw NetworkError("default plan requires a radial connected topology");

  MeasurementPlan plan;
  const int n = topology.bus_count();
  const int closed = topology.closed_branch_count();
  plan.specs.reserve(static_cast<std::size_t>(3 * (2 * n + 4 * closed + 1)));

  // Declared meter precisions; the estimator's weighting step may override.
  struct {
    double injection = 0.010, flow = 0.008, voltage = 0.004;
  } sigma;
  for (Phase phase : kAllPhases) {
    for (const Bus& b : topology.buses())
      plan.specs.push_back({MeasurementKind::p_injection, b.id, 0, phase,
                            MeasurementSource::real, sigma.injection});
    for (const Bus& b : topology.buses())
      plan.specs.push_back({MeasurementKind::q_injection, b.id, 0, phase,
                            MeasurementSource::real, sigma.injection});
    for (const Branch& br : topology.branches()) {
      if (br.status != SwitchStatus::closed) continue;
      plan.specs.push_back({MeasurementKind::p_flow, br.from, br.to, phase,
                            MeasurementSource::real, sigma.flow});
      plan.specs.push_back({MeasurementKind::p_flow, br.to, br.from, phase,
                            MeasurementSource::real, sigma.flow});
    }
    for (const Branch& br : topology.branches()) {
      if (br.status != SwitchStatus::closed) continue;
      plan.specs.push_back({MeasurementKind::q_flow, br.from, br.to, phase,
                            MeasurementSource::real, sigma.flow});
      plan.specs.push_back({MeasurementKind::q_flow, br.to, br.from, phase,
                            MeasurementSource::real, sigma.flow});
    }
    plan.specs.push_back({MeasurementKind::v_magnitude, topology.substation_id(), 0, phase,
                          MeasurementSource::real, sigma.voltage});
  }
  return plan;
}

}  // namespace hifse
