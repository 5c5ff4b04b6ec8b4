#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hifse {

/// Phase index for the three decoupled phase networks.
enum class Phase : int { A = 0, B = 1, C = 2 };

inline constexpr int kPhaseCount = 3;
inline constexpr std::array<Phase, 3> kAllPhases{Phase::A, Phase::B, Phase::C};

char phase_letter(Phase p);
Phase phase_from_letter(char c);

enum class BusKind { substation, load };
enum class SwitchStatus { closed, open };

/// Per-phase complex load, active power in kW and reactive in kvar.
struct PhaseLoad {
  double p_kw = 0.0;
  double q_kvar = 0.0;
};

struct Bus {
  int id = 0;  // 1-based, unique
  BusKind kind = BusKind::load;
  double base_kv = 12.66;  // line-to-line
  std::array<PhaseLoad, kPhaseCount> load;
};

struct Branch {
  int from = 0;
  int to = 0;
  double r_ohm = 0.0;
  double x_ohm = 0.0;
  SwitchStatus status = SwitchStatus::closed;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Radial three-phase feeder modeled as three identical decoupled networks.
/// All electrical quantities are handled in per-unit on a 1 MVA three-phase
/// base at the substation line-to-line voltage; see the *_base accessors.
class NetworkTopology {
 public:
  NetworkTopology() = default;
  NetworkTopology(std::vector<Bus> buses, std::vector<Branch> branches);

  const std::vector<Bus>& buses() const { return buses_; }
  const std::vector<Branch>& branches() const { return branches_; }

  int bus_count() const { return static_cast<int>(buses_.size()); }
  int branch_count() const { return static_cast<int>(branches_.size()); }
  int closed_branch_count() const;
  int state_count() const { return 2 * bus_count() - 1; }  // N = 2n - 1

  /// Internal dense index of a bus id; throws NetworkError for unknown ids.
  int bus_index(int bus_id) const;
  bool has_bus(int bus_id) const;
  const Bus& bus(int bus_id) const { return buses_[bus_index(bus_id)]; }

  int substation_id() const { return substation_id_; }
  int substation_index() const { return bus_index(substation_id_); }

  // Per-unit base; 1 MVA three-phase at the substation line-to-line kV.
  double base_kv() const;
  double s_base_va() const { return 1e6; }                   // three-phase
  double s_base_phase_va() const { return s_base_va() / 3; }  // single phase
  double v_base_phase_volts() const;                          // line-neutral
  double z_base_ohm() const;
  double i_base_amps() const { return s_base_phase_va() / v_base_phase_volts(); }

  /// Series impedance of a branch in per-unit.
  std::complex<double> branch_impedance_pu(const Branch& b) const;

  /// Complex power drawn by the load at `bus_id` on `phase`, per-unit on the
  /// single-phase base (positive = consumption).
  std::complex<double> load_pu(int bus_id, Phase phase) const;

 private:
  void validate_and_index();

  std::vector<Bus> buses_;
  std::vector<Branch> branches_;
  std::vector<int> index_of_id_;  // sparse id -> dense index, -1 if absent
  int substation_id_ = 0;
};

/// True iff the closed branches form a spanning tree over all buses.
bool validate_radial(const NetworkTopology& topology);

/// Substation-rooted traversal order over the closed branches. Requires a
/// radial topology.
struct RadialOrder {
  std::vector<int> bus_order;      // dense bus indices, root first
  std::vector<int> parent_bus;     // dense index of parent, -1 for root
  std::vector<int> parent_branch;  // branch index feeding the bus, -1 for root
  std::vector<std::vector<int>> children;  // dense child indices per bus
};
RadialOrder radial_order(const NetworkTopology& topology);

/// The 12.66 kV 33-bus radial test feeder with its published line impedances
/// and bus loads, the loads split equally over the three phases.
NetworkTopology builtin_baran_wu_33();

/// Names of the embedded networks, for the CLI `describe` command.
std::vector<std::string> builtin_network_names();
NetworkTopology builtin_network(const std::string& name);

}  // namespace hifse
