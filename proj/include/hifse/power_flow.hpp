#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hifse/hif_model.hpp"
#include "hifse/measurement_model.hpp"
#include "hifse/network.hpp"

namespace hifse {

/// Per-phase constant-power loads in per-unit, indexed [phase][dense bus].
struct LoadProfile {
  std::array<std::vector<std::complex<double>>, kPhaseCount> s_pu;

  static LoadProfile from_topology(const NetworkTopology& topology);
  LoadProfile scaled(double factor) const;
};

struct PhaseSolution {
  Eigen::VectorXcd v;                                // bus voltage phasors, pu
  std::vector<std::complex<double>> branch_current;  // pu, per branch (0 if open)
  int iterations = 0;
  bool converged = false;

  StateVector state() const;
};

struct PhasorSolution {
  std::array<PhaseSolution, kPhaseCount> phase;
  bool converged = false;
  int outer_iterations = 0;
  /// Power drawn by the HIF on the faulted phase, pu (0 when no fault).
  std::complex<double> hif_injection_pu{0.0, 0.0};

  const PhaseSolution& for_phase(Phase p) const { return phase[static_cast<int>(p)]; }

  /// Supplied - consumed - losses on one phase; ~0 at convergence.
  std::complex<double> power_imbalance_pu(const NetworkTopology& topology,
                                          const LoadProfile& loads, Phase p) const;
  double total_losses_pu(const NetworkTopology& topology, Phase p) const;
};

class PowerFlowError : public std::runtime_error {
 public:
  PowerFlowError(const std::string& what, std::shared_ptr<PhasorSolution> last)
      : std::runtime_error(what), last_iterate(std::move(last)) {}
  std::shared_ptr<PhasorSolution> last_iterate;
};

struct PowerFlowOptions {
  double tolerance_pu = 1e-12;     // sweep voltage update tolerance
  int max_iterations = 100;        // inner sweep cap
  double hif_tolerance_pu = 1e-8;  // fault-bus voltage between outer passes
  int max_outer_iterations = 50;
};

struct HifAt {
  const HifScenario* scenario = nullptr;
  double t = 0.0;
};

/// Backward/forward sweep solution of the three decoupled phase networks.
/// With a fault attached, an outer fixed-point loop alternates the sweep with
/// the fault's equivalent power draw until the fault-bus voltage settles.
PhasorSolution solve_power_flow(const NetworkTopology& topology,
                                const LoadProfile& loads,
                                std::optional<HifAt> hif = std::nullopt,
                                const PowerFlowOptions& options = {});

}  // namespace hifse
