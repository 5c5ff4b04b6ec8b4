#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hifse/measurement.hpp"
#include "hifse/network.hpp"

namespace hifse {

/// One phase's state in polar form. The packed vector layout is
/// [V_0 .. V_{n-1}, theta_* for every non-substation bus in dense order];
/// the substation angle is the reference and stays out of the vector.
struct StateVector {
  Eigen::VectorXd v;      // magnitudes, pu
  Eigen::VectorXd theta;  // angles, rad (substation entry fixed at 0)
};

/// Nonlinear measurement functions h(x) and their Jacobian for one phase of
/// a radial network. Branch results use the series-impedance pi-less model
/// (no shunts): P_ij = Vi^2 g - Vi Vj (g cos + b sin), etc.
class MeasurementModel {
 public:
  MeasurementModel(const NetworkTopology& topology, std::vector<MeasurementSpec> specs);

  int measurement_count() const { return static_cast<int>(specs_.size()); }
  int state_size() const { return n_state_; }
  const std::vector<MeasurementSpec>& specs() const { return specs_; }

  StateVector flat_start() const;
  Eigen::VectorXd pack(const StateVector& x) const;
  StateVector unpack(const Eigen::VectorXd& packed) const;

  Eigen::VectorXd evaluate(const StateVector& x) const;
  double evaluate_one(const MeasurementSpec& spec, const StateVector& x) const;
  Eigen::MatrixXd jacobian(const StateVector& x) const;

  /// Column of the packed state holding theta at dense bus index, -1 for the
  /// substation.
  int theta_column(int bus_index) const;

 private:
  struct BranchData {
    int from_idx;
    int to_idx;
    double g;
    double b;
  };
  const BranchData& branch_for(const MeasurementSpec& spec, bool& forward) const;

  const NetworkTopology* topology_;
  std::vector<MeasurementSpec> specs_;
  std::vector<BranchData> branches_;                 // closed branches only
  std::vector<std::vector<int>> incident_branches_;  // per dense bus index
  int n_bus_ = 0;
  int n_state_ = 0;
  int substation_idx_ = 0;
};

}  // namespace hifse
