#include "hifse/network.hpp"

#include <algorithm>
#include <cmath>

namespace hifse {

char phase_letter(Phase p) { return static_cast<char>('A' + static_cast<int>(p)); }

Phase phase_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Phase::A;
    case 'B': case 'b': return Phase::B;
    case 'C': case 'c': return Phase::C;
    default: throw NetworkError(std::string("unknown phase '") + c + "'");
  }
}

NetworkTopology::NetworkTopology(std::vector<Bus> buses, std::vector<Branch> branches)
    : buses_(std::move(buses)), branches_(std::move(branches)) {
  validate_and_index();
}

void NetworkTopology::validate_and_index() {
  if (buses_.empty()) throw NetworkError("network has no buses");
  int max_id = 0;
  for (const auto& b : buses_) {
    if (b.id < 1) throw NetworkError("bus ids must be >= 1");
    if (b.base_kv <= 0) throw NetworkError("bus base_kv must be positive");
    for (const auto& l : b.load) {
      if (!std::isfinite(l.p_kw) || !std::isfinite(l.q_kvar))
        throw NetworkError("bus load must be finite");
    }
    max_id = std::max(max_id, b.id);
  }
  index_of_id_.assign(max_id + 1, -1);
  substation_id_ = 0;
  for (int i = 0; i < bus_count(); ++i) {
    const Bus& b = buses_[i];
    if (index_of_id_[b.id] != -1) throw NetworkError("duplicate bus id " + std::to_string(b.id));
    index_of_id_[b.id] = i;
    if (b.kind == BusKind::substation) {
      if (substation_id_ != 0) throw NetworkError("more than one substation bus");
      substation_id_ = b.id;
    }
  }
  if (substation_id_ == 0) throw NetworkError("no substation bus");
  for (const auto& br : branches_) {
    if (br.from == br.to) throw NetworkError("branch endpoints must differ");
    if (!has_bus(br.from) || !has_bus(br.to))
      throw NetworkError("branch references unknown bus " + std::to_string(br.from) + "-" +
                         std::to_string(br.to));
    if (br.r_ohm < 0 || br.x_ohm < 0) throw NetworkError("branch impedance must be non-negative");
    if (br.r_ohm == 0 && br.x_ohm == 0) throw NetworkError("branch impedance must be nonzero");
  }
}

int NetworkTopology::closed_branch_count() const {
  return static_cast<int>(
      std::count_if(branches_.begin(), branches_.end(),
                    [](const Branch& b) { return b.status == SwitchStatus::closed; }));
}

bool NetworkTopology::has_bus(int bus_id) const {
  return bus_id >= 1 && bus_id < static_cast<int>(index_of_id_.size()) &&
         index_of_id_[bus_id] != -1;
}

int NetworkTopology::bus_index(int bus_id) const {
  if (!has_bus(bus_id)) throw NetworkError("unknown bus id " + std::to_string(bus_id));
  return index_of_id_[bus_id];
}

double NetworkTopology::base_kv() const { return buses_[substation_index()].base_kv; }

double NetworkTopology::v_base_phase_volts() const { return base_kv() * 1e3 / std::sqrt(3.0); }

double NetworkTopology::z_base_ohm() const {
  const double kv = base_kv();
  return kv * kv * 1e6 / s_base_va();
}

std::complex<double> NetworkTopology::branch_impedance_pu(const Branch& b) const {
  return {b.r_ohm / z_base_ohm(), b.x_ohm / z_base_ohm()};
}

std::complex<double> NetworkTopology::load_pu(int bus_id, Phase phase) const {
  const PhaseLoad& l = bus(bus_id).load[static_cast<int>(phase)];
  return {l.p_kw * 1e3 / s_base_phase_va(), l.q_kvar * 1e3 / s_base_phase_va()};
}

bool validate_radial(const NetworkTopology& topology) {
  const int n = topology.bus_count();
  if (topology.closed_branch_count() != n - 1) return false;
  // Connectivity over closed branches by DFS.
  std::vector<std::vector<int>> adj(n);
  for (const auto& br : topology.branches()) {
    if (br.status != SwitchStatus::closed) continue;
    int a = topology.bus_index(br.from);
    int b = topology.bus_index(br.to);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{topology.substation_index()};
  seen[stack.back()] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

RadialOrder radial_order(const NetworkTopology& topology) {
  if (!validate_radial(topology)) throw NetworkError("topology is not radial/connected");
  const int n = topology.bus_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, branch index)
  for (int k = 0; k < topology.branch_count(); ++k) {
    const Branch& br = topology.branches()[k];
    if (br.status != SwitchStatus::closed) continue;
    int a = topology.bus_index(br.from);
    int b = topology.bus_index(br.to);
    adj[a].emplace_back(b, k);
    adj[b].emplace_back(a, k);
  }
  RadialOrder order;
  order.parent_bus.assign(n, -1);
  order.parent_branch.assign(n, -1);
  order.children.assign(n, {});
  std::vector<char> seen(n, 0);
  const int root = topology.substation_index();
  seen[root] = 1;
  order.bus_order.push_back(root);
  for (std::size_t head = 0; head < order.bus_order.size(); ++head) {
    int u = order.bus_order[head];
    for (auto [v, k] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      order.parent_bus[v] = u;
      order.parent_branch[v] = k;
      order.children[u].push_back(v);
      order.bus_order.push_back(v);
    }
  }
  return order;
}

namespace {

struct BranchRow {
  int from, to;
  double r_ohm, x_ohm;
  double p_kw, q_kvar;  // load at `to`, three-phase totals
};

// Published 12.66 kV feeder data: branch impedances and the three-phase
// load at each branch's receiving bus.
constexpr BranchRow kBaranWu33[] = {
    {1, 2, 0.0922, 0.0470, 100.0, 60.0},  {2, 3, 0.4930, 0.2511, 90.0, 40.0},
    {3, 4, 0.3660, 0.1864, 120.0, 80.0},  {4, 5, 0.3811, 0.1941, 60.0, 30.0},
    {5, 6, 0.8190, 0.7070, 60.0, 20.0},   {6, 7, 0.1872, 0.6188, 200.0, 100.0},
    {7, 8, 0.7114, 0.2351, 200.0, 100.0}, {8, 9, 1.0300, 0.7400, 60.0, 20.0},
    {9, 10, 1.0440, 0.7400, 60.0, 20.0},  {10, 11, 0.1966, 0.0650, 45.0, 30.0},
    {11, 12, 0.3744, 0.1238, 60.0, 35.0}, {12, 13, 1.4680, 1.1550, 60.0, 35.0},
    {13, 14, 0.5416, 0.7129, 120.0, 80.0}, {14, 15, 0.5910, 0.5260, 60.0, 10.0},
    {15, 16, 0.7463, 0.5450, 60.0, 20.0}, {16, 17, 1.2890, 1.7210, 60.0, 20.0},
    {17, 18, 0.7320, 0.5740, 90.0, 40.0}, {2, 19, 0.1640, 0.1565, 90.0, 40.0},
    {19, 20, 1.5042, 1.3554, 90.0, 40.0}, {20, 21, 0.4095, 0.4784, 90.0, 40.0},
    {21, 22, 0.7089, 0.9373, 90.0, 40.0}, {3, 23, 0.4512, 0.3083, 90.0, 50.0},
    {23, 24, 0.8980, 0.7091, 420.0, 200.0}, {24, 25, 0.8960, 0.7011, 420.0, 200.0},
    {6, 26, 0.2030, 0.1034, 60.0, 25.0},  {26, 27, 0.2842, 0.1447, 60.0, 25.0},
    {27, 28, 1.0590, 0.9337, 60.0, 20.0}, {28, 29, 0.8042, 0.7006, 120.0, 70.0},
    {29, 30, 0.5075, 0.2585, 200.0, 600.0}, {30, 31, 0.9744, 0.9630, 150.0, 70.0},
    {31, 32, 0.3105, 0.3619, 210.0, 100.0}, {32, 33, 0.3410, 0.5302, 60.0, 40.0},
};

constexpr double kBaseKv = 12.66;

}  // namespace

NetworkTopology builtin_baran_wu_33() {
  std::vector<Bus> buses;
  buses.reserve(33);
  Bus sub;
  sub.id = 1;
  sub.kind = BusKind::substation;
  sub.base_kv = kBaseKv;
  buses.push_back(sub);
  for (int id = 2; id <= 33; ++id) {
    Bus b;
    b.id = id;
    b.kind = BusKind::load;
    b.base_kv = kBaseKv;
    buses.push_back(b);
  }
  std::vector<Branch> branches;
  branches.reserve(32);
  for (const BranchRow& row : kBaranWu33) {
    branches.push_back({row.from, row.to, row.r_ohm, row.x_ohm, SwitchStatus::closed});
    // Balanced base case: the published three-phase load split over A/B/C.
    PhaseLoad per_phase{row.p_kw / 3.0, row.q_kvar / 3.0};
    Bus& target = buses[static_cast<std::size_t>(row.to - 1)];
    target.load = {per_phase, per_phase, per_phase};
  }
  return NetworkTopology(std::move(buses), std::move(branches));
}

std::vector<std::string> builtin_network_names() { return {"baran-wu-33"}; }

NetworkTopology builtin_network(const std::string& name) {
  if (name == "baran-wu-33") return builtin_baran_wu_33();
  std::string known;
  for (const auto& n : builtin_network_names()) known += (known.empty() ? "" : ", ") + n;
  throw NetworkError("unknown builtin network '" + name + "' (available: " + known + ")");
}

}  // namespace hifse
