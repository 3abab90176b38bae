#ifndef DFCOST_DSE_HPP_
#define DFCOST_DSE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dfcost/analysis.hpp"
#include "dfcost/types.hpp"

namespace dfcost {

// Area/power model of the building blocks: per-PE and per-byte constants,
// a bus term linear in endpoints*bandwidth, and an arbiter term quadratic
// in endpoints.
struct CostModel {
  double pe_area = 0, pe_power = 0;
  double sram_area_per_byte = 0, sram_power_per_byte = 0;
  double bus_area_coeff = 0, bus_power_coeff = 0;
  double arbiter_area_coeff = 0, arbiter_power_coeff = 0;
};

std::pair<double, double> hardware_cost(const HardwareConfig& hw,
                                        const CostModel& cm);

struct SweepRange {
  std::int64_t min = 1, max = 1, step = 1;
  std::int64_t count() const { return (max - min) / step + 1; }
};

struct SweepSpace {
  SweepRange num_pes{64, 64, 1};
  SweepRange l1_bytes{64, 64, 1};
  SweepRange l2_bytes{4096, 4096, 1};
  SweepRange noc_bandwidth{8, 8, 1};
  std::int64_t grid_size() const;
};

enum class Objective { Throughput, Energy, Edp };
std::string to_string(Objective o);

struct DesignPoint {
  HardwareConfig hw;
  double area = 0, power = 0;
  std::int64_t runtime_cycles = 0;
  double energy = 0;
  double edp = 0;
  bool valid = false;
  bool pareto = false;
};

struct Budgets {
  double area = 0;   // 0 = unconstrained
  double power = 0;
};

struct SweepResult {
  std::vector<DesignPoint> points;  // canonical grid order, valid and not
  std::int64_t grid_size = 0;
  std::int64_t analyzed = 0;  // points fully analyzed (not pruned)
  std::int64_t valid_count = 0;
  int best = -1;  // index into points, -1 when no valid point
  std::vector<int> pareto_front;   // indices, stable order
  double wall_seconds = 0;
};

using LayerSet = std::vector<std::pair<LayerSpec, Dataflow>>;

// Nested sweep ordered num_pes -> l2 -> l1 -> bandwidth with bound-based
// pruning: a parameter's remaining range is skipped as soon as the minimum
// achievable cost of the subspace violates a budget. `exhaustive` disables
// pruning (oracle for the soundness tests).
SweepResult sweep(const LayerSet& layers, const SweepSpace& space,
                  const CostModel& cm, const Budgets& budgets,
                  Objective objective, const HardwareConfig& base,
                  const EnergyTable& energy, bool exhaustive = false);

// Non-dominated subset under component-wise <= minimization, stable order.
// Axis extractors map a point to the objective value.
std::vector<int> pareto_front(
    const std::vector<DesignPoint>& points,
    const std::vector<std::function<double(const DesignPoint&)>>& axes);

std::string sweep_to_csv(const SweepResult& r);

}  // namespace dfcost

#endif  // DFCOST_DSE_HPP_
