#ifndef DFCOST_PARSE_HPP_
#define DFCOST_PARSE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dfcost/dse.hpp"
#include "dfcost/types.hpp"

namespace dfcost {

struct Model {
  std::string name;
  std::vector<std::pair<LayerSpec, Dataflow>> layers;
};

// Parses the block grammar:
//   Network <ident> { Layer <optype> [<ident>] { Dimensions {...} Dataflow {...} } ... }
// Throws ParseError with line/column on malformed input.
Model parse_model(const std::string& text);

// Newline-separated `key: value` pairs using HardwareConfig field names.
HardwareConfig parse_hardware(const std::string& text);

EnergyTable parse_energy(const std::string& text);

CostModel parse_cost_model(const std::string& text);

std::string print_model(const Model& model);
std::string print_dataflow(const Dataflow& df, int indent = 0);

// Convenience file loaders (throw std::runtime_error on I/O failure).
Model load_model(const std::string& path);
HardwareConfig load_hardware(const std::string& path);
EnergyTable load_energy(const std::string& path);
CostModel load_cost_model(const std::string& path);

}  // namespace dfcost

#endif  // DFCOST_PARSE_HPP_
