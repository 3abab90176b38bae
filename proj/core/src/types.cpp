#include "dfcost/types.hpp"

#include <sstream>

namespace dfcost {

std::string to_string(Dim d) {
  switch (d) {
    case Dim::N: return "N";
    case Dim::K: return "K";
    case Dim::C: return "C";
    case Dim::Y: return "Y";
    case Dim::X: return "X";
    case Dim::R: return "R";
    case Dim::S: return "S";
    case Dim::Yp: return "Yp";
    case Dim::Xp: return "Xp";
  }
  return "?";
}

std::optional<Dim> dim_from_string(const std::string& s) {
  if (s == "N") return Dim::N;
  if (s == "K") return Dim::K;
  if (s == "C") return Dim::C;
  if (s == "Y") return Dim::Y;
  if (s == "X") return Dim::X;
  if (s == "R") return Dim::R;
  if (s == "S") return Dim::S;
  if (s == "Yp" || s == "Y'") return Dim::Yp;
  if (s == "Xp" || s == "X'") return Dim::Xp;
  return std::nullopt;
}

bool is_output_centric(Dim d) { return d == Dim::Yp || d == Dim::Xp; }

std::string to_string(Tensor t) {
  switch (t) {
    case Tensor::Input: return "Input";
    case Tensor::Weight: return "Weight";
    case Tensor::Output: return "Output";
  }
  return "?";
}

std::string to_string(OpType t) {
  switch (t) {
    case OpType::CONV2D: return "CONV2D";
    case OpType::DWCONV: return "DWCONV";
    case OpType::PWCONV: return "PWCONV";
    case OpType::FC: return "FC";
    case OpType::TRCONV: return "TRCONV";
    case OpType::LSTM: return "LSTM";
    case OpType::POOL: return "POOL";
  }
  return "?";
}

std::optional<OpType> op_type_from_string(const std::string& s) {
  if (s == "CONV2D") return OpType::CONV2D;
  if (s == "DWCONV") return OpType::DWCONV;
  if (s == "PWCONV") return OpType::PWCONV;
  if (s == "FC") return OpType::FC;
  if (s == "TRCONV") return OpType::TRCONV;
  if (s == "LSTM") return OpType::LSTM;
  if (s == "POOL") return OpType::POOL;
  return std::nullopt;
}

std::string to_string(const Directive& d) {
  std::ostringstream os;
  switch (d.kind) {
    case DirectiveKind::Cluster:
      os << "Cluster(" << d.size << ");";
      return os.str();
    case DirectiveKind::SpatialMap:
      os << "SpatialMap(";
      break;
    case DirectiveKind::TemporalMap:
      os << "TemporalMap(";
      break;
  }
  os << d.size << "," << d.offset << ") " << to_string(d.dim) << ";";
  return os.str();
}

std::string to_string(LegalityCondition c) {
  switch (c) {
    case LegalityCondition::Structure: return "structure";
    case LegalityCondition::Bound: return "bound";
    case LegalityCondition::Coverage: return "coverage";
    case LegalityCondition::Redundancy: return "redundancy";
  }
  return "?";
}

bool ValidationReport::clean() const {
  if (!errors.empty()) return false;
  for (const auto& w : warnings) {
    if (w.condition == LegalityCondition::Coverage) return false;
  }
  return true;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& e : errors) {
    os << "error [" << to_string(e.condition) << "] " << to_string(e.directive)
       << ": " << e.message << "\n";
  }
  for (const auto& w : warnings) {
    os << "warning [" << to_string(w.condition) << "] "
       << to_string(w.directive) << ": " << w.message << "\n";
  }
  return os.str();
}

ParseError::ParseError(int line_, int col_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + what_),
      line(line_),
      col(col_) {}

}  // namespace dfcost
