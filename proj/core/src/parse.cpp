#include "dfcost/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace dfcost {
namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg + " (got '" +
                                              (tok_.kind == Token::End
                                                   ? std::string("<eof>")
                                                   : tok_.text) +
                                              "')");
  }

  Token expect_ident() {
    if (tok_.kind != Token::Ident) fail("expected identifier");
    return next();
  }

  std::int64_t expect_int() {
    if (tok_.kind != Token::Number) fail("expected integer");
    Token t = next();
    return std::stoll(t.text);
  }

  double expect_number() {
    if (tok_.kind != Token::Number) fail("expected number");
    Token t = next();
    return std::stod(t.text);
  }

  void expect_punct(char c) {
    if (tok_.kind != Token::Punct || tok_.text[0] != c) {
      fail(std::string("expected '") + c + "'");
    }
    next();
  }

  bool accept_punct(char c) {
    if (tok_.kind == Token::Punct && tok_.text[0] == c) {
      next();
      return true;
    }
    return false;
  }

  bool at_ident(const std::string& s) const {
    return tok_.kind == Token::Ident && tok_.text == s;
  }

 private:
  void advance() {
    skip_space();
    tok_ = Token{Token::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\'')) {
        bump();
      }
      tok_.kind = Token::Ident;
      tok_.text = text_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
               c == '.') {
      std::size_t start = pos_;
      bump();
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              text_[pos_] == '+' || text_[pos_] == '-')) {
        // Stop '-'/'+' unless preceded by an exponent marker.
        char prev = text_[pos_ - 1];
        if ((text_[pos_] == '-' || text_[pos_] == '+') && prev != 'e' &&
            prev != 'E') {
          break;
        }
        bump();
      }
      tok_.kind = Token::Number;
      tok_.text = text_.substr(start, pos_ - start);
    } else {
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
      bump();
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#' || (c == '/' && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

Dim parse_dimname(Lexer& lx) {
  Token t = lx.peek();
  if (t.kind != Token::Ident) lx.fail("expected dimension name");
  std::string name = t.text;
  if (name == "Y'") name = "Yp";
  if (name == "X'") name = "Xp";
  auto d = dim_from_string(name);
  if (!d) {
    throw ParseError(t.line, t.col, "unknown dimension name '" + t.text + "'");
  }
  lx.next();
  return *d;
}

Directive parse_directive(Lexer& lx) {
  Token head = lx.expect_ident();
  Directive d;
  d.line = head.line;
  d.col = head.col;
  if (head.text == "Cluster") {
    d.kind = DirectiveKind::Cluster;
    lx.expect_punct('(');
    d.size = lx.expect_int();
    lx.expect_punct(')');
    lx.expect_punct(';');
    if (d.size < 1) {
      throw ParseError(head.line, head.col, "Cluster size must be >= 1");
    }
    return d;
  }
  if (head.text == "SpatialMap") {
    d.kind = DirectiveKind::SpatialMap;
  } else if (head.text == "TemporalMap") {
    d.kind = DirectiveKind::TemporalMap;
  } else {
    throw ParseError(head.line, head.col,
                     "expected SpatialMap, TemporalMap or Cluster");
  }
  lx.expect_punct('(');
  d.size = lx.expect_int();
  lx.expect_punct(',');
  d.offset = lx.expect_int();
  lx.expect_punct(')');
  d.dim = parse_dimname(lx);
  lx.expect_punct(';');
  if (d.size < 1) {
    throw ParseError(head.line, head.col, "mapping size must be >= 1");
  }
  if (d.offset < 1) {
    throw ParseError(head.line, head.col, "mapping offset must be >= 1");
  }
  return d;
}

Tensor parse_tensor_name(Lexer& lx) {
  Token t = lx.expect_ident();
  if (t.text == "Input") return Tensor::Input;
  if (t.text == "Weight") return Tensor::Weight;
  if (t.text == "Output") return Tensor::Output;
  throw ParseError(t.line, t.col, "unknown tensor name '" + t.text + "'");
}

void parse_dimensions(Lexer& lx, LayerSpec& layer) {
  Token head = lx.expect_ident();  // "Dimensions" checked by caller
  lx.expect_punct('{');
  std::array<bool, kNumCanonicalDims> seen{};
  while (!lx.accept_punct('}')) {
    Token key = lx.peek();
    if (key.kind != Token::Ident) lx.fail("expected dimension or key");
    if (key.text == "stride_y") {
      lx.next();
      lx.expect_punct(':');
      layer.stride_y = lx.expect_int();
      continue;
    }
    if (key.text == "stride_x") {
      lx.next();
      lx.expect_punct(':');
      layer.stride_x = lx.expect_int();
      continue;
    }
    if (key.text == "Density") {
      lx.next();
      lx.expect_punct('{');
      while (!lx.accept_punct('}')) {
        Tensor t = parse_tensor_name(lx);
        lx.expect_punct(':');
        Token vt = lx.peek();
        double v = lx.expect_number();
        if (!(v > 0.0 && v <= 1.0)) {
          throw ParseError(vt.line, vt.col, "density must be in (0,1]");
        }
        layer.density[static_cast<int>(t)] = v;
      }
      continue;
    }
    if (key.text == "dilation") {
      throw ParseError(key.line, key.col, "dilation is not supported");
    }
    auto d = dim_from_string(key.text);
    if (!d || is_output_centric(*d)) {
      throw ParseError(key.line, key.col,
                       "unknown dimension key '" + key.text + "'");
    }
    lx.next();
    lx.expect_punct(':');
    Token vt = lx.peek();
    std::int64_t v = lx.expect_int();
    if (v < 1) {
      throw ParseError(vt.line, vt.col,
                       "dimension " + key.text + " must be >= 1");
    }
    layer.dims[*d] = v;
    seen[static_cast<int>(*d)] = true;
  }
  for (Dim d : {Dim::K, Dim::C, Dim::Y, Dim::X}) {
    if (!seen[static_cast<int>(d)]) {
      throw ParseError(head.line, head.col,
                       "missing dimension " + to_string(d) +
                           " (only N, R, S may be omitted)");
    }
  }
  if (layer.stride_y < 1 || layer.stride_x < 1) {
    throw ParseError(head.line, head.col, "strides must be >= 1");
  }
}

void check_layer(const Token& at, const LayerSpec& layer) {
  if (layer.dims[Dim::R] > layer.dims[Dim::Y]) {
    throw ParseError(at.line, at.col, "R exceeds Y (padding is fixed at 0)");
  }
  if (layer.dims[Dim::S] > layer.dims[Dim::X]) {
    throw ParseError(at.line, at.col, "S exceeds X (padding is fixed at 0)");
  }
}

void check_dataflow_structure(const Dataflow& df, const Token& at) {
  if (df.directives.empty()) {
    throw ParseError(at.line, at.col, "empty dataflow block");
  }
  // Per cluster level: each dimension at most once, one SpatialMap.
  std::array<bool, 9> seen{};
  bool spatial_seen = false;
  auto reset = [&] {
    seen.fill(false);
    spatial_seen = false;
  };
  reset();
  for (const auto& d : df.directives) {
    if (d.kind == DirectiveKind::Cluster) {
      reset();
      continue;
    }
    int di = static_cast<int>(d.dim);
    if (seen[di]) {
      throw ParseError(d.line, d.col,
                       "dimension " + to_string(d.dim) +
                           " mapped twice in one cluster level");
    }
    seen[di] = true;
    // Yp aliases Y (and Xp aliases X) within a level.
    if (d.dim == Dim::Yp || d.dim == Dim::Y) {
      if (seen[static_cast<int>(Dim::Y)] && seen[static_cast<int>(Dim::Yp)]) {
        throw ParseError(d.line, d.col, "both Y and Yp mapped in one level");
      }
    }
    if (d.dim == Dim::Xp || d.dim == Dim::X) {
      if (seen[static_cast<int>(Dim::X)] && seen[static_cast<int>(Dim::Xp)]) {
        throw ParseError(d.line, d.col, "both X and Xp mapped in one level");
      }
    }
    if (d.kind == DirectiveKind::SpatialMap) {
      if (spatial_seen) {
        throw ParseError(d.line, d.col,
                         "more than one SpatialMap in one cluster level");
      }
      spatial_seen = true;
    }
  }
  if (df.directives.back().kind == DirectiveKind::Cluster) {
    throw ParseError(df.directives.back().line, df.directives.back().col,
                     "dataflow ends with a Cluster directive");
  }
}

std::pair<LayerSpec, Dataflow> parse_layer(Lexer& lx) {
  Token head = lx.expect_ident();  // "Layer" checked by caller
  Token opt = lx.expect_ident();
  auto op = op_type_from_string(opt.text);
  if (!op) {
    throw ParseError(opt.line, opt.col,
                     "unknown operator type '" + opt.text + "'");
  }
  LayerSpec layer;
  layer.op_type = *op;
  if (lx.peek().kind == Token::Ident) {
    layer.name = lx.expect_ident().text;
  } else {
    layer.name = opt.text;
  }
  lx.expect_punct('{');
  bool have_dims = false, have_df = false;
  Dataflow df;
  while (!lx.accept_punct('}')) {
    if (lx.at_ident("Dimensions")) {
      parse_dimensions(lx, layer);
      have_dims = true;
    } else if (lx.at_ident("Dataflow")) {
      Token dft = lx.expect_ident();
      lx.expect_punct('{');
      while (!lx.accept_punct('}')) {
        df.directives.push_back(parse_directive(lx));
      }
      check_dataflow_structure(df, dft);
      have_df = true;
    } else {
      lx.fail("expected Dimensions or Dataflow");
    }
  }
  if (!have_dims) {
    throw ParseError(head.line, head.col, "layer has no Dimensions block");
  }
  if (!have_df) {
    throw ParseError(head.line, head.col, "layer has no Dataflow block");
  }
  check_layer(head, layer);
  return {layer, df};
}

std::unordered_map<std::string, std::string> parse_kv(const std::string& text) {
  std::unordered_map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError(lineno, 1, "expected 'key: value'");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, colon));
    std::string val = trim(line.substr(colon + 1));
    if (key.empty() || val.empty()) {
      throw ParseError(lineno, 1, "expected 'key: value'");
    }
    kv[key] = val;
  }
  return kv;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("expected boolean, got '" + v + "'");
}

}  // namespace

Model parse_model(const std::string& text) {
  Lexer lx(text);
  Token head = lx.expect_ident();
  if (head.text != "Network") {
    throw ParseError(head.line, head.col, "expected 'Network'");
  }
  Model m;
  m.name = lx.expect_ident().text;
  lx.expect_punct('{');
  while (!lx.accept_punct('}')) {
    if (!lx.at_ident("Layer")) lx.fail("expected 'Layer'");
    m.layers.push_back(parse_layer(lx));
  }
  if (lx.peek().kind != Token::End) lx.fail("trailing input after network");
  if (m.layers.empty()) {
    throw ParseError(head.line, head.col, "network has no layers");
  }
  return m;
}

HardwareConfig parse_hardware(const std::string& text) {
  HardwareConfig hw;
  for (const auto& [key, val] : parse_kv(text)) {
    try {
      if (key == "num_pes") hw.num_pes = std::stoll(val);
      else if (key == "l1_bytes") hw.l1_bytes = std::stoll(val);
      else if (key == "l2_bytes") hw.l2_bytes = std::stoll(val);
      else if (key == "noc_bandwidth") hw.noc_bandwidth = std::stoll(val);
      else if (key == "noc_avg_latency") hw.noc_avg_latency = std::stoll(val);
      else if (key == "vector_width") hw.vector_width = std::stoll(val);
      else if (key == "double_buffering") hw.double_buffering = parse_bool(val);
      else if (key == "element_bytes") hw.element_bytes = std::stoll(val);
      else if (key == "spatial_multicast") hw.spatial_multicast = parse_bool(val);
      else if (key == "spatial_reduction") hw.spatial_reduction = parse_bool(val);
      else if (key == "shared_noc") hw.shared_noc = parse_bool(val);
      else throw std::invalid_argument("unknown hardware key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    }
  }
  if (hw.num_pes < 1) throw std::invalid_argument("num_pes must be >= 1");
  if (hw.noc_bandwidth < 1) {
    throw std::invalid_argument("noc_bandwidth must be >= 1");
  }
  if (hw.vector_width < 1) {
    throw std::invalid_argument("vector_width must be >= 1");
  }
  if (hw.noc_avg_latency < 0) {
    throw std::invalid_argument("noc_avg_latency must be >= 0");
  }
  if (hw.l1_bytes < 0 || hw.l2_bytes < 0) {
    throw std::invalid_argument("buffer sizes must be >= 0");
  }
  if (hw.element_bytes < 1) {
    throw std::invalid_argument("element_bytes must be >= 1");
  }
  return hw;
}

EnergyTable parse_energy(const std::string& text) {
  EnergyTable e;
  for (const auto& [key, val] : parse_kv(text)) {
    double v = std::stod(val);
    if (v < 0) throw std::invalid_argument("energy values must be >= 0");
    if (key == "mac_op") e.mac_op = v;
    else if (key == "l1_read") e.l1_read = v;
    else if (key == "l1_write") e.l1_write = v;
    else if (key == "l2_read") e.l2_read = v;
    else if (key == "l2_write") e.l2_write = v;
    else if (key == "noc_hop") e.noc_hop = v;
    else throw std::invalid_argument("unknown energy key '" + key + "'");
  }
  return e;
}

CostModel parse_cost_model(const std::string& text) {
  CostModel cm;
  for (const auto& [key, val] : parse_kv(text)) {
    double v = std::stod(val);
    if (v < 0) throw std::invalid_argument("cost coefficients must be >= 0");
    if (key == "pe_area") cm.pe_area = v;
    else if (key == "pe_power") cm.pe_power = v;
    else if (key == "sram_area_per_byte") cm.sram_area_per_byte = v;
    else if (key == "sram_power_per_byte") cm.sram_power_per_byte = v;
    else if (key == "bus_area_coeff") cm.bus_area_coeff = v;
    else if (key == "bus_power_coeff") cm.bus_power_coeff = v;
    else if (key == "arbiter_area_coeff") cm.arbiter_area_coeff = v;
    else if (key == "arbiter_power_coeff") cm.arbiter_power_coeff = v;
    else throw std::invalid_argument("unknown cost key '" + key + "'");
  }
  return cm;
}

std::string print_dataflow(const Dataflow& df, int indent) {
  std::string pad(indent, ' ');
  std::ostringstream os;
  for (const auto& d : df.directives) {
    os << pad << to_string(d) << "\n";
  }
  return os.str();
}

std::string print_model(const Model& model) {
  std::ostringstream os;
  os << "Network " << model.name << " {\n";
  for (const auto& [layer, df] : model.layers) {
    os << "  Layer " << to_string(layer.op_type) << " " << layer.name
       << " {\n";
    os << "    Dimensions { ";
    for (Dim d : kCanonicalDims) {
      os << to_string(d) << ":" << layer.dims[d] << " ";
    }
    if (layer.stride_y != 1) os << "stride_y:" << layer.stride_y << " ";
    if (layer.stride_x != 1) os << "stride_x:" << layer.stride_x << " ";
    bool any_density = false;
    for (double v : layer.density) any_density |= (v != 1.0);
    if (any_density) {
      os << "Density { ";
      for (Tensor t : kAllTensors) {
        os << to_string(t) << ":" << layer.density_of(t) << " ";
      }
      os << "} ";
    }
    os << "}\n";
    os << "    Dataflow {\n" << print_dataflow(df, 6) << "    }\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}
}  // namespace

Model load_model(const std::string& path) { return parse_model(slurp(path)); }
HardwareConfig load_hardware(const std::string& path) {
  return parse_hardware(slurp(path));
}
EnergyTable load_energy(const std::string& path) {
  return parse_energy(slurp(path));
}
CostModel load_cost_model(const std::string& path) {
  return parse_cost_model(slurp(path));
}

}  // namespace dfcost
