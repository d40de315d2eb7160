/*
 * Copyright 2026 The equivprobe contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "equivprobe/serialize.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace equivprobe {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw std::invalid_argument(path + ": " + message);
}

const json& require_field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

double require_number(const json& j, const std::string& path, const char* key) {
  const json& v = require_field(j, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int require_int(const json& j, const std::string& path, const char* key) {
  const json& v = require_field(j, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const std::string& path, const char* key) {
  const json& v = require_field(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

const json& require_array(const json& j, const std::string& path, const char* key) {
  const json& v = require_field(j, path, key);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

ContinuousSignal signal_from_json_impl(const json& j, const std::string& path);

std::vector<ContinuousSignal> signal_list(const json& arr, const std::string& path) {
  std::vector<ContinuousSignal> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(signal_from_json_impl(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ContinuousSignal signal_from_json_impl(const json& j, const std::string& path) {
  const std::string type = require_string(j, path, "type");
  if (type == "heaviside") {
    return ContinuousSignal::heaviside(require_number(j, path, "step"));
  }
  if (type == "constant") {
    return ContinuousSignal::constant(require_number(j, path, "value"));
  }
  if (type == "polynomial") {
    const json& coeffs = require_array(j, path, "coeffs");
    std::vector<double> c;
    c.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_number()) fail(path + ".coeffs", "expected numbers");
      c.push_back(coeffs[i].get<double>());
    }
    const json& support = require_array(j, path, "support");
    if (support.size() != 2 || !support[0].is_number() || !support[1].is_number()) {
      fail(path + ".support", "expected [lo, hi]");
    }
    return ContinuousSignal::polynomial(std::move(c), support[0].get<double>(),
                                        support[1].get<double>());
  }
  if (type == "sinusoid") {
    return ContinuousSignal::sinusoid(require_number(j, path, "amplitude"),
                                      require_number(j, path, "omega"),
                                      require_number(j, path, "phase"));
  }
  if (type == "gaussian") {
    return ContinuousSignal::gaussian(require_number(j, path, "amplitude"),
                                      require_number(j, path, "center"),
                                      require_number(j, path, "sigma"));
  }
  if (type == "sum") {
    return ContinuousSignal::sum(signal_list(require_array(j, path, "terms"), path + ".terms"));
  }
  if (type == "scale") {
    return signal_from_json_impl(require_field(j, path, "inner"), path + ".inner")
        .scaled(require_number(j, path, "factor"));
  }
  if (type == "translate") {
    return signal_from_json_impl(require_field(j, path, "inner"), path + ".inner")
        .translated(require_number(j, path, "offset"));
  }
  fail(path + ".type", "unknown signal type '" + type + "'");
}

struct SignalToJson {
  json operator()(const Heaviside& h) const { return {{"type", "heaviside"}, {"step", h.step}}; }
  json operator()(const Constant& c) const { return {{"type", "constant"}, {"value", c.value}}; }
  json operator()(const Polynomial& p) const {
    return {{"type", "polynomial"}, {"coeffs", p.coeffs}, {"support", {p.lo, p.hi}}};
  }
  json operator()(const Sinusoid& s) const {
    return {{"type", "sinusoid"}, {"amplitude", s.amplitude}, {"omega", s.omega}, {"phase", s.phase}};
  }
  json operator()(const Gaussian& g) const {
    return {{"type", "gaussian"}, {"amplitude", g.amplitude}, {"center", g.center}, {"sigma", g.sigma}};
  }
  json operator()(const Sum& s) const {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(signal_to_json(t));
    return {{"type", "sum"}, {"terms", std::move(terms)}};
  }
  json operator()(const Scale& s) const {
    return {{"type", "scale"}, {"factor", s.factor}, {"inner", signal_to_json(s.inner)}};
  }
  json operator()(const Translate& t) const {
    return {{"type", "translate"}, {"offset", t.offset}, {"inner", signal_to_json(t.inner)}};
  }
};

template <typename Enum>
Enum parse_enum(const std::string& s, std::initializer_list<std::pair<const char*, Enum>> table,
                const char* what) {
  for (const auto& [name, value] : table) {
    if (s == name) return value;
  }
  std::string valid;
  for (const auto& [name, value] : table) {
    if (!valid.empty()) valid += ", ";
    valid += name;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "' (expected one of: " +
                              valid + ")");
}

}  // namespace

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::zero: return "zero";
    case Boundary::circular: return "circular";
    case Boundary::reflect: return "reflect";
  }
  return "zero";
}

std::string to_string(Nonlinearity nl) {
  switch (nl) {
    case Nonlinearity::identity: return "identity";
    case Nonlinearity::relu: return "relu";
    case Nonlinearity::tanh: return "tanh";
  }
  return "identity";
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::linear: return "linear";
    case Scheme::cubic: return "cubic";
    case Scheme::fourier: return "fourier";
  }
  return "linear";
}

std::string to_string(Discretizer d) {
  return d == Discretizer::average ? "average" : "sample";
}

Boundary parse_boundary(const std::string& s) {
  return parse_enum<Boundary>(s,
                              {{"zero", Boundary::zero},
                               {"circular", Boundary::circular},
                               {"reflect", Boundary::reflect}},
                              "boundary");
}

Nonlinearity parse_nonlinearity(const std::string& s) {
  return parse_enum<Nonlinearity>(s,
                                  {{"identity", Nonlinearity::identity},
                                   {"relu", Nonlinearity::relu},
                                   {"tanh", Nonlinearity::tanh}},
                                  "nonlinearity");
}

Scheme parse_scheme(const std::string& s) {
  return parse_enum<Scheme>(
      s, {{"linear", Scheme::linear}, {"cubic", Scheme::cubic}, {"fourier", Scheme::fourier}},
      "scheme");
}

Discretizer parse_discretizer(const std::string& s) {
  return parse_enum<Discretizer>(
      s, {{"average", Discretizer::average}, {"sample", Discretizer::sample}}, "discretizer");
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json signal_to_json(const ContinuousSignal& s) {
  return std::visit(SignalToJson{}, static_cast<const std::variant<
                                        Heaviside, Constant, Polynomial, Sinusoid, Gaussian, Sum,
                                        Scale, Translate>&>(s.node()));
}

ContinuousSignal signal_from_json(const nlohmann::json& j) {
  return signal_from_json_impl(j, "signal");
}

nlohmann::json grid_to_json(const Grid& g) {
  return {{"x0", g.x0}, {"dx", g.dx}, {"n", g.n}};
}

Grid grid_from_json(const nlohmann::json& j) {
  return Grid(require_number(j, "grid", "x0"), require_number(j, "grid", "dx"),
              require_int(j, "grid", "n"));
}

nlohmann::json discrete_signal_to_json(const DiscreteSignal& s) {
  return {{"x0", s.grid().x0}, {"dx", s.grid().dx}, {"samples", s.samples()}};
}

DiscreteSignal discrete_signal_from_json(const nlohmann::json& j) {
  const json& arr = require_array(j, "discrete_signal", "samples");
  std::vector<double> samples;
  samples.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) fail("discrete_signal.samples", "expected numbers");
    samples.push_back(arr[i].get<double>());
  }
  const Grid g(require_number(j, "discrete_signal", "x0"),
               require_number(j, "discrete_signal", "dx"), static_cast<int>(samples.size()));
  return DiscreteSignal(std::move(samples), g);
}

nlohmann::json layer_to_json(const ConvLayer& layer) {
  return {{"taps", layer.kernel.taps()},
          {"origin", layer.kernel.origin()},
          {"bias", layer.bias},
          {"nonlinearity", to_string(layer.nonlinearity)},
          {"boundary", to_string(layer.boundary)}};
}

ConvLayer layer_from_json(const nlohmann::json& j) {
  const json& taps_json = require_array(j, "layer", "taps");
  std::vector<double> taps;
  taps.reserve(taps_json.size());
  for (std::size_t i = 0; i < taps_json.size(); ++i) {
    if (!taps_json[i].is_number()) fail("layer.taps", "expected numbers");
    taps.push_back(taps_json[i].get<double>());
  }
  Kernel kernel(std::move(taps), require_int(j, "layer", "origin"));
  return ConvLayer{std::move(kernel), require_number(j, "layer", "bias"),
                   parse_nonlinearity(require_string(j, "layer", "nonlinearity")),
                   parse_boundary(require_string(j, "layer", "boundary"))};
}

nlohmann::json sweep_spec_to_json(const SweepSpec& spec) {
  json j;
  j["signals"] = json::array();
  for (const auto& s : spec.signals) j["signals"].push_back(signal_to_json(s));
  j["layers"] = json::array();
  for (const auto& l : spec.layers) j["layers"].push_back(layer_to_json(l));
  j["grids"] = json::array();
  for (const auto& g : spec.grids) j["grids"].push_back(grid_to_json(g));
  j["deltas"] = spec.deltas;
  j["schemes"] = json::array();
  for (Scheme s : spec.schemes) j["schemes"].push_back(to_string(s));
  j["discretizers"] = json::array();
  for (Discretizer d : spec.discretizers) j["discretizers"].push_back(to_string(d));
  return j;
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  static const char* known[] = {"signals", "layers", "grids", "deltas", "schemes", "discretizers"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw std::invalid_argument("config: unknown key '" + it.key() + "'");
  }

  SweepSpec spec;
  if (j.contains("signals")) {
    const json& arr = j["signals"];
    if (!arr.is_array()) throw std::invalid_argument("config.signals: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      spec.signals.push_back(signal_from_json_impl(arr[i], "signals[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("layers")) {
    const json& arr = j["layers"];
    if (!arr.is_array()) throw std::invalid_argument("config.layers: expected an array");
    for (const auto& item : arr) spec.layers.push_back(layer_from_json(item));
  }
  if (j.contains("grids")) {
    const json& arr = j["grids"];
    if (!arr.is_array()) throw std::invalid_argument("config.grids: expected an array");
    for (const auto& item : arr) spec.grids.push_back(grid_from_json(item));
  }
  if (j.contains("deltas")) {
    const json& arr = j["deltas"];
    if (!arr.is_array()) throw std::invalid_argument("config.deltas: expected an array");
    for (const auto& item : arr) {
      if (!item.is_number()) throw std::invalid_argument("config.deltas: expected numbers");
      spec.deltas.push_back(item.get<double>());
    }
  }
  if (j.contains("schemes")) {
    const json& arr = j["schemes"];
    if (!arr.is_array()) throw std::invalid_argument("config.schemes: expected an array");
    for (const auto& item : arr) {
      if (!item.is_string()) throw std::invalid_argument("config.schemes: expected strings");
      spec.schemes.push_back(parse_scheme(item.get<std::string>()));
    }
  }
  if (j.contains("discretizers")) {
    const json& arr = j["discretizers"];
    if (!arr.is_array()) throw std::invalid_argument("config.discretizers: expected an array");
    for (const auto& item : arr) {
      if (!item.is_string()) throw std::invalid_argument("config.discretizers: expected strings");
      spec.discretizers.push_back(parse_discretizer(item.get<std::string>()));
    }
  }
  return spec;
}

nlohmann::json record_to_json(const ResidualRecord& r) {
  return {{"n", r.n},
          {"delta", r.delta},
          {"delta_px", r.delta_px},
          {"scheme", to_string(r.scheme)},
          {"boundary", to_string(r.boundary)},
          {"discretizer", to_string(r.discretizer)},
          {"l2", r.l2},
          {"linf", r.linf},
          {"skipped", r.skipped},
          {"reason", r.reason}};
}

nlohmann::json records_to_json(const std::vector<ResidualRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr;
}

std::string records_to_csv(const std::vector<ResidualRecord>& records) {
  std::string out = "n,delta,delta_px,scheme,boundary,discretizer,l2,linf,skipped,reason\n";
  for (const auto& r : records) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.delta);
    out += ',';
    out += format_double(r.delta_px);
    out += ',';
    out += to_string(r.scheme);
    out += ',';
    out += to_string(r.boundary);
    out += ',';
    out += to_string(r.discretizer);
    out += ',';
    out += format_double(r.l2);
    out += ',';
    out += format_double(r.linf);
    out += ',';
    out += r.skipped ? "true" : "false";
    out += ',';
    out += r.reason;  // reasons are fixed strings without commas
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed while writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename temp file onto '" + path + "'");
  }
}

}  // namespace equivprobe
