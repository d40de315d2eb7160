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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equivprobe/checks.hpp"
#include "equivprobe/equivariance.hpp"
#include "equivprobe/serialize.hpp"
#include "equivprobe/svg_plot.hpp"

namespace {

using namespace equivprobe;

// Exit codes: 0 success, 1 check/repro mismatch, 2 usage/config/io error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  try {
    write_file_atomic(out_path, content);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct ReproRow {
  const char* name;
  std::vector<double> got;
  std::vector<double> expected;
};

int run_repro(const std::string& out_path, const std::string& format,
              const std::vector<double>& taps) {
  const ContinuousSignal image = ContinuousSignal::heaviside(0.0);
  const Grid grid(-1.0, 0.5, 4);
  const ConvLayer layer{Kernel(taps, 1), -1.0, Nonlinearity::relu, Boundary::zero};
  const double delta = grid.dx / 2.0;

  const DiscreteSignal original = discretize_avg(image, grid);
  const DiscreteSignal translated = discretize_avg(image.translated(delta), grid);
  const DiscreteSignal out_original = apply_layer(layer, original);
  const DiscreteSignal out_translated = apply_layer(layer, translated);
  const ResidualRecord residual =
      translation_equiv_residual(layer, image, grid, delta, Scheme::linear, Discretizer::average);

  const ReproRow rows[] = {
      {"original_pixels", original.samples(), {0.0, 0.0, 1.0, 1.0}},
      {"translated_pixels", translated.samples(), {0.0, 0.0, 0.5, 1.0}},
      {"layer_output_original", out_original.samples(), {0.0, 1.0, 0.0, 0.0}},
      {"layer_output_translated", out_translated.samples(), {0.0, 0.0, 0.0, 0.0}},
  };

  std::string content;
  if (format == "json") {
    nlohmann::json j;
    for (const auto& row : rows) j[row.name] = row.got;
    j["equiv_residual"] = {{"l2", residual.l2}, {"linf", residual.linf}};
    content = j.dump(2) + "\n";
  } else {
    content = "name,c0,c1,c2,c3\n";
    for (const auto& row : rows) {
      content += row.name;
      for (double v : row.got) content += "," + format_double(v);
      content += "\n";
    }
    content += "equiv_residual_linf," + format_double(residual.linf) + ",,,\n";
    content += "equiv_residual_l2," + format_double(residual.l2) + ",,,\n";
  }

  const int emit_code = emit(out_path, content);
  if (emit_code != kExitOk) return emit_code;

  bool ok = true;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.expected.size(); ++i) {
      const double diff = std::abs(row.got[i] - row.expected[i]);
      if (!(diff <= 1e-12)) {
        ok = false;
        std::cerr << "repro mismatch: " << row.name << "[" << i << "] = "
                  << format_double(row.got[i]) << ", expected " << format_double(row.expected[i])
                  << " (|diff| = " << format_double(diff) << ")\n";
      }
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

unsigned threads_from_env() {
  const char* env = std::getenv("EQUIVPROBE_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v > 10000) {
    throw std::invalid_argument("EQUIVPROBE_THREADS must be a small non-negative integer");
  }
  return static_cast<unsigned>(v);
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& format) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config '" << config_path << "'\n";
    return kExitUsage;
  }

  SweepSpec spec;
  unsigned threads = 0;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);  // reports line/column on error
    spec = sweep_spec_from_json(doc);
    threads = threads_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  const std::vector<ResidualRecord> records = sweep(spec, threads);

  if (format == "svg-plot") {
    namespace fs = std::filesystem;
    fs::path base(out_path);
    const fs::path dir = base.parent_path();
    const std::string stem = base.stem().string();
    const fs::path delta_path = dir / (stem + "-vs-delta.svg");
    const fs::path n_path = dir / (stem + "-vs-n.svg");
    const int c1 = emit(delta_path.string(), render_residual_vs_delta_svg(records));
    if (c1 != kExitOk) return c1;
    return emit(n_path.string(), render_residual_vs_n_svg(records));
  }
  if (format == "json") {
    return emit(out_path, records_to_json(records).dump(2) + "\n");
  }
  return emit(out_path, records_to_csv(records));
}

int run_check(std::uint64_t seed, const std::string& fault_name) {
  Fault fault = Fault::none;
  if (fault_name == "reflect-boundary") {
    fault = Fault::reflect_boundary_model;
  } else if (!fault_name.empty()) {
    std::cerr << "error: unknown fault '" << fault_name << "'\n";
    return kExitUsage;
  }
  const std::vector<PropertyResult> results = run_property_checks(seed, fault);
  std::cout << format_check_report(results, seed);
  return all_passed(results) ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D shift/translation equivariance measurement toolkit"};
  app.require_subcommand(1);

  std::string repro_out;
  std::string repro_format = "csv";
  std::vector<double> repro_taps{2.0, -2.0};
  CLI::App* repro = app.add_subcommand(
      "repro", "Reproduce the worked step-edge example and verify it against pinned values");
  repro->add_option("--out", repro_out, "Output path (default: stdout)");
  repro->add_option("--format", repro_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  repro->add_option("--taps", repro_taps, "Override the edge-detector kernel taps (test hook)")
      ->delimiter(',')
      ->group("");

  std::string sweep_config;
  std::string sweep_out;
  std::string sweep_format = "csv";
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Evaluate a residual sweep described by a JSON config");
  sweep_cmd->add_option("--config", sweep_config, "JSON sweep configuration")->required();
  sweep_cmd->add_option("--out", sweep_out, "Output path")->required();
  sweep_cmd->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg-plot"}));

  std::uint64_t check_seed = 1;
  std::string check_fault;
  CLI::App* check = app.add_subcommand("check", "Run every module's property suite");
  check->add_option("--seed", check_seed, "Seed for the randomized properties");
  check->add_option("--inject-fault", check_fault, "Corrupt a checker reference (test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (repro->parsed()) return run_repro(repro_out, repro_format, repro_taps);
    if (sweep_cmd->parsed()) return run_sweep(sweep_config, sweep_out, sweep_format);
    if (check->parsed()) return run_check(check_seed, check_fault);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
