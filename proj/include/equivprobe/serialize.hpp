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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "equivprobe/equivariance.hpp"

namespace equivprobe {

// Enum <-> string names used in JSON documents and CSV columns.
std::string to_string(Boundary b);
std::string to_string(Nonlinearity nl);
std::string to_string(Scheme s);
std::string to_string(Discretizer d);
Boundary parse_boundary(const std::string& s);
Nonlinearity parse_nonlinearity(const std::string& s);
Scheme parse_scheme(const std::string& s);
Discretizer parse_discretizer(const std::string& s);

/// Shortest decimal string that round-trips the double exactly.
/// Tolerances live in comparison code, never in serialization.
std::string format_double(double v);

nlohmann::json signal_to_json(const ContinuousSignal& s);
ContinuousSignal signal_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const Grid& g);
Grid grid_from_json(const nlohmann::json& j);

nlohmann::json discrete_signal_to_json(const DiscreteSignal& s);
DiscreteSignal discrete_signal_from_json(const nlohmann::json& j);

nlohmann::json layer_to_json(const ConvLayer& layer);
ConvLayer layer_from_json(const nlohmann::json& j);

nlohmann::json sweep_spec_to_json(const SweepSpec& spec);
/// Parses a sweep config document. Missing list keys default to empty;
/// unknown top-level keys are rejected so typos surface as errors.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const ResidualRecord& r);
nlohmann::json records_to_json(const std::vector<ResidualRecord>& records);

/// CSV with header n,delta,delta_px,scheme,boundary,discretizer,l2,linf,skipped,reason.
std::string records_to_csv(const std::vector<ResidualRecord>& records);

/// Writes via a temp file in the same directory plus rename, so a partial
/// evaluation never leaves a truncated file. Throws std::runtime_error on
/// I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace equivprobe
