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

#include "equivprobe/equivariance.hpp"

namespace equivprobe {

// Minimal static line charts (axes, polylines, labels). Skipped rows are
// excluded; series are keyed and ordered deterministically.

/// linf residual against delta, one series per (n, scheme, boundary, discretizer).
std::string render_residual_vs_delta_svg(const std::vector<ResidualRecord>& records);

/// linf residual against n, one series per (delta, scheme, boundary, discretizer).
std::string render_residual_vs_n_svg(const std::vector<ResidualRecord>& records);

}  // namespace equivprobe
