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

#include <cstdint>
#include <string>
#include <vector>

namespace equivprobe {

/// Fault injection for negative-path testing of the check runner itself.
/// reflect_boundary_model corrupts the reference index map the reflect
/// boundary property is verified against, so that property must fail.
enum class Fault { none, reflect_boundary_model };

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

/// Runs every module's invariant/property suite. All randomness derives
/// from the seed; two runs with the same seed produce identical results.
std::vector<PropertyResult> run_property_checks(std::uint64_t seed, Fault fault = Fault::none);

bool all_passed(const std::vector<PropertyResult>& results);

/// Fixed-layout text report, byte-identical for identical results and seed.
std::string format_check_report(const std::vector<PropertyResult>& results,
                                std::uint64_t seed);

}  // namespace equivprobe
