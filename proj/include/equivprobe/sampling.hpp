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

#include "equivprobe/grid.hpp"
#include "equivprobe/signal.hpp"

namespace equivprobe {

// Discretization is a one-way door: there is deliberately no reconstruction
// operator back to the continuous signal. Both variants are pure functions.
enum class Discretizer { average, sample };

/// Pixel-average discretization: samples[j] = (1/dx) * integral of s over
/// pixel j. The 1/dx normalization makes a unit step produce unit pixels.
DiscreteSignal discretize_avg(const ContinuousSignal& s, const Grid& g);

/// Point-sample discretization at pixel centers x0 + (j + 0.5) * dx.
DiscreteSignal discretize_sample(const ContinuousSignal& s, const Grid& g);

DiscreteSignal discretize(Discretizer d, const ContinuousSignal& s, const Grid& g);

}  // namespace equivprobe
