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

#include "equivprobe/conv.hpp"
#include "equivprobe/grid.hpp"

namespace equivprobe {

/// Fractional-shift interpolation scheme. All shifts are grid-relative:
/// amounts are in pixels, conversion from signal units happens upstream.
enum class Scheme { linear, cubic, fourier };

/// Exact integer shift: out[j] = in[j - l], boundary fill per mode.
/// Circular mode is a pure rotation.
DiscreteSignal shift_int(const DiscreteSignal& b, long long l, Boundary mode);

/// Approximate shift by delta_px pixels: samples of the interpolant taken at
/// gridpoints minus delta_px.
///   linear  - two-tap interpolation
///   cubic   - Catmull-Rom four-tap interpolation
///   fourier - spectral phase-ramp shift on the circular extension; exact
///             for bandlimited signals, real output enforced by handling
///             the Nyquist bin's phase as a pure cosine
/// Integer delta_px (including 0) reduces bitwise to shift_int for every
/// scheme, before the fourier/circular restriction applies. A fractional
/// fourier shift with a non-circular boundary throws std::invalid_argument.
/// |delta_px| must be at most 1e12.
DiscreteSignal shift_frac(const DiscreteSignal& b, double delta_px, Scheme scheme,
                          Boundary mode);

}  // namespace equivprobe
