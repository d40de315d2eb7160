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

#include <complex>
#include <vector>

namespace equivprobe::fft {

/// In-place forward DFT: X_k = sum_j x_j exp(-2*pi*i*j*k/n). Radix-2 for
/// power-of-two lengths, Bluestein's chirp-z otherwise, so any n >= 1 works.
void forward(std::vector<std::complex<double>>& data);

/// In-place inverse DFT including the 1/n factor.
void inverse(std::vector<std::complex<double>>& data);

}  // namespace equivprobe::fft
