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

#include <vector>

#include "equivprobe/grid.hpp"

namespace equivprobe {

// Out-of-range input indices are resolved per mode. 'valid' (length-reducing)
// is deliberately absent: equivariance metrics need aligned lengths.
enum class Boundary { zero, circular, reflect };

// All nonlinearities are pointwise, so they commute with index permutations.
enum class Nonlinearity { identity, relu, tanh };

/// Maps idx into [0, n). Returns -1 when the zero mode contributes nothing.
/// reflect is the half-sample reflection: -1 -> 0, n -> n-1, period 2n.
int resolve_index(long long idx, int n, Boundary mode);

/// Boundary-resolved sample access; 0.0 for zero-mode out-of-range reads.
double sample_at(const std::vector<double>& v, long long idx, Boundary mode);

/// Convolution taps plus the alignment origin: the tap index applied at
/// offset 0, so output[j] = sum_i taps[i] * input[j - (i - origin)].
class Kernel {
 public:
  Kernel(std::vector<double> taps, int origin);

  const std::vector<double>& taps() const { return taps_; }
  int origin() const { return origin_; }

  /// Sum of |taps|: an operator-norm bound for circular and zero boundaries.
  double l1_norm() const;

 private:
  std::vector<double> taps_;
  int origin_;
};

struct ConvLayer {
  Kernel kernel;
  double bias = 0.0;
  Nonlinearity nonlinearity = Nonlinearity::identity;
  Boundary boundary = Boundary::zero;
};

double apply_nonlinearity(Nonlinearity nl, double x);

/// Same-length discrete convolution on the input's grid. Output element j
/// accumulates taps in ascending tap order, so circular shifts of the input
/// produce bitwise-identical circular shifts of the output.
DiscreteSignal convolve(const Kernel& k, const DiscreteSignal& b, Boundary mode);

/// nonlinearity(convolve(kernel, b, boundary) + bias), elementwise.
DiscreteSignal apply_layer(const ConvLayer& layer, const DiscreteSignal& b);

}  // namespace equivprobe
