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

#include "equivprobe/conv.hpp"

#include <cmath>
#include <stdexcept>

namespace equivprobe {

int resolve_index(long long idx, int n, Boundary mode) {
  if (idx >= 0 && idx < n) return static_cast<int>(idx);
  switch (mode) {
    case Boundary::zero:
      return -1;
    case Boundary::circular: {
      long long m = idx % n;
      if (m < 0) m += n;
      return static_cast<int>(m);
    }
    case Boundary::reflect: {
      // Half-sample reflection has period 2n: ... 1 0 | 0 1 .. n-1 | n-1 n-2 ...
      const long long period = 2LL * n;
      long long m = idx % period;
      if (m < 0) m += period;
      return static_cast<int>(m < n ? m : period - 1 - m);
    }
  }
  return -1;
}

double sample_at(const std::vector<double>& v, long long idx, Boundary mode) {
  const int r = resolve_index(idx, static_cast<int>(v.size()), mode);
  return r < 0 ? 0.0 : v[static_cast<std::size_t>(r)];
}

Kernel::Kernel(std::vector<double> taps, int origin)
    : taps_(std::move(taps)), origin_(origin) {
  if (taps_.empty()) throw std::invalid_argument("kernel: taps must be non-empty");
  for (double t : taps_) {
    if (!std::isfinite(t)) throw std::invalid_argument("kernel: taps must be finite");
  }
  if (origin_ < 0 || origin_ >= static_cast<int>(taps_.size())) {
    throw std::invalid_argument("kernel: origin must lie in [0, len(taps))");
  }
}

double Kernel::l1_norm() const {
  double acc = 0.0;
  for (double t : taps_) acc += std::abs(t);
  return acc;
}

double apply_nonlinearity(Nonlinearity nl, double x) {
  switch (nl) {
    case Nonlinearity::identity:
      return x;
    case Nonlinearity::relu:
      return x > 0.0 ? x : 0.0;
    case Nonlinearity::tanh:
      return std::tanh(x);
  }
  return x;
}

DiscreteSignal convolve(const Kernel& k, const DiscreteSignal& b, Boundary mode) {
  const auto& in = b.samples();
  const int n = b.size();
  const auto& taps = k.taps();
  const int len = static_cast<int>(taps.size());

  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int i = 0; i < len; ++i) {
      const long long idx = static_cast<long long>(j) - i + k.origin();
      const int r = resolve_index(idx, n, mode);
      if (r >= 0) acc += taps[static_cast<std::size_t>(i)] * in[static_cast<std::size_t>(r)];
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return DiscreteSignal(std::move(out), b.grid());
}

DiscreteSignal apply_layer(const ConvLayer& layer, const DiscreteSignal& b) {
  DiscreteSignal conv = convolve(layer.kernel, b, layer.boundary);
  std::vector<double> out(conv.samples());
  for (double& v : out) v = apply_nonlinearity(layer.nonlinearity, v + layer.bias);
  return DiscreteSignal(std::move(out), b.grid());
}

}  // namespace equivprobe
