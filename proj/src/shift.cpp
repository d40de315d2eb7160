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

#include "equivprobe/shift.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "equivprobe/fft.hpp"

namespace equivprobe {

namespace {

DiscreteSignal shift_linear(const DiscreteSignal& b, double delta_px, Boundary mode) {
  const auto& in = b.samples();
  const int n = b.size();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double p = static_cast<double>(j) - delta_px;
    const double f = std::floor(p);
    const double t = p - f;
    const long long j0 = static_cast<long long>(f);
    out[static_cast<std::size_t>(j)] =
        (1.0 - t) * sample_at(in, j0, mode) + t * sample_at(in, j0 + 1, mode);
  }
  return DiscreteSignal(std::move(out), b.grid());
}

DiscreteSignal shift_cubic(const DiscreteSignal& b, double delta_px, Boundary mode) {
  const auto& in = b.samples();
  const int n = b.size();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double p = static_cast<double>(j) - delta_px;
    const double f = std::floor(p);
    const double t = p - f;
    const long long j0 = static_cast<long long>(f);
    const double t2 = t * t;
    const double t3 = t2 * t;
    // Catmull-Rom basis (interpolating, C1).
    const double w0 = 0.5 * (-t3 + 2.0 * t2 - t);
    const double w1 = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
    const double w2 = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
    const double w3 = 0.5 * (t3 - t2);
    out[static_cast<std::size_t>(j)] =
        w0 * sample_at(in, j0 - 1, mode) + w1 * sample_at(in, j0, mode) +
        w2 * sample_at(in, j0 + 1, mode) + w3 * sample_at(in, j0 + 2, mode);
  }
  return DiscreteSignal(std::move(out), b.grid());
}

DiscreteSignal shift_fourier(const DiscreteSignal& b, double delta_px) {
  const int n = b.size();
  std::vector<std::complex<double>> buf(b.samples().begin(), b.samples().end());
  fft::forward(buf);
  for (int k = 0; k < n; ++k) {
    if (n % 2 == 0 && k == n / 2) {
      // Nyquist bin: the +n/2 and -n/2 phase ramps average to a cosine,
      // which keeps the spectrum conjugate-symmetric and the output real.
      buf[static_cast<std::size_t>(k)] *= std::cos(std::numbers::pi * delta_px);
      continue;
    }
    const int freq = k <= n / 2 ? k : k - n;
    const double ang = -2.0 * std::numbers::pi * freq * delta_px / static_cast<double>(n);
    buf[static_cast<std::size_t>(k)] *= std::polar(1.0, ang);
  }
  fft::inverse(buf);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = buf[static_cast<std::size_t>(j)].real();
  return DiscreteSignal(std::move(out), b.grid());
}

}  // namespace

DiscreteSignal shift_int(const DiscreteSignal& b, long long l, Boundary mode) {
  const auto& in = b.samples();
  const int n = b.size();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = sample_at(in, static_cast<long long>(j) - l, mode);
  }
  return DiscreteSignal(std::move(out), b.grid());
}

DiscreteSignal shift_frac(const DiscreteSignal& b, double delta_px, Scheme scheme,
                          Boundary mode) {
  if (!std::isfinite(delta_px) || std::abs(delta_px) > 1e12) {
    throw std::invalid_argument("shift_frac: |delta_px| must be finite and at most 1e12");
  }
  if (delta_px == std::nearbyint(delta_px)) {
    return shift_int(b, std::llrint(delta_px), mode);
  }
  switch (scheme) {
    case Scheme::linear:
      return shift_linear(b, delta_px, mode);
    case Scheme::cubic:
      return shift_cubic(b, delta_px, mode);
    case Scheme::fourier:
      if (mode != Boundary::circular) {
        throw std::invalid_argument("shift_frac: fourier scheme requires circular boundary");
      }
      return shift_fourier(b, delta_px);
  }
  throw std::invalid_argument("shift_frac: unknown scheme");
}

}  // namespace equivprobe
