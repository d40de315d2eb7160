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

#include "equivprobe/fft.hpp"

#include <cstddef>
#include <numbers>

namespace equivprobe::fft {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey; twiddles come straight from polar() per
// stage table so rounding does not accumulate across stages.
void fft_pow2(std::vector<cd>& a, bool invert) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (invert ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    std::vector<cd> roots(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) {
      roots[k] = std::polar(1.0, ang * static_cast<double>(k));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd u = a[i + k];
        const cd v = a[i + k + len / 2] * roots[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Bluestein's chirp-z algorithm: an n-point DFT as a linear convolution of
// chirp-premultiplied data, carried out with a power-of-two FFT.
void fft_bluestein(std::vector<cd>& a, bool invert) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  // chirp_j = exp(+/- i*pi*j^2/n); j^2 is reduced mod 2n to keep the
  // argument small and exact.
  std::vector<cd> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned long long jsq = (static_cast<unsigned long long>(j) * j) %
                                   (2ULL * static_cast<unsigned long long>(n));
    const double ang =
        (invert ? 1.0 : -1.0) * std::numbers::pi * static_cast<double>(jsq) / static_cast<double>(n);
    chirp[j] = std::polar(1.0, ang);
  }

  std::vector<cd> u(m, cd{0.0, 0.0});
  std::vector<cd> v(m, cd{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * chirp[j];
  v[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) {
    v[j] = std::conj(chirp[j]);
    v[m - j] = std::conj(chirp[j]);
  }

  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
  fft_pow2(u, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * chirp[k];
}

void transform(std::vector<cd>& a, bool invert) {
  if (a.size() <= 1) return;
  if (is_pow2(a.size())) {
    fft_pow2(a, invert);
  } else {
    fft_bluestein(a, invert);
  }
  if (invert) {
    const double scale = 1.0 / static_cast<double>(a.size());
    for (cd& x : a) x *= scale;
  }
}

}  // namespace

void forward(std::vector<std::complex<double>>& data) { transform(data, false); }

void inverse(std::vector<std::complex<double>>& data) { transform(data, true); }

}  // namespace equivprobe::fft
