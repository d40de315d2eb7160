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

// Brute-force reference implementations used only by tests. These stay
// independent of the library code paths they are checked against: boundary
// handling is re-derived with plain loops and integration with generic
// quadrature instead of antiderivatives.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

inline double simpson_slice(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double left = simpson_slice(fa, flm, fm, a, m);
  const double right = simpson_slice(fm, frm, fb, m, b);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return simpson_rec(f, a, b, fa, fm, fb, simpson_slice(fa, fm, fb, a, b), tol, depth);
}

inline double riemann_midpoint(const std::function<double(double)>& f, double a, double b,
                               long cells) {
  const double h = (b - a) / static_cast<double>(cells);
  double acc = 0.0;
  for (long i = 0; i < cells; ++i) {
    acc += f(a + (static_cast<double>(i) + 0.5) * h);
  }
  return acc * h;
}

enum class OBoundary { zero, circular, reflect };

inline double oracle_sample(const std::vector<double>& in, long idx, OBoundary mode) {
  const long n = static_cast<long>(in.size());
  if (idx >= 0 && idx < n) return in[static_cast<std::size_t>(idx)];
  switch (mode) {
    case OBoundary::zero:
      return 0.0;
    case OBoundary::circular:
      while (idx < 0) idx += n;
      while (idx >= n) idx -= n;
      return in[static_cast<std::size_t>(idx)];
    case OBoundary::reflect:
      while (idx < 0 || idx >= n) {
        if (idx < 0) {
          idx = -idx - 1;
        } else {
          idx = 2 * n - 1 - idx;
        }
      }
      return in[static_cast<std::size_t>(idx)];
  }
  return 0.0;
}

/// Double-loop discrete convolution: out[j] = sum_i taps[i] * in[j - i + origin].
inline std::vector<double> conv_oracle(const std::vector<double>& taps, int origin,
                                       const std::vector<double>& in, OBoundary mode) {
  const long n = static_cast<long>(in.size());
  std::vector<double> out(in.size(), 0.0);
  for (long j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < taps.size(); ++i) {
      out[static_cast<std::size_t>(j)] +=
          taps[i] * oracle_sample(in, j - static_cast<long>(i) + origin, mode);
    }
  }
  return out;
}

/// O(n^2) DFT, the reference for the library FFT.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                                   bool inverse = false) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 2.0 : -2.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sign * std::numbers::pi * static_cast<double>(j) *
                         static_cast<double>(k) / static_cast<double>(n);
      acc += x[j] * std::polar(1.0, ang);
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracles
