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

#include "equivprobe/checks.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>

#include "equivprobe/equivariance.hpp"
#include "equivprobe/fft.hpp"
#include "equivprobe/rng.hpp"
#include "equivprobe/serialize.hpp"

namespace equivprobe {

namespace {

using Gen = std::mt19937_64;
using Failure = std::optional<std::string>;

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i], b[i])) return false;
  }
  return true;
}

// --- randomized fixtures --------------------------------------------------

ContinuousSignal random_primitive(Gen& g) {
  switch (rng::uniform_int(g, 0, 4)) {
    case 0:
      return ContinuousSignal::heaviside(rng::uniform(g, -2.0, 2.0));
    case 1:
      return ContinuousSignal::constant(rng::uniform(g, -2.0, 2.0));
    case 2: {
      std::vector<double> coeffs(static_cast<std::size_t>(rng::uniform_int(g, 1, 3)));
      for (double& c : coeffs) c = rng::uniform(g, -1.0, 1.0);
      const double lo = rng::uniform(g, -3.0, 0.0);
      return ContinuousSignal::polynomial(std::move(coeffs), lo, lo + rng::uniform(g, 0.5, 4.0));
    }
    case 3:
      return ContinuousSignal::sinusoid(rng::uniform(g, -2.0, 2.0), rng::uniform(g, 0.5, 8.0),
                                        rng::uniform(g, 0.0, 2.0 * std::numbers::pi));
    default:
      return ContinuousSignal::gaussian(rng::uniform(g, 0.2, 2.0), rng::uniform(g, -1.0, 1.0),
                                        rng::uniform(g, 0.15, 1.0));
  }
}

ContinuousSignal random_smooth_signal(Gen& g) {
  std::vector<ContinuousSignal> terms;
  const int k = rng::uniform_int(g, 1, 3);
  for (int i = 0; i < k; ++i) {
    switch (rng::uniform_int(g, 0, 2)) {
      case 0:
        terms.push_back(ContinuousSignal::sinusoid(rng::uniform(g, -1.0, 1.0),
                                                   rng::uniform(g, 0.5, 6.0),
                                                   rng::uniform(g, 0.0, 2.0 * std::numbers::pi)));
        break;
      case 1:
        terms.push_back(ContinuousSignal::gaussian(rng::uniform(g, 0.2, 1.5),
                                                   rng::uniform(g, -1.0, 1.0),
                                                   rng::uniform(g, 0.2, 1.0)));
        break;
      default:
        terms.push_back(ContinuousSignal::constant(rng::uniform(g, -1.0, 1.0)));
        break;
    }
  }
  return ContinuousSignal::sum(std::move(terms));
}

ContinuousSignal random_signal(Gen& g) {
  ContinuousSignal s = random_smooth_signal(g);
  if (rng::uniform01(g) < 0.5) {
    return s + ContinuousSignal::heaviside(rng::uniform(g, -1.5, 1.5));
  }
  return s;
}

Grid random_grid(Gen& g, int n_min, int n_max) {
  return Grid(rng::uniform(g, -2.0, 0.0), rng::uniform(g, 0.1, 0.5),
              rng::uniform_int(g, n_min, n_max));
}

DiscreteSignal random_discrete(Gen& g, const Grid& grid) {
  std::vector<double> v(static_cast<std::size_t>(grid.n));
  for (double& x : v) x = rng::uniform(g, -1.0, 1.0);
  return DiscreteSignal(std::move(v), grid);
}

Kernel random_kernel(Gen& g, int max_len = 5) {
  const int len = rng::uniform_int(g, 1, max_len);
  std::vector<double> taps(static_cast<std::size_t>(len));
  for (double& t : taps) t = rng::uniform(g, -1.0, 1.0);
  return Kernel(std::move(taps), rng::uniform_int(g, 0, len - 1));
}

Nonlinearity random_nonlinearity(Gen& g) {
  switch (rng::uniform_int(g, 0, 2)) {
    case 0: return Nonlinearity::identity;
    case 1: return Nonlinearity::relu;
    default: return Nonlinearity::tanh;
  }
}

Boundary random_boundary(Gen& g) {
  switch (rng::uniform_int(g, 0, 2)) {
    case 0: return Boundary::zero;
    case 1: return Boundary::circular;
    default: return Boundary::reflect;
  }
}

ConvLayer random_layer(Gen& g, Boundary boundary) {
  return ConvLayer{random_kernel(g), rng::uniform(g, -0.5, 0.5), random_nonlinearity(g), boundary};
}

double non_integer(Gen& g, double lo, double hi) {
  double v = rng::uniform(g, lo, hi);
  if (v == std::nearbyint(v)) v += 0.3;
  return v;
}

// --- properties -----------------------------------------------------------

Failure check_translation_exactness(Gen& g, Fault) {
  for (int iter = 0; iter < 400; ++iter) {
    const ContinuousSignal s = random_primitive(g);
    const double delta = rng::uniform(g, -3.0, 3.0);
    const double x = rng::uniform(g, -5.0, 5.0);
    const double lhs = s.translated(delta).eval(x);
    const double rhs = s.eval(x - delta);
    if (!same_bits(lhs, rhs)) {
      return "translate(s, " + format_double(delta) + ").eval(" + format_double(x) + ") = " +
             format_double(lhs) + " but s.eval(x - delta) = " + format_double(rhs);
    }
  }
  return std::nullopt;
}

Failure check_translate_composition(Gen& g, Fault) {
  for (int iter = 0; iter < 200; ++iter) {
    const ContinuousSignal s = random_signal(g);
    const double a = rng::uniform(g, -2.0, 2.0);
    const double b = rng::uniform(g, -2.0, 2.0);
    const ContinuousSignal s1 = s.translated(a).translated(b);
    const ContinuousSignal s2 = s.translated(a + b);
    for (int k = 0; k < 5; ++k) {
      const double x = rng::uniform(g, -4.0, 4.0);
      if (!same_bits(s1.eval(x), s2.eval(x))) {
        return "translate composition mismatch at x = " + format_double(x);
      }
    }
  }
  return std::nullopt;
}

Failure check_integrate_linearity(Gen& g, Fault) {
  for (int iter = 0; iter < 200; ++iter) {
    const ContinuousSignal s1 = random_signal(g);
    const ContinuousSignal s2 = random_signal(g);
    const double a = rng::uniform(g, -3.0, 1.0);
    const double b = a + rng::uniform(g, 0.0, 4.0);
    const double lhs = (s1 + s2).integrate(a, b);
    const double rhs = s1.integrate(a, b) + s2.integrate(a, b);
    if (std::abs(lhs - rhs) > 1e-13) {
      return "sum integral differs from summed integrals by " + format_double(lhs - rhs);
    }
  }
  return std::nullopt;
}

Failure check_integrate_additivity(Gen& g, Fault) {
  for (int iter = 0; iter < 200; ++iter) {
    const ContinuousSignal s = random_signal(g);
    const double a = rng::uniform(g, -3.0, 1.0);
    const double b = a + rng::uniform(g, 0.0, 2.0);
    const double c = b + rng::uniform(g, 0.0, 2.0);
    const double whole = s.integrate(a, c);
    const double split = s.integrate(a, b) + s.integrate(b, c);
    if (std::abs(whole - split) > 1e-12) {
      return "interval splitting changed the integral by " + format_double(whole - split);
    }
  }
  return std::nullopt;
}

Failure check_sampling_integer_shift(Gen& g, Fault) {
  for (int iter = 0; iter < 100; ++iter) {
    const ContinuousSignal s = random_signal(g);
    const Grid grid = random_grid(g, 4, 12);
    const int m = rng::uniform_int(g, 1, grid.n - 1);
    const DiscreteSignal base = discretize_avg(s, grid);
    const DiscreteSignal moved = discretize_avg(s.translated(m * grid.dx), grid);
    for (int j = m; j < grid.n; ++j) {
      if (std::abs(moved[j] - base[j - m]) > 1e-13) {
        return "interior pixel " + std::to_string(j) + " moved by " +
               format_double(moved[j] - base[j - m]);
      }
    }
  }
  return std::nullopt;
}

Failure check_sampling_linearity(Gen& g, Fault) {
  for (int iter = 0; iter < 100; ++iter) {
    const ContinuousSignal s1 = random_signal(g);
    const ContinuousSignal s2 = random_signal(g);
    const Grid grid = random_grid(g, 2, 10);
    for (Discretizer d : {Discretizer::average, Discretizer::sample}) {
      const DiscreteSignal sum = discretize(d, s1 + s2, grid);
      const DiscreteSignal a = discretize(d, s1, grid);
      const DiscreteSignal b = discretize(d, s2, grid);
      for (int j = 0; j < grid.n; ++j) {
        if (std::abs(sum[j] - (a[j] + b[j])) > 1e-13) {
          return "discretizer " + to_string(d) + " not linear at pixel " + std::to_string(j);
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_sampling_range(Gen& g, Fault) {
  for (int iter = 0; iter < 60; ++iter) {
    const bool use_step = rng::uniform01(g) < 0.5;
    const ContinuousSignal s = use_step
                                   ? ContinuousSignal::heaviside(rng::uniform(g, -1.0, 1.0))
                                   : ContinuousSignal::polynomial({0.0, 1.0}, -4.0, 4.0);
    const Grid grid(rng::uniform(g, -2.0, -1.0), rng::uniform(g, 0.1, 0.4),
                    rng::uniform_int(g, 2, 8));
    const DiscreteSignal avg = discretize_avg(s, grid);
    for (int j = 0; j < grid.n; ++j) {
      const double va = s.eval(grid.left(j));
      const double vb = s.eval(grid.right(j));
      const double lo = std::min(va, vb) - 1e-12;
      const double hi = std::max(va, vb) + 1e-12;
      if (avg[j] < lo || avg[j] > hi) {
        return "pixel " + std::to_string(j) + " average " + format_double(avg[j]) +
               " escapes [" + format_double(lo) + ", " + format_double(hi) + "]";
      }
    }
  }
  return std::nullopt;
}

Failure check_conv_circular_bitwise(Gen& g, Fault) {
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const Grid grid(0.0, 1.0, n);
      const ConvLayer layer = random_layer(g, Boundary::circular);
      const DiscreteSignal b = random_discrete(g, grid);
      for (int l = -n; l < 2 * n; ++l) {
        const DiscreteSignal lhs = apply_layer(layer, shift_int(b, l, Boundary::circular));
        const DiscreteSignal rhs = shift_int(apply_layer(layer, b), l, Boundary::circular);
        if (!same_bits(lhs.samples(), rhs.samples())) {
          return "n = " + std::to_string(n) + ", l = " + std::to_string(l) +
                 ": circular shift not bitwise equivariant";
        }
      }
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 9, 64));
    const ConvLayer layer = random_layer(g, Boundary::circular);
    const DiscreteSignal b = random_discrete(g, grid);
    const int l = rng::uniform_int(g, -100, 100);
    const DiscreteSignal lhs = apply_layer(layer, shift_int(b, l, Boundary::circular));
    const DiscreteSignal rhs = shift_int(apply_layer(layer, b), l, Boundary::circular);
    if (!same_bits(lhs.samples(), rhs.samples())) {
      return "n = " + std::to_string(grid.n) + ", l = " + std::to_string(l) +
             ": circular shift not bitwise equivariant";
    }
  }
  return std::nullopt;
}

Failure check_conv_linearity(Gen& g, Fault) {
  for (int iter = 0; iter < 100; ++iter) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 1, 16));
    const Kernel kernel = random_kernel(g);
    const DiscreteSignal b1 = random_discrete(g, grid);
    const DiscreteSignal b2 = random_discrete(g, grid);
    const double alpha = rng::uniform(g, -2.0, 2.0);
    const double beta = rng::uniform(g, -2.0, 2.0);
    std::vector<double> mix(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) mix[static_cast<std::size_t>(j)] = alpha * b1[j] + beta * b2[j];
    const Boundary mode = random_boundary(g);
    const DiscreteSignal lhs = convolve(kernel, DiscreteSignal(std::move(mix), grid), mode);
    const DiscreteSignal c1 = convolve(kernel, b1, mode);
    const DiscreteSignal c2 = convolve(kernel, b2, mode);
    for (int j = 0; j < grid.n; ++j) {
      if (std::abs(lhs[j] - (alpha * c1[j] + beta * c2[j])) > 1e-12) {
        return "convolve not linear at j = " + std::to_string(j) + " under " + to_string(mode);
      }
    }
  }
  return std::nullopt;
}

Failure check_pointwise_rotation(Gen& g, Fault) {
  for (int iter = 0; iter < 100; ++iter) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 1, 16));
    const DiscreteSignal v = random_discrete(g, grid);
    const int l = rng::uniform_int(g, -20, 20);
    for (Nonlinearity nl : {Nonlinearity::relu, Nonlinearity::tanh}) {
      std::vector<double> mapped(v.samples());
      for (double& x : mapped) x = apply_nonlinearity(nl, x);
      const DiscreteSignal lhs = shift_int(DiscreteSignal(std::move(mapped), grid), l,
                                           Boundary::circular);
      std::vector<double> rotated = shift_int(v, l, Boundary::circular).samples();
      for (double& x : rotated) x = apply_nonlinearity(nl, x);
      if (!same_bits(lhs.samples(), rotated)) {
        return to_string(nl) + " does not commute with rotation by " + std::to_string(l);
      }
    }
  }
  return std::nullopt;
}

Failure check_shift_integer_reduction(Gen& g, Fault) {
  for (int iter = 0; iter < 60; ++iter) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 1, 12));
    const DiscreteSignal v = random_discrete(g, grid);
    const int m = rng::uniform_int(g, -6, 6);
    for (Scheme scheme : {Scheme::linear, Scheme::cubic, Scheme::fourier}) {
      for (Boundary mode : {Boundary::zero, Boundary::circular, Boundary::reflect}) {
        const DiscreteSignal a = shift_frac(v, static_cast<double>(m), scheme, mode);
        const DiscreteSignal b = shift_int(v, m, mode);
        if (!same_bits(a.samples(), b.samples())) {
          return to_string(scheme) + "/" + to_string(mode) + " integer shift by " +
                 std::to_string(m) + " differs from shift_int";
        }
      }
    }
  }
  return std::nullopt;
}

// The even-n Nyquist bin follows cos(pi*delta) rather than a phase ramp, so
// composing two shifts only matches a single shift on Nyquist-free content;
// odd n has no Nyquist bin.
DiscreteSignal strip_nyquist(const DiscreteSignal& v) {
  const int n = v.size();
  if (n % 2 != 0) return v;
  std::vector<std::complex<double>> buf(v.samples().begin(), v.samples().end());
  fft::forward(buf);
  buf[static_cast<std::size_t>(n / 2)] = {0.0, 0.0};
  fft::inverse(buf);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = buf[static_cast<std::size_t>(j)].real();
  return DiscreteSignal(std::move(out), v.grid());
}

Failure check_fourier_composition(Gen& g, Fault) {
  for (int iter = 0; iter < 60; ++iter) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 3, 33));
    const DiscreteSignal v = strip_nyquist(random_discrete(g, grid));
    const double a = non_integer(g, -2.0, 2.0);
    const double b = non_integer(g, -2.0, 2.0);
    const DiscreteSignal two = shift_frac(shift_frac(v, a, Scheme::fourier, Boundary::circular), b,
                                          Scheme::fourier, Boundary::circular);
    const DiscreteSignal one = shift_frac(v, a + b, Scheme::fourier, Boundary::circular);
    if (diff_norms(two.samples(), one.samples()).linf > 1e-10) {
      return "composition of fourier shifts " + format_double(a) + " and " + format_double(b) +
             " drifted above 1e-10 at n = " + std::to_string(grid.n);
    }
  }
  return std::nullopt;
}

Failure check_fourier_conv_commutation(Gen& g, Fault) {
  for (int iter = 0; iter < 60; ++iter) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 4, 32));
    const DiscreteSignal v = random_discrete(g, grid);
    const Kernel kernel = random_kernel(g);
    const double delta = non_integer(g, -2.0, 2.0);
    const DiscreteSignal lhs =
        convolve(kernel, shift_frac(v, delta, Scheme::fourier, Boundary::circular),
                 Boundary::circular);
    const DiscreteSignal rhs = shift_frac(convolve(kernel, v, Boundary::circular), delta,
                                          Scheme::fourier, Boundary::circular);
    if (diff_norms(lhs.samples(), rhs.samples()).linf > 1e-9) {
      return "fourier shift and circular convolution stopped commuting at n = " +
             std::to_string(grid.n);
    }
  }
  return std::nullopt;
}

int reflect_reference(long long idx, int n, Fault fault) {
  if (fault == Fault::reflect_boundary_model) {
    // Deliberately wrong reference (clamping) used to prove the runner
    // reports failures.
    if (idx < 0) return 0;
    if (idx >= n) return n - 1;
    return static_cast<int>(idx);
  }
  while (idx < 0 || idx >= n) {
    if (idx < 0) {
      idx = -idx - 1;
    } else {
      idx = 2LL * n - 1 - idx;
    }
  }
  return static_cast<int>(idx);
}

Failure check_reflect_boundary_map(Gen&, Fault fault) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> ramp(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) ramp[static_cast<std::size_t>(j)] = static_cast<double>(j);
    const DiscreteSignal v(ramp, Grid(0.0, 1.0, n));
    for (int l = -2 * n; l <= 2 * n; ++l) {
      const DiscreteSignal out = shift_int(v, l, Boundary::reflect);
      for (int j = 0; j < n; ++j) {
        const double expected =
            static_cast<double>(reflect_reference(static_cast<long long>(j) - l, n, fault));
        if (out[j] != expected) {
          return "n = " + std::to_string(n) + ", l = " + std::to_string(l) + ", j = " +
                 std::to_string(j) + ": got sample " + format_double(out[j]) + ", reference says " +
                 format_double(expected);
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_positive_commutation_residual(Gen&, Fault) {
  // Designated counterexample: a coarse Gaussian. (The Heaviside/linear pair
  // degenerates to zero residual, so it proves nothing here.)
  const ContinuousSignal s = ContinuousSignal::gaussian(1.0, 0.0, 0.3);
  const Grid grid(-1.0, 0.5, 4);
  const double delta = 0.25;
  const struct {
    Scheme scheme;
    Boundary boundary;
  } cases[] = {{Scheme::linear, Boundary::zero},
               {Scheme::linear, Boundary::circular},
               {Scheme::cubic, Boundary::circular},
               {Scheme::fourier, Boundary::circular}};
  for (const auto& c : cases) {
    const ResidualRecord r = discretization_commutation_residual(s, grid, delta, c.scheme,
                                                                 Discretizer::average, c.boundary);
    if (!(r.linf > 1e-3)) {
      return to_string(c.scheme) + "/" + to_string(c.boundary) +
             " commutation residual unexpectedly small: " + format_double(r.linf);
    }
  }
  return std::nullopt;
}

Failure check_circular_residual_zero(Gen& g, Fault) {
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      const Grid grid(0.0, 1.0, n);
      const ConvLayer layer = random_layer(g, Boundary::circular);
      const DiscreteSignal b = random_discrete(g, grid);
      for (int l = -n; l < 2 * n; ++l) {
        const ResidualNorms r = shift_equiv_residual(layer, b, l);
        if (r.l2 != 0.0 || r.linf != 0.0) {
          return "nonzero circular residual at n = " + std::to_string(n) + ", l = " +
                 std::to_string(l);
        }
      }
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    const Grid grid(0.0, 1.0, rng::uniform_int(g, 9, 64));
    const ConvLayer layer = random_layer(g, Boundary::circular);
    const DiscreteSignal b = random_discrete(g, grid);
    const ResidualNorms r = shift_equiv_residual(layer, b, rng::uniform_int(g, -100, 100));
    if (r.l2 != 0.0 || r.linf != 0.0) {
      return "nonzero circular residual at n = " + std::to_string(grid.n);
    }
  }
  return std::nullopt;
}

Failure check_grid_relabel_invariance(Gen& g, Fault) {
  for (int iter = 0; iter < 50; ++iter) {
    const ContinuousSignal s = random_smooth_signal(g);
    const Boundary mode = random_boundary(g);
    const ConvLayer layer = random_layer(g, mode);
    const Grid grid = random_grid(g, 4, 16);
    const double delta = rng::uniform(g, -1.0, 1.0);
    const Scheme scheme = (mode == Boundary::circular && rng::uniform01(g) < 0.3)
                              ? Scheme::fourier
                              : (rng::uniform01(g) < 0.5 ? Scheme::linear : Scheme::cubic);
    const Discretizer disc = rng::uniform01(g) < 0.5 ? Discretizer::average : Discretizer::sample;
    const double offset = rng::uniform(g, -2.0, 2.0);

    const ResidualRecord a = translation_equiv_residual(layer, s, grid, delta, scheme, disc);
    const ResidualRecord b = translation_equiv_residual(
        layer, s.translated(offset), Grid(grid.x0 + offset, grid.dx, grid.n), delta, scheme, disc);
    if (std::abs(a.l2 - b.l2) > 1e-12 || std::abs(a.linf - b.linf) > 1e-12) {
      return "residual changed under grid relabeling by (" + format_double(a.l2 - b.l2) + ", " +
             format_double(a.linf - b.linf) + ")";
    }
  }
  return std::nullopt;
}

Failure check_fourier_bandlimited_layer(Gen& g, Fault) {
  const int n = 32;
  const Grid grid(-1.0, 2.0 / n, n);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<ContinuousSignal> terms;
    for (int k = 0; k < 3; ++k) {
      const int freq = rng::uniform_int(g, 1, 14);
      terms.push_back(ContinuousSignal::sinusoid(rng::uniform(g, -1.0, 1.0),
                                                 std::numbers::pi * freq,
                                                 rng::uniform(g, 0.0, 2.0 * std::numbers::pi)));
    }
    const ContinuousSignal s = ContinuousSignal::sum(std::move(terms));
    const ConvLayer layer{random_kernel(g), 0.0, Nonlinearity::identity, Boundary::circular};
    const double delta = non_integer(g, -1.5, 1.5) * grid.dx;
    const Discretizer disc = rng::uniform01(g) < 0.5 ? Discretizer::average : Discretizer::sample;
    const ResidualRecord r =
        translation_equiv_residual(layer, s, grid, delta, Scheme::fourier, disc);
    if (r.linf > 1e-9) {
      return "bandlimited identity-layer residual " + format_double(r.linf) + " above 1e-9";
    }
  }
  return std::nullopt;
}

Failure check_norm_inequalities(Gen& g, Fault) {
  SweepSpec spec;
  spec.signals = {random_signal(g), random_smooth_signal(g)};
  spec.layers = {random_layer(g, Boundary::zero), random_layer(g, Boundary::circular)};
  spec.grids = {random_grid(g, 3, 12)};
  spec.deltas = {non_integer(g, -1.0, 1.0), non_integer(g, 0.0, 0.5)};
  spec.schemes = {Scheme::linear, Scheme::fourier};
  spec.discretizers = {Discretizer::average, Discretizer::sample};
  for (const ResidualRecord& r : sweep(spec, 1)) {
    if (r.skipped) continue;
    const double root_n = std::sqrt(static_cast<double>(r.n));
    if (r.linf > r.l2 + 1e-12 || r.l2 > root_n * r.linf + 1e-12) {
      return "record violates linf <= l2 <= sqrt(n)*linf: l2 = " + format_double(r.l2) +
             ", linf = " + format_double(r.linf) + ", n = " + std::to_string(r.n);
    }
  }
  return std::nullopt;
}

struct Property {
  const char* name;
  Failure (*fn)(Gen&, Fault);
};

constexpr Property kProperties[] = {
    {"signals/translation-exactness", check_translation_exactness},
    {"signals/translate-composition", check_translate_composition},
    {"signals/integrate-linearity", check_integrate_linearity},
    {"signals/integrate-additivity", check_integrate_additivity},
    {"sampling/integer-shift-commutation", check_sampling_integer_shift},
    {"sampling/linearity", check_sampling_linearity},
    {"sampling/range-preservation", check_sampling_range},
    {"convnet/circular-shift-bitwise", check_conv_circular_bitwise},
    {"convnet/convolve-linearity", check_conv_linearity},
    {"convnet/pointwise-rotation-bitwise", check_pointwise_rotation},
    {"shifts/integer-reduction", check_shift_integer_reduction},
    {"shifts/fourier-composition", check_fourier_composition},
    {"shifts/fourier-conv-commutation", check_fourier_conv_commutation},
    {"shifts/reflect-boundary-map", check_reflect_boundary_map},
    {"shifts/positive-commutation-residual", check_positive_commutation_residual},
    {"equivariance/circular-shift-residual-zero", check_circular_residual_zero},
    {"equivariance/grid-relabel-invariance", check_grid_relabel_invariance},
    {"equivariance/fourier-bandlimited-identity-layer", check_fourier_bandlimited_layer},
    {"equivariance/norm-inequalities", check_norm_inequalities},
};

}  // namespace

std::vector<PropertyResult> run_property_checks(std::uint64_t seed, Fault fault) {
  std::vector<PropertyResult> results;
  results.reserve(std::size(kProperties));
  std::uint64_t stream = 1;
  for (const Property& p : kProperties) {
    Gen gen(seed ^ (0x9e3779b97f4a7c15ULL * stream++));
    Failure failure = p.fn(gen, fault);
    results.push_back(PropertyResult{p.name, !failure.has_value(), failure.value_or("")});
  }
  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string format_check_report(const std::vector<PropertyResult>& results,
                                std::uint64_t seed) {
  std::string out = "seed: " + std::to_string(seed) + "\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      out += "[ok]   " + r.name + "\n";
      ++passed;
    } else {
      out += "[FAIL] " + r.name + ": " + r.detail + "\n";
    }
  }
  out += std::to_string(results.size()) + " properties: " + std::to_string(passed) + " passed, " +
         std::to_string(results.size() - passed) + " failed\n";
  return out;
}

}  // namespace equivprobe
