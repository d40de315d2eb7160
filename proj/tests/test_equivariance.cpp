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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "equivprobe/equivariance.hpp"
#include "equivprobe/rng.hpp"
#include "support/oracles.hpp"

using namespace equivprobe;

namespace {

const Grid kFourPixels(-1.0, 0.5, 4);

ConvLayer edge_layer() {
  return ConvLayer{Kernel({2.0, -2.0}, 1), -1.0, Nonlinearity::relu, Boundary::zero};
}

ConvLayer smoothing_layer(Boundary mode) {
  return ConvLayer{Kernel({0.25, 0.5, 0.25}, 1), 0.0, Nonlinearity::tanh, mode};
}

// Pixel averages computed with generic quadrature instead of closed forms.
std::vector<double> quadrature_pixels(const ContinuousSignal& s, const Grid& g) {
  std::vector<double> out(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) {
    out[static_cast<std::size_t>(j)] =
        oracles::adaptive_simpson([&](double x) { return s.eval(x); }, g.left(j), g.right(j)) /
        g.dx;
  }
  return out;
}

}  // namespace

TEST_CASE("circular layers have exactly zero shift residual") {
  std::mt19937_64 gen(31);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = rng::uniform_int(gen, 1, 12);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng::uniform(gen, -1.0, 1.0);
    const DiscreteSignal b(v, Grid(0.0, 1.0, n));
    const ConvLayer layer{Kernel({0.4, -0.9, 0.3}, 1), 0.1, Nonlinearity::relu,
                          Boundary::circular};
    const ResidualNorms r = shift_equiv_residual(layer, b, rng::uniform_int(gen, -9, 9));
    CHECK(r.l2 == 0.0);
    CHECK(r.linf == 0.0);
  }
}

TEST_CASE("zero-padding breaks shift equivariance at the boundary") {
  // Hand evaluation: shifting [0,0,1,1] by 2 empties the frame, so the layer
  // output is all zero, while the shifted layer output still carries the
  // detected edge: [0,0,0,1]. Residual norms are exactly (1, 1).
  const DiscreteSignal b({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  const ResidualNorms r = shift_equiv_residual(edge_layer(), b, 2);
  CHECK(r.l2 == 1.0);
  CHECK(r.linf == 1.0);
}

TEST_CASE("shift residual vanishes for the identity transformation") {
  const DiscreteSignal b({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  const ResidualNorms r = shift_equiv_residual(edge_layer(), b, 0);
  CHECK(r.l2 == 0.0);
  CHECK(r.linf == 0.0);
}

TEST_CASE("the worked example's translation residual") {
  const auto step = ContinuousSignal::heaviside(0.0);
  const ResidualRecord r = translation_equiv_residual(edge_layer(), step, kFourPixels, 0.25,
                                                      Scheme::linear, Discretizer::average);
  CHECK(r.n == 4);
  CHECK(r.delta_px == 0.5);
  CHECK(std::abs(r.linf - 0.5) <= 1e-12);
  CHECK(std::abs(r.l2 - std::sqrt(0.5)) <= 1e-12);
  CHECK_FALSE(r.skipped);
}

TEST_CASE("translation residual vanishes at delta = 0") {
  const auto step = ContinuousSignal::heaviside(0.0);
  const ResidualRecord r = translation_equiv_residual(edge_layer(), step, kFourPixels, 0.0,
                                                      Scheme::linear, Discretizer::average);
  CHECK(r.l2 <= 1e-12);
  CHECK(r.linf <= 1e-12);
}

TEST_CASE("whole-pixel translation of a periodic signal is exact under circular boundary") {
  const int n = 8;
  const Grid g(-1.0, 2.0 / n, n);
  const auto wave = ContinuousSignal::sinusoid(1.0, std::numbers::pi, 0.3);  // period = domain
  const ConvLayer layer{Kernel({0.3, 0.5, -0.2}, 1), 0.05, Nonlinearity::tanh,
                        Boundary::circular};
  const ResidualRecord r = translation_equiv_residual(layer, wave, g, 2.0 * g.dx, Scheme::linear,
                                                      Discretizer::average);
  CHECK(r.linf <= 1e-12);
  CHECK(r.l2 <= 1e-12);
}

TEST_CASE("step + linear interpolation is the degenerate commuting case") {
  const auto step = ContinuousSignal::heaviside(0.0);
  const ResidualRecord r = discretization_commutation_residual(step, kFourPixels, 0.25,
                                                               Scheme::linear,
                                                               Discretizer::average);
  CHECK(r.l2 <= 1e-12);
  CHECK(r.linf <= 1e-12);
}

TEST_CASE("gaussian commutation residual matches the quadrature-oracle pin") {
  const auto bump = ContinuousSignal::gaussian(1.0, 0.0, 0.3);

  SUBCASE("delta = dx/2") {
    const ResidualRecord r = discretization_commutation_residual(bump, kFourPixels, 0.25,
                                                                 Scheme::linear,
                                                                 Discretizer::average);
    // values frozen from the erf-based oracle, cross-checked below
    CHECK(std::abs(r.l2 - 0.24507553196995352) <= 1e-9);
    CHECK(std::abs(r.linf - 0.2152696227657318) <= 1e-9);
    CHECK(r.linf > 1e-3);

    // independent reconstruction: quadrature pixels + hand-rolled linear shift
    const std::vector<double> v = quadrature_pixels(bump, kFourPixels);
    const std::vector<double> w = quadrature_pixels(bump.translated(0.25), kFourPixels);
    double linf = 0.0;
    double sumsq = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double interp = 0.5 * (j >= 1 ? v[static_cast<std::size_t>(j - 1)] : 0.0) +
                            0.5 * v[static_cast<std::size_t>(j)];
      const double d = w[static_cast<std::size_t>(j)] - interp;
      linf = std::max(linf, std::abs(d));
      sumsq += d * d;
    }
    CHECK(std::abs(r.linf - linf) <= 1e-10);
    CHECK(std::abs(r.l2 - std::sqrt(sumsq)) <= 1e-10);
  }

  SUBCASE("delta = dx/4") {
    const ResidualRecord r = discretization_commutation_residual(bump, kFourPixels, 0.125,
                                                                 Scheme::linear,
                                                                 Discretizer::average);
    CHECK(std::abs(r.l2 - 0.1779907550154623) <= 1e-9);
    CHECK(std::abs(r.linf - 0.15593151819999096) <= 1e-9);
    CHECK(r.linf > 1e-3);
  }
}

TEST_CASE("commutation residual vanishes at delta = 0") {
  const auto bump = ContinuousSignal::gaussian(1.0, 0.0, 0.3);
  const ResidualRecord r = discretization_commutation_residual(bump, kFourPixels, 0.0,
                                                               Scheme::linear,
                                                               Discretizer::average);
  CHECK(r.l2 <= 1e-13);
  CHECK(r.linf <= 1e-13);
}

TEST_CASE("lipschitz estimate of an isometric layer is one") {
  const ConvLayer layer{Kernel({1.0}, 0), 0.7, Nonlinearity::identity, Boundary::zero};
  const DiscreteSignal b({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  // the quotient is eps-independent for a linear layer, so a coarse probe
  // keeps finite-difference cancellation below the tolerance
  const double est = lipschitz_estimate(layer, b, 8, 1e-2, 42);
  CHECK(std::abs(est - 1.0) <= 1e-12);
}

TEST_CASE("lipschitz estimate respects the tap l1 bound") {
  std::mt19937_64 gen(77);
  const DiscreteSignal b({0.2, -0.4, 0.9, 0.0, -1.1, 0.5}, Grid(0.0, 1.0, 6));
  for (int iter = 0; iter < 30; ++iter) {
    const int len = rng::uniform_int(gen, 1, 5);
    std::vector<double> taps(static_cast<std::size_t>(len));
    for (double& t : taps) t = rng::uniform(gen, -1.5, 1.5);
    const Boundary mode = iter % 2 == 0 ? Boundary::circular : Boundary::zero;
    const Nonlinearity nl = iter % 3 == 0   ? Nonlinearity::identity
                            : iter % 3 == 1 ? Nonlinearity::relu
                                            : Nonlinearity::tanh;
    const ConvLayer layer{Kernel(taps, rng::uniform_int(gen, 0, len - 1)),
                          rng::uniform(gen, -0.5, 0.5), nl, mode};
    const double est = lipschitz_estimate(layer, b, 16, 1e-6, 1000 + iter);
    CHECK(est <= layer.kernel.l1_norm() + 1e-9);
  }
}

TEST_CASE("lipschitz estimate is deterministic and seed-dependent") {
  const ConvLayer layer = edge_layer();
  const DiscreteSignal b({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  const double a = lipschitz_estimate(layer, b, 20, 1e-6, 9001);
  const double c = lipschitz_estimate(layer, b, 20, 1e-6, 9001);
  CHECK(a == c);
}

TEST_CASE("lipschitz regression pin for the worked-example layer") {
  const double est = lipschitz_estimate(edge_layer(), DiscreteSignal({0.0, 0.0, 1.0, 1.0},
                                                                     kFourPixels),
                                        50, 1e-6, 12345);
  // frozen from the estimator's first run; guards against silent changes in
  // the sampling or accumulation order
  const double pinned = 2.6180246304186028;
  CHECK(std::abs(est - pinned) <= 1e-12 * std::max(1.0, std::abs(pinned)));
}

TEST_CASE("lipschitz estimator input validation") {
  const ConvLayer layer = edge_layer();
  const DiscreteSignal b({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  CHECK_THROWS_AS(lipschitz_estimate(layer, b, 0, 1e-6, 1), std::invalid_argument);
  CHECK_THROWS_AS(lipschitz_estimate(layer, b, 4, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lipschitz_estimate(layer, b, 4, -1e-6, 1), std::invalid_argument);
}

TEST_CASE("empty sweep specs produce no records") {
  CHECK(sweep(SweepSpec{}).empty());

  SweepSpec missing_deltas;
  missing_deltas.signals = {ContinuousSignal::heaviside(0.0)};
  missing_deltas.layers = {edge_layer()};
  missing_deltas.grids = {kFourPixels};
  missing_deltas.schemes = {Scheme::linear};
  missing_deltas.discretizers = {Discretizer::average};
  CHECK(sweep(missing_deltas).empty());
}

TEST_CASE("the worked-example singleton sweep") {
  SweepSpec spec;
  spec.signals = {ContinuousSignal::heaviside(0.0)};
  spec.layers = {edge_layer()};
  spec.grids = {kFourPixels};
  spec.deltas = {0.25};
  spec.schemes = {Scheme::linear};
  spec.discretizers = {Discretizer::average};
  const auto records = sweep(spec);
  REQUIRE(records.size() == 1);
  CHECK(std::abs(records[0].linf - 0.5) <= 1e-12);
  CHECK(records[0].n == 4);
  CHECK(records[0].delta == 0.25);
  CHECK(records[0].delta_px == 0.5);
  CHECK(records[0].scheme == Scheme::linear);
  CHECK(records[0].boundary == Boundary::zero);
  CHECK_FALSE(records[0].skipped);
}

TEST_CASE("sweep preserves specification order") {
  SweepSpec spec;
  spec.signals = {ContinuousSignal::gaussian(1.0, 0.0, 0.3)};
  spec.layers = {smoothing_layer(Boundary::circular)};
  spec.grids = {Grid(-1.0, 0.5, 4), Grid(-1.0, 0.25, 8)};
  spec.deltas = {0.1, 0.2};
  spec.schemes = {Scheme::linear, Scheme::cubic};
  spec.discretizers = {Discretizer::average, Discretizer::sample};
  const auto records = sweep(spec);
  REQUIRE(records.size() == 16);
  // last list varies fastest: discretizer, then scheme, delta, grid
  CHECK(records[0].discretizer == Discretizer::average);
  CHECK(records[1].discretizer == Discretizer::sample);
  CHECK(records[0].scheme == Scheme::linear);
  CHECK(records[2].scheme == Scheme::cubic);
  CHECK(records[0].delta == 0.1);
  CHECK(records[4].delta == 0.2);
  CHECK(records[0].n == 4);
  CHECK(records[8].n == 8);
}

TEST_CASE("incompatible sweep combinations are skipped with a reason") {
  SweepSpec spec;
  spec.signals = {ContinuousSignal::gaussian(1.0, 0.0, 0.3)};
  spec.layers = {edge_layer()};  // zero boundary
  spec.grids = {kFourPixels};
  spec.deltas = {0.25};
  spec.schemes = {Scheme::fourier, Scheme::linear};
  spec.discretizers = {Discretizer::average};
  const auto records = sweep(spec);
  REQUIRE(records.size() == 2);
  CHECK(records[0].skipped);
  CHECK(records[0].reason == "fourier scheme requires circular boundary");
  CHECK(records[0].l2 == 0.0);
  CHECK_FALSE(records[1].skipped);
  CHECK(records[1].linf > 0.0);
}

TEST_CASE("sweep results do not depend on the worker count") {
  SweepSpec spec;
  spec.signals = {ContinuousSignal::gaussian(1.0, 0.1, 0.4),
                  ContinuousSignal::heaviside(-0.2)};
  spec.layers = {edge_layer(), smoothing_layer(Boundary::circular)};
  spec.grids = {Grid(-1.0, 0.25, 8)};
  spec.deltas = {0.05, 0.125};
  spec.schemes = {Scheme::linear, Scheme::fourier};
  spec.discretizers = {Discretizer::average, Discretizer::sample};
  const auto serial = sweep(spec, 1);
  const auto parallel = sweep(spec, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].l2 == parallel[i].l2);
    CHECK(serial[i].linf == parallel[i].linf);
    CHECK(serial[i].skipped == parallel[i].skipped);
    CHECK(serial[i].reason == parallel[i].reason);
    CHECK(serial[i].delta == parallel[i].delta);
  }
}

TEST_CASE("refining the grid shrinks the residual for a smooth setup") {
  const auto bump = ContinuousSignal::gaussian(1.0, 0.0, 0.3);
  const auto residual_at = [&](int n) {
    const Grid g(-1.0, 2.0 / n, n);
    return translation_equiv_residual(smoothing_layer(Boundary::circular), bump, g, g.dx / 2.0,
                                      Scheme::linear, Discretizer::average);
  };
  const ResidualRecord coarse = residual_at(16);
  const ResidualRecord fine = residual_at(256);
  CHECK(fine.linf < coarse.linf);
  CHECK(fine.l2 < coarse.l2);
}

TEST_CASE("record norms satisfy linf <= l2 <= sqrt(n) linf") {
  SweepSpec spec;
  spec.signals = {ContinuousSignal::gaussian(1.0, 0.1, 0.25) +
                  ContinuousSignal::sinusoid(0.5, 3.0, 0.2)};
  spec.layers = {edge_layer(), smoothing_layer(Boundary::reflect)};
  spec.grids = {Grid(-1.0, 0.2, 10)};
  spec.deltas = {0.07, 0.13};
  spec.schemes = {Scheme::linear, Scheme::cubic};
  spec.discretizers = {Discretizer::average, Discretizer::sample};
  for (const auto& r : sweep(spec)) {
    REQUIRE_FALSE(r.skipped);
    CHECK(r.linf <= r.l2 + 1e-12);
    CHECK(r.l2 <= std::sqrt(static_cast<double>(r.n)) * r.linf + 1e-12);
  }
}
