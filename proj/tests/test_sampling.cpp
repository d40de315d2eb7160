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
#include <limits>

#include <doctest.h>

#include "equivprobe/sampling.hpp"
#include "support/oracles.hpp"

using namespace equivprobe;

namespace {
const Grid kFourPixels(-1.0, 0.5, 4);
}

TEST_CASE("pixel averages of the step edge") {
  const auto step = ContinuousSignal::heaviside(0.0);
  const DiscreteSignal pixels = discretize_avg(step, kFourPixels);
  CHECK(pixels.samples() == std::vector<double>{0.0, 0.0, 1.0, 1.0});
}

TEST_CASE("pixel averages of the half-pixel translated step edge") {
  const auto moved = ContinuousSignal::heaviside(0.0).translated(0.25);
  const DiscreteSignal pixels = discretize_avg(moved, kFourPixels);
  CHECK(pixels.samples() == std::vector<double>{0.0, 0.0, 0.5, 1.0});
}

TEST_CASE("constant signals discretize to constant pixels") {
  const auto c = ContinuousSignal::constant(-2.5);
  for (const Grid& g : {kFourPixels, Grid(0.3, 0.11, 7)}) {
    const DiscreteSignal avg = discretize_avg(c, g);
    const DiscreteSignal centers = discretize_sample(c, g);
    // averaging rounds through (right - left) / dx, which is 1 +- 1 ulp on
    // non-dyadic grids; point sampling is exact everywhere
    for (double v : avg.samples()) CHECK(std::abs(v - -2.5) <= 1e-14);
    for (double v : centers.samples()) CHECK(v == -2.5);
  }
  const DiscreteSignal exact = discretize_avg(c, kFourPixels);
  for (double v : exact.samples()) CHECK(v == -2.5);
}

TEST_CASE("point sampling reads pixel centers") {
  const auto step = ContinuousSignal::heaviside(0.0);
  // centers -0.75, -0.25, 0.25, 0.75 through the step definition
  CHECK(discretize_sample(step, kFourPixels).samples() ==
        std::vector<double>{0.0, 0.0, 1.0, 1.0});
}

TEST_CASE("average and point sampling agree at second order for a sinusoid") {
  const auto wave = ContinuousSignal::sinusoid(1.0, 3.0, 0.5);
  const auto max_gap = [&](int n) {
    const Grid g(-1.0, 2.0 / n, n);
    return oracles::max_abs_diff(discretize_avg(wave, g).samples(),
                                 discretize_sample(wave, g).samples());
  };
  const double coarse = max_gap(16);
  const double fine = max_gap(64);
  CHECK(fine < coarse);
  CHECK(fine < coarse / 8.0);  // O(dx^2) should shrink by ~16x
}

TEST_CASE("whole-pixel translations commute with averaging in the interior") {
  const auto s = ContinuousSignal::gaussian(1.0, -0.2, 0.4) + ContinuousSignal::heaviside(0.3);
  const Grid g(-1.0, 0.25, 8);
  const int m = 3;
  const DiscreteSignal base = discretize_avg(s, g);
  const DiscreteSignal moved = discretize_avg(s.translated(m * g.dx), g);
  for (int j = m; j < g.n; ++j) {
    CHECK(std::abs(moved[j] - base[j - m]) <= 1e-13);
  }
}

TEST_CASE("discretization is linear") {
  const auto s1 = ContinuousSignal::gaussian(0.7, 0.0, 0.3);
  const auto s2 = ContinuousSignal::sinusoid(1.0, 2.0, 0.0);
  const Grid g(-1.0, 0.2, 10);
  for (Discretizer d : {Discretizer::average, Discretizer::sample}) {
    const DiscreteSignal sum = discretize(d, s1 + s2, g);
    const DiscreteSignal a = discretize(d, s1, g);
    const DiscreteSignal b = discretize(d, s2, g);
    for (int j = 0; j < g.n; ++j) {
      CHECK(std::abs(sum[j] - (a[j] + b[j])) <= 1e-13);
    }
  }
}

TEST_CASE("pixel averages stay inside the pixel range for monotone signals") {
  const auto ramp = ContinuousSignal::polynomial({0.0, 1.0}, -4.0, 4.0);
  const Grid g(-1.3, 0.35, 6);
  const DiscreteSignal avg = discretize_avg(ramp, g);
  for (int j = 0; j < g.n; ++j) {
    CHECK(avg[j] >= ramp.eval(g.left(j)) - 1e-12);
    CHECK(avg[j] <= ramp.eval(g.right(j)) + 1e-12);
  }
}

TEST_CASE("grid and discrete-signal validation") {
  CHECK_THROWS_AS(Grid(0.0, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, -0.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(Grid(std::numeric_limits<double>::infinity(), 0.5, 4), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteSignal({1.0, 2.0}, Grid(0.0, 1.0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteSignal({1.0, std::numeric_limits<double>::quiet_NaN()},
                                 Grid(0.0, 1.0, 2)),
                  std::invalid_argument);

  const Grid g(0.0, 0.5, 3);
  CHECK(g.left(0) == 0.0);
  CHECK(g.right(2) == 1.5);
  CHECK(g.center(1) == 0.75);
}

TEST_CASE("average discretization equals the quadrature oracle on a mixed signal") {
  const auto s = ContinuousSignal::gaussian(1.0, 0.1, 0.35) +
                 ContinuousSignal::heaviside(-0.4) +
                 ContinuousSignal::polynomial({0.2, 0.3}, -0.8, 0.9);
  const Grid g(-1.0, 0.4, 5);
  const DiscreteSignal avg = discretize_avg(s, g);
  for (int j = 0; j < g.n; ++j) {
    // integrate across the known breakpoints so Simpson sees smooth pieces
    std::vector<double> cuts{g.left(j), g.right(j)};
    for (double bp : s.breakpoints()) {
      if (bp > cuts.front() && bp < cuts.back()) cuts.insert(cuts.end() - 1, bp);
    }
    std::sort(cuts.begin(), cuts.end());
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      integral += oracles::adaptive_simpson([&](double x) { return s.eval(x); }, cuts[i],
                                            cuts[i + 1]);
    }
    CHECK(std::abs(avg[j] - integral / g.dx) <= 1e-10);
  }
}
