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

#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "equivprobe/conv.hpp"
#include "equivprobe/rng.hpp"
#include "equivprobe/shift.hpp"
#include "support/oracles.hpp"

using namespace equivprobe;

namespace {

const Grid kFourPixels(-1.0, 0.5, 4);

// The edge detector of the worked example: out_j = 2 b_{j+1} - 2 b_j,
// i.e. taps [2, -2] anchored at the second tap.
ConvLayer edge_layer() {
  return ConvLayer{Kernel({2.0, -2.0}, 1), -1.0, Nonlinearity::relu, Boundary::zero};
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("edge kernel on the step pixels") {
  const DiscreteSignal pixels({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  const DiscreteSignal out = convolve(Kernel({2.0, -2.0}, 1), pixels, Boundary::zero);
  CHECK(out.samples() == std::vector<double>{0.0, 2.0, 0.0, -2.0});
}

TEST_CASE("delta kernel is the identity under every boundary") {
  const DiscreteSignal v({0.3, -1.2, 0.0, 2.5, -0.7}, Grid(0.0, 1.0, 5));
  const Kernel delta({1.0}, 0);
  for (Boundary mode : {Boundary::zero, Boundary::circular, Boundary::reflect}) {
    CHECK(bitwise_equal(convolve(delta, v, mode).samples(), v.samples()));
  }
}

TEST_CASE("edge layer detects the original edge but not the translated one") {
  const ConvLayer layer = edge_layer();
  const DiscreteSignal original({0.0, 0.0, 1.0, 1.0}, kFourPixels);
  const DiscreteSignal translated({0.0, 0.0, 0.5, 1.0}, kFourPixels);
  CHECK(apply_layer(layer, original).samples() == std::vector<double>{0.0, 1.0, 0.0, 0.0});
  CHECK(apply_layer(layer, translated).samples() == std::vector<double>{0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("identity layer passes the input through") {
  const ConvLayer layer{Kernel({1.0}, 0), 0.0, Nonlinearity::identity, Boundary::zero};
  const DiscreteSignal v({0.4, 1.25, -3.0}, Grid(0.0, 1.0, 3));
  CHECK(apply_layer(layer, v).samples() == v.samples());
}

TEST_CASE("convolve agrees with the double-loop oracle") {
  std::mt19937_64 gen(4242);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = rng::uniform_int(gen, 1, 32);
    const int len = rng::uniform_int(gen, 1, 6);
    std::vector<double> taps(static_cast<std::size_t>(len));
    for (double& t : taps) t = rng::uniform(gen, -2.0, 2.0);
    const int origin = rng::uniform_int(gen, 0, len - 1);
    std::vector<double> in(static_cast<std::size_t>(n));
    for (double& x : in) x = rng::uniform(gen, -2.0, 2.0);

    const Grid g(0.0, 1.0, n);
    const DiscreteSignal b(in, g);
    const struct {
      Boundary lib;
      oracles::OBoundary oracle;
    } modes[] = {{Boundary::zero, oracles::OBoundary::zero},
                 {Boundary::circular, oracles::OBoundary::circular},
                 {Boundary::reflect, oracles::OBoundary::reflect}};
    for (const auto& m : modes) {
      const DiscreteSignal out = convolve(Kernel(taps, origin), b, m.lib);
      const std::vector<double> expected = oracles::conv_oracle(taps, origin, in, m.oracle);
      CHECK(oracles::max_abs_diff(out.samples(), expected) <= 1e-12);
    }
  }
}

TEST_CASE("circular layers are bitwise shift equivariant") {
  std::mt19937_64 gen(7);
  const Grid g(0.0, 1.0, 6);
  std::vector<double> in(6);
  for (double& x : in) x = rng::uniform(gen, -1.0, 1.0);
  const DiscreteSignal b(in, g);
  const ConvLayer layer{Kernel({0.5, -1.0, 0.25}, 1), 0.2, Nonlinearity::tanh,
                        Boundary::circular};
  for (int l = -6; l <= 12; ++l) {
    const DiscreteSignal lhs = apply_layer(layer, shift_int(b, l, Boundary::circular));
    const DiscreteSignal rhs = shift_int(apply_layer(layer, b), l, Boundary::circular);
    CHECK(bitwise_equal(lhs.samples(), rhs.samples()));
  }
}

TEST_CASE("convolution is linear in the signal") {
  const Grid g(0.0, 1.0, 5);
  const DiscreteSignal b1({1.0, 0.0, -2.0, 0.5, 3.0}, g);
  const DiscreteSignal b2({0.2, -0.4, 1.0, 0.0, -1.5}, g);
  const Kernel k({0.3, 1.0, -0.7}, 1);
  const double alpha = 1.7;
  const double beta = -0.6;
  std::vector<double> mix(5);
  for (int j = 0; j < 5; ++j) mix[static_cast<std::size_t>(j)] = alpha * b1[j] + beta * b2[j];
  for (Boundary mode : {Boundary::zero, Boundary::circular, Boundary::reflect}) {
    const DiscreteSignal lhs = convolve(k, DiscreteSignal(mix, g), mode);
    const DiscreteSignal c1 = convolve(k, b1, mode);
    const DiscreteSignal c2 = convolve(k, b2, mode);
    for (int j = 0; j < 5; ++j) {
      CHECK(std::abs(lhs[j] - (alpha * c1[j] + beta * c2[j])) <= 1e-12);
    }
  }
}

TEST_CASE("pointwise nonlinearities commute with rotation bitwise") {
  const Grid g(0.0, 1.0, 7);
  const DiscreteSignal v({0.3, -0.8, 1.9, -0.1, 0.0, 2.4, -3.3}, g);
  for (Nonlinearity nl : {Nonlinearity::relu, Nonlinearity::tanh}) {
    for (int l : {-3, 1, 5}) {
      std::vector<double> mapped = v.samples();
      for (double& x : mapped) x = apply_nonlinearity(nl, x);
      const auto lhs = shift_int(DiscreteSignal(mapped, g), l, Boundary::circular);
      std::vector<double> rhs = shift_int(v, l, Boundary::circular).samples();
      for (double& x : rhs) x = apply_nonlinearity(nl, x);
      CHECK(bitwise_equal(lhs.samples(), rhs));
    }
  }
}

TEST_CASE("kernel validation") {
  CHECK_THROWS_AS(Kernel({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Kernel({1.0, 2.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Kernel({1.0, 2.0}, -1), std::invalid_argument);
  CHECK_THROWS_AS(Kernel({std::numeric_limits<double>::infinity()}, 0), std::invalid_argument);
  CHECK(Kernel({2.0, -2.0}, 1).l1_norm() == 4.0);
}

TEST_CASE("boundary index resolution") {
  CHECK(resolve_index(-1, 4, Boundary::zero) == -1);
  CHECK(resolve_index(4, 4, Boundary::zero) == -1);
  CHECK(resolve_index(2, 4, Boundary::zero) == 2);
  CHECK(resolve_index(-1, 4, Boundary::circular) == 3);
  CHECK(resolve_index(9, 4, Boundary::circular) == 1);
  CHECK(resolve_index(-1, 4, Boundary::reflect) == 0);
  CHECK(resolve_index(4, 4, Boundary::reflect) == 3);
  CHECK(resolve_index(-2, 4, Boundary::reflect) == 1);
  CHECK(resolve_index(5, 4, Boundary::reflect) == 2);
  CHECK(resolve_index(-9, 4, Boundary::reflect) == 0);
}
