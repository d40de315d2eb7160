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

#include "equivprobe/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace equivprobe {

Grid::Grid(double x0_, double dx_, int n_) : x0(x0_), dx(dx_), n(n_) {
  if (!std::isfinite(x0) || !std::isfinite(dx)) {
    throw std::invalid_argument("grid: x0 and dx must be finite");
  }
  if (dx <= 0.0) throw std::invalid_argument("grid: dx must be > 0");
  if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
}

DiscreteSignal::DiscreteSignal(std::vector<double> samples, Grid grid)
    : samples_(std::move(samples)), grid_(grid) {
  if (samples_.size() != static_cast<std::size_t>(grid_.n)) {
    throw std::invalid_argument("discrete signal: sample count must equal grid.n");
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("discrete signal: samples must be finite");
    }
  }
}

DiscreteSignal discretize_avg(const ContinuousSignal& s, const Grid& g) {
  std::vector<double> out(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) {
    out[static_cast<std::size_t>(j)] = s.integrate(g.left(j), g.right(j)) / g.dx;
  }
  return DiscreteSignal(std::move(out), g);
}

DiscreteSignal discretize_sample(const ContinuousSignal& s, const Grid& g) {
  std::vector<double> out(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) {
    out[static_cast<std::size_t>(j)] = s.eval(g.center(j));
  }
  return DiscreteSignal(std::move(out), g);
}

DiscreteSignal discretize(Discretizer d, const ContinuousSignal& s, const Grid& g) {
  return d == Discretizer::average ? discretize_avg(s, g) : discretize_sample(s, g);
}

}  // namespace equivprobe
