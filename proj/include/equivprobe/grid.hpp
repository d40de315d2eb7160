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

namespace equivprobe {

/// Uniform pixel grid. Pixel j spans [x0 + j*dx, x0 + (j+1)*dx] for
/// j = 0..n-1. dx > 0 and n >= 1 are enforced at construction.
struct Grid {
  Grid(double x0, double dx, int n);

  double left(int j) const { return x0 + j * dx; }
  double right(int j) const { return x0 + (j + 1) * dx; }
  double center(int j) const { return x0 + (j + 0.5) * dx; }

  bool operator==(const Grid&) const = default;

  double x0;
  double dx;
  int n;
};

/// Sample vector bound to a Grid; length always equals grid.n and every
/// sample is finite.
class DiscreteSignal {
 public:
  DiscreteSignal(std::vector<double> samples, Grid grid);

  const std::vector<double>& samples() const { return samples_; }
  const Grid& grid() const { return grid_; }
  int size() const { return grid_.n; }
  double operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<double> samples_;
  Grid grid_;
};

}  // namespace equivprobe
