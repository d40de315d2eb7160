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

#include <cstdint>
#include <string>
#include <vector>

#include "equivprobe/conv.hpp"
#include "equivprobe/sampling.hpp"
#include "equivprobe/shift.hpp"
#include "equivprobe/signal.hpp"

namespace equivprobe {

struct ResidualNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

/// Euclidean and max-abs norms of a - b (same length required). Comparisons
/// are always same-grid, so the samples are unweighted by dx.
ResidualNorms diff_norms(const std::vector<double>& a, const std::vector<double>& b);

/// One sweep measurement. linf <= l2 <= sqrt(n) * linf always holds.
/// Skipped rows record why the combination was not evaluated.
struct ResidualRecord {
  int n = 0;
  double delta = 0.0;     // signal units
  double delta_px = 0.0;  // delta / grid.dx
  Scheme scheme = Scheme::linear;
  Boundary boundary = Boundary::zero;
  Discretizer discretizer = Discretizer::average;
  double l2 = 0.0;
  double linf = 0.0;
  bool skipped = false;
  std::string reason;
};

/// Discrete-symmetry defect: norms of
/// apply_layer(L, shift_int(b, l)) - shift_int(apply_layer(L, b), l).
/// Exactly (0, 0) for circular boundaries; nonzero residuals for zero and
/// reflect modes are pure boundary effects.
ResidualNorms shift_equiv_residual(const ConvLayer& layer, const DiscreteSignal& b,
                                   long long l);

/// Continuous-symmetry defect of the full layer: LHS translates the
/// continuous signal before discretizing, RHS fractionally shifts the layer
/// output by delta / dx pixels with the given scheme and the layer's
/// boundary mode.
ResidualRecord translation_equiv_residual(const ConvLayer& layer, const ContinuousSignal& s,
                                          const Grid& g, double delta, Scheme scheme,
                                          Discretizer discretizer);

/// Commutation defect of discretization alone:
/// discretize(translate(s, delta)) vs shift_frac(discretize(s), delta/dx).
ResidualRecord discretization_commutation_residual(const ContinuousSignal& s, const Grid& g,
                                                   double delta, Scheme scheme,
                                                   Discretizer discretizer,
                                                   Boundary boundary = Boundary::zero);

/// Empirical Lipschitz constant: max over trials of
/// |L(b + eps*u) - L(b)|_2 / |eps*u|_2 with u a seeded pseudorandom unit
/// vector. Deterministic given the seed. trials >= 1, eps > 0.
double lipschitz_estimate(const ConvLayer& layer, const DiscreteSignal& b, int trials,
                          double eps, std::uint64_t seed);

struct SweepSpec {
  std::vector<ContinuousSignal> signals;
  std::vector<ConvLayer> layers;
  std::vector<Grid> grids;
  std::vector<double> deltas;
  std::vector<Scheme> schemes;
  std::vector<Discretizer> discretizers;
};

/// Translation-equivariance residuals over the full Cartesian product, in
/// specification order: signals, then layers, grids, deltas, schemes,
/// discretizers (last index fastest). Rows are evaluated concurrently on up
/// to `threads` workers (0 = hardware concurrency) and assembled in
/// specification order, so output never depends on the thread count.
/// Incompatible combinations (fourier scheme with a non-circular layer
/// boundary) become skipped rows, not failures.
std::vector<ResidualRecord> sweep(const SweepSpec& spec, unsigned threads = 0);

}  // namespace equivprobe
