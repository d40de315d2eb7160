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

#include "equivprobe/equivariance.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "equivprobe/rng.hpp"

namespace equivprobe {

namespace {

double l2_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

constexpr const char* kFourierBoundaryReason = "fourier scheme requires circular boundary";

}  // namespace

ResidualNorms diff_norms(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("diff_norms: length mismatch");
  }
  double sumsq = 0.0;
  double maxabs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sumsq += d * d;
    maxabs = std::max(maxabs, std::abs(d));
  }
  return ResidualNorms{std::sqrt(sumsq), maxabs};
}

ResidualNorms shift_equiv_residual(const ConvLayer& layer, const DiscreteSignal& b,
                                   long long l) {
  const DiscreteSignal lhs = apply_layer(layer, shift_int(b, l, layer.boundary));
  const DiscreteSignal rhs = shift_int(apply_layer(layer, b), l, layer.boundary);
  return diff_norms(lhs.samples(), rhs.samples());
}

ResidualRecord translation_equiv_residual(const ConvLayer& layer, const ContinuousSignal& s,
                                          const Grid& g, double delta, Scheme scheme,
                                          Discretizer discretizer) {
  const double delta_px = delta / g.dx;
  const DiscreteSignal lhs = apply_layer(layer, discretize(discretizer, s.translated(delta), g));
  const DiscreteSignal rhs =
      shift_frac(apply_layer(layer, discretize(discretizer, s, g)), delta_px, scheme,
                 layer.boundary);
  const ResidualNorms norms = diff_norms(lhs.samples(), rhs.samples());
  return ResidualRecord{g.n,      delta,      delta_px,   scheme, layer.boundary,
                        discretizer, norms.l2, norms.linf, false,  {}};
}

ResidualRecord discretization_commutation_residual(const ContinuousSignal& s, const Grid& g,
                                                   double delta, Scheme scheme,
                                                   Discretizer discretizer,
                                                   Boundary boundary) {
  const double delta_px = delta / g.dx;
  const DiscreteSignal lhs = discretize(discretizer, s.translated(delta), g);
  const DiscreteSignal rhs = shift_frac(discretize(discretizer, s, g), delta_px, scheme, boundary);
  const ResidualNorms norms = diff_norms(lhs.samples(), rhs.samples());
  return ResidualRecord{g.n,      delta,      delta_px,   scheme, boundary,
                        discretizer, norms.l2, norms.linf, false,  {}};
}

double lipschitz_estimate(const ConvLayer& layer, const DiscreteSignal& b, int trials,
                          double eps, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("lipschitz_estimate: trials must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("lipschitz_estimate: eps must be positive and finite");
  }

  const int n = b.size();
  const DiscreteSignal base = apply_layer(layer, b);
  std::mt19937_64 gen(seed);

  double best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> u(static_cast<std::size_t>(n));
    double norm = 0.0;
    do {
      for (double& x : u) x = rng::gaussian(gen);
      norm = l2_norm(u);
    } while (norm == 0.0);

    std::vector<double> perturbation(static_cast<std::size_t>(n));
    std::vector<double> perturbed(b.samples());
    for (std::size_t i = 0; i < u.size(); ++i) {
      perturbation[i] = eps * (u[i] / norm);
      perturbed[i] += perturbation[i];
    }

    const DiscreteSignal out = apply_layer(layer, DiscreteSignal(std::move(perturbed), b.grid()));
    const double num = diff_norms(out.samples(), base.samples()).l2;
    const double den = l2_norm(perturbation);
    best = std::max(best, num / den);
  }
  return best;
}

std::vector<ResidualRecord> sweep(const SweepSpec& spec, unsigned threads) {
  const std::size_t total = spec.signals.size() * spec.layers.size() * spec.grids.size() *
                            spec.deltas.size() * spec.schemes.size() *
                            spec.discretizers.size();
  std::vector<ResidualRecord> records(total);
  if (total == 0) return records;

  // Row index -> combination, specification order with the last list fastest.
  const auto evaluate_row = [&](std::size_t row) {
    std::size_t rest = row;
    const std::size_t i_disc = rest % spec.discretizers.size();
    rest /= spec.discretizers.size();
    const std::size_t i_scheme = rest % spec.schemes.size();
    rest /= spec.schemes.size();
    const std::size_t i_delta = rest % spec.deltas.size();
    rest /= spec.deltas.size();
    const std::size_t i_grid = rest % spec.grids.size();
    rest /= spec.grids.size();
    const std::size_t i_layer = rest % spec.layers.size();
    rest /= spec.layers.size();
    const std::size_t i_signal = rest;

    const ConvLayer& layer = spec.layers[i_layer];
    const Grid& grid = spec.grids[i_grid];
    const double delta = spec.deltas[i_delta];
    const Scheme scheme = spec.schemes[i_scheme];
    const Discretizer discretizer = spec.discretizers[i_disc];

    if (scheme == Scheme::fourier && layer.boundary != Boundary::circular) {
      records[row] = ResidualRecord{grid.n,      delta, delta / grid.dx, scheme,
                                    layer.boundary, discretizer, 0.0,   0.0,
                                    true,        kFourierBoundaryReason};
      return;
    }
    try {
      records[row] = translation_equiv_residual(layer, spec.signals[i_signal], grid, delta,
                                                scheme, discretizer);
    } catch (const std::exception& e) {
      records[row] = ResidualRecord{grid.n,      delta, delta / grid.dx, scheme,
                                    layer.boundary, discretizer, 0.0,   0.0,
                                    true,        e.what()};
    }
  };

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

  if (workers == 1) {
    for (std::size_t row = 0; row < total; ++row) evaluate_row(row);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t row = next.fetch_add(1); row < total; row = next.fetch_add(1)) {
        evaluate_row(row);
      }
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

}  // namespace equivprobe
