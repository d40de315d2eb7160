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

#include <functional>
#include <memory>
#include <variant>
#include <vector>

namespace equivprobe {

// Analytic 1D signal primitives. Every primitive has a closed-form
// antiderivative, so pixel averages can be computed without quadrature error.

/// Unit step: 0 for x <= step, 1 for x > step.
struct Heaviside {
  double step = 0.0;
};

struct Constant {
  double value = 0.0;
};

/// sum_i coeffs[i] * x^i on [lo, hi], zero outside the support interval.
/// Endpoints are part of the support.
struct Polynomial {
  std::vector<double> coeffs;
  double lo = 0.0;
  double hi = 0.0;
};

/// amplitude * sin(omega * x + phase), omega in rad per unit x.
struct Sinusoid {
  double amplitude = 1.0;
  double omega = 1.0;
  double phase = 0.0;
};

/// amplitude * exp(-(x - center)^2 / (2 sigma^2)), sigma > 0.
struct Gaussian {
  double amplitude = 1.0;
  double center = 0.0;
  double sigma = 1.0;
};

/// Immutable expression tree over the primitives above plus Sum / Scale /
/// Translate combinators. Values are cheap to copy (shared subtrees) and
/// safe for unrestricted concurrent reads; trees are finite and acyclic by
/// construction. eval is deterministic: identical trees and x yield
/// identical double-precision results.
class ContinuousSignal {
 public:
  struct Node;

  static ContinuousSignal heaviside(double step);
  static ContinuousSignal constant(double value);
  static ContinuousSignal polynomial(std::vector<double> coeffs, double lo, double hi);
  static ContinuousSignal sinusoid(double amplitude, double omega, double phase);
  static ContinuousSignal gaussian(double amplitude, double center, double sigma);
  static ContinuousSignal sum(std::vector<ContinuousSignal> terms);

  /// Pointwise value at x. Throws std::invalid_argument for non-finite x.
  double eval(double x) const;

  /// Exact integral over [a, b] via closed-form antiderivatives
  /// (error function for the Gaussian). Requires a <= b, both finite.
  double integrate(double a, double b) const;

  /// Signal scaled by factor (pointwise).
  ContinuousSignal scaled(double factor) const;

  /// Translated copy: result(x) = this(x - delta), so content moves toward
  /// +x for delta > 0. Nested translations collapse into a single offset,
  /// which keeps translated(a).translated(b) eval-identical to
  /// translated(a + b). delta == 0 returns *this unchanged.
  ContinuousSignal translated(double delta) const;

  /// x positions where the signal is not smooth (step locations, support
  /// edges), unsorted. Used to split quadrature at discontinuities.
  std::vector<double> breakpoints() const;

  const Node& node() const;

 private:
  explicit ContinuousSignal(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct Sum {
  std::vector<ContinuousSignal> terms;
};

struct Scale {
  double factor = 1.0;
  ContinuousSignal inner;
};

struct Translate {
  double offset = 0.0;
  ContinuousSignal inner;
};

struct ContinuousSignal::Node
    : std::variant<Heaviside, Constant, Polynomial, Sinusoid, Gaussian, Sum,
                   Scale, Translate> {
  using variant::variant;
};

inline const ContinuousSignal::Node& ContinuousSignal::node() const { return *node_; }

inline ContinuousSignal operator+(const ContinuousSignal& a, const ContinuousSignal& b) {
  return ContinuousSignal::sum({a, b});
}

inline ContinuousSignal operator*(double factor, const ContinuousSignal& s) {
  return s.scaled(factor);
}

/// Adaptive Simpson quadrature with Richardson correction. Splitting at the
/// integrand's breakpoints is the caller's responsibility.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12, int max_depth = 40);

/// Reference continuous convolution: integral of a(tau) * b(x - tau) over
/// [lo, hi]. The integrand must be effectively supported inside the window;
/// pieces between breakpoints are integrated by adaptive quadrature.
/// Validates the discrete engine's limiting behaviour only.
double continuous_convolve(const ContinuousSignal& a, const ContinuousSignal& b,
                           double x, double lo, double hi);

}  // namespace equivprobe
