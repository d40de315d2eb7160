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

#include "equivprobe/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace equivprobe {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// Antiderivative of sum c_i x^i, evaluated at x.
double poly_antiderivative(const std::vector<double>& coeffs, double x) {
  std::vector<double> anti(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    anti[i] = coeffs[i] / static_cast<double>(i + 1);
  }
  return x * horner(anti, x);
}

double eval_node(const ContinuousSignal::Node& node, double x);

struct EvalVisitor {
  double x;

  double operator()(const Heaviside& h) const { return x > h.step ? 1.0 : 0.0; }
  double operator()(const Constant& c) const { return c.value; }
  double operator()(const Polynomial& p) const {
    if (x < p.lo || x > p.hi) return 0.0;
    return horner(p.coeffs, x);
  }
  double operator()(const Sinusoid& s) const {
    return s.amplitude * std::sin(s.omega * x + s.phase);
  }
  double operator()(const Gaussian& g) const {
    const double z = (x - g.center) / g.sigma;
    return g.amplitude * std::exp(-0.5 * z * z);
  }
  double operator()(const Sum& s) const {
    double acc = 0.0;
    for (const auto& t : s.terms) acc += eval_node(t.node(), x);
    return acc;
  }
  double operator()(const Scale& s) const { return s.factor * eval_node(s.inner.node(), x); }
  double operator()(const Translate& t) const { return eval_node(t.inner.node(), x - t.offset); }
};

double eval_node(const ContinuousSignal::Node& node, double x) {
  return std::visit(EvalVisitor{x}, node);
}

double integrate_node(const ContinuousSignal::Node& node, double a, double b);

struct IntegrateVisitor {
  double a, b;

  double operator()(const Heaviside& h) const {
    const double lo = std::max(a, h.step);
    return lo < b ? b - lo : 0.0;
  }
  double operator()(const Constant& c) const { return c.value * (b - a); }
  double operator()(const Polynomial& p) const {
    const double lo = std::max(a, p.lo);
    const double hi = std::min(b, p.hi);
    if (lo >= hi) return 0.0;
    return poly_antiderivative(p.coeffs, hi) - poly_antiderivative(p.coeffs, lo);
  }
  double operator()(const Sinusoid& s) const {
    if (s.omega == 0.0) return s.amplitude * std::sin(s.phase) * (b - a);
    return -s.amplitude / s.omega *
           (std::cos(s.omega * b + s.phase) - std::cos(s.omega * a + s.phase));
  }
  double operator()(const Gaussian& g) const {
    const double k = g.amplitude * g.sigma * std::sqrt(std::numbers::pi / 2.0);
    const double s2 = g.sigma * std::numbers::sqrt2;
    return k * (std::erf((b - g.center) / s2) - std::erf((a - g.center) / s2));
  }
  double operator()(const Sum& s) const {
    double acc = 0.0;
    for (const auto& t : s.terms) acc += integrate_node(t.node(), a, b);
    return acc;
  }
  double operator()(const Scale& s) const { return s.factor * integrate_node(s.inner.node(), a, b); }
  double operator()(const Translate& t) const {
    return integrate_node(t.inner.node(), a - t.offset, b - t.offset);
  }
};

double integrate_node(const ContinuousSignal::Node& node, double a, double b) {
  return std::visit(IntegrateVisitor{a, b}, node);
}

// Accumulates breakpoints; `shift` carries translation offsets down the tree.
void collect_breakpoints(const ContinuousSignal::Node& node, double shift,
                         std::vector<double>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Heaviside>) {
          out.push_back(n.step + shift);
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          out.push_back(n.lo + shift);
          out.push_back(n.hi + shift);
        } else if constexpr (std::is_same_v<T, Sum>) {
          for (const auto& t : n.terms) collect_breakpoints(t.node(), shift, out);
        } else if constexpr (std::is_same_v<T, Scale>) {
          collect_breakpoints(n.inner.node(), shift, out);
        } else if constexpr (std::is_same_v<T, Translate>) {
          collect_breakpoints(n.inner.node(), shift + n.offset, out);
        }
      },
      node);
}

}  // namespace

ContinuousSignal::ContinuousSignal(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

ContinuousSignal ContinuousSignal::heaviside(double step) {
  require_finite(step, "heaviside step");
  return ContinuousSignal(std::make_shared<const Node>(Heaviside{step}));
}

ContinuousSignal ContinuousSignal::constant(double value) {
  require_finite(value, "constant value");
  return ContinuousSignal(std::make_shared<const Node>(Constant{value}));
}

ContinuousSignal ContinuousSignal::polynomial(std::vector<double> coeffs, double lo,
                                              double hi) {
  for (double c : coeffs) require_finite(c, "polynomial coefficient");
  require_finite(lo, "polynomial support lo");
  require_finite(hi, "polynomial support hi");
  if (lo > hi) throw std::invalid_argument("polynomial support requires lo <= hi");
  return ContinuousSignal(std::make_shared<const Node>(Polynomial{std::move(coeffs), lo, hi}));
}

ContinuousSignal ContinuousSignal::sinusoid(double amplitude, double omega, double phase) {
  require_finite(amplitude, "sinusoid amplitude");
  require_finite(omega, "sinusoid omega");
  require_finite(phase, "sinusoid phase");
  return ContinuousSignal(std::make_shared<const Node>(Sinusoid{amplitude, omega, phase}));
}

ContinuousSignal ContinuousSignal::gaussian(double amplitude, double center, double sigma) {
  require_finite(amplitude, "gaussian amplitude");
  require_finite(center, "gaussian center");
  require_finite(sigma, "gaussian sigma");
  if (sigma <= 0.0) throw std::invalid_argument("gaussian sigma must be > 0");
  return ContinuousSignal(std::make_shared<const Node>(Gaussian{amplitude, center, sigma}));
}

ContinuousSignal ContinuousSignal::sum(std::vector<ContinuousSignal> terms) {
  return ContinuousSignal(std::make_shared<const Node>(Sum{std::move(terms)}));
}

double ContinuousSignal::eval(double x) const {
  require_finite(x, "eval x");
  return eval_node(*node_, x);
}

double ContinuousSignal::integrate(double a, double b) const {
  require_finite(a, "integrate a");
  require_finite(b, "integrate b");
  if (a > b) throw std::invalid_argument("integrate requires a <= b");
  return integrate_node(*node_, a, b);
}

ContinuousSignal ContinuousSignal::scaled(double factor) const {
  require_finite(factor, "scale factor");
  return ContinuousSignal(std::make_shared<const Node>(Scale{factor, *this}));
}

ContinuousSignal ContinuousSignal::translated(double delta) const {
  require_finite(delta, "translate delta");
  if (const auto* t = std::get_if<Translate>(node_.get())) {
    const double combined = t->offset + delta;
    if (combined == 0.0) return t->inner;
    return ContinuousSignal(std::make_shared<const Node>(Translate{combined, t->inner}));
  }
  if (delta == 0.0) return *this;
  return ContinuousSignal(std::make_shared<const Node>(Translate{delta, *this}));
}

std::vector<double> ContinuousSignal::breakpoints() const {
  std::vector<double> out;
  collect_breakpoints(*node_, 0.0, out);
  return out;
}

namespace {

double simpson_estimate(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol,
                       int depth, int forced) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_estimate(fa, flm, fm, a, m);
  const double right = simpson_estimate(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  // forced levels bisect unconditionally so a near-zero 3-point estimate
  // cannot hide a narrow feature
  if (depth <= 0 || (forced <= 0 && std::abs(delta) <= 15.0 * tol)) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, forced - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, forced - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson_estimate(fa, fm, fb, a, b);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, 2);
}

double continuous_convolve(const ContinuousSignal& a, const ContinuousSignal& b,
                           double x, double lo, double hi) {
  require_finite(x, "continuous_convolve x");
  require_finite(lo, "continuous_convolve window lo");
  require_finite(hi, "continuous_convolve window hi");
  if (lo > hi) throw std::invalid_argument("continuous_convolve window requires lo <= hi");

  // Split the window at every breakpoint of tau -> a(tau) * b(x - tau).
  std::vector<double> cuts{lo, hi};
  for (double t : a.breakpoints()) {
    if (t > lo && t < hi) cuts.push_back(t);
  }
  for (double t : b.breakpoints()) {
    const double mapped = x - t;
    if (mapped > lo && mapped < hi) cuts.push_back(mapped);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Panels no wider than 0.25 keep the adaptive estimate from stepping over
  // localized mass in a wide window.
  const auto integrand = [&](double tau) { return a.eval(tau) * b.eval(x - tau); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double piece_lo = cuts[i];
    const double piece_hi = cuts[i + 1];
    const int panels = std::max(1, static_cast<int>(std::ceil((piece_hi - piece_lo) / 0.25)));
    const double h = (piece_hi - piece_lo) / panels;
    for (int p = 0; p < panels; ++p) {
      total += adaptive_simpson(integrand, piece_lo + p * h, piece_lo + (p + 1) * h);
    }
  }
  return total;
}

}  // namespace equivprobe
