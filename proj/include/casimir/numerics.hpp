#pragma once

// Quadrature, β-regulated oscillatory integrals, Si/Ci and bracketed roots.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/errors.hpp"

namespace casimir::numerics {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  /// Throws ConfigurationError unless tolerances are positive and max_subdivisions ≥ 1.
  void validate() const;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int subdivisions = 0;
};

namespace detail {

template <class T>
double magnitude(const T& v) {
  using std::abs;
  return static_cast<double>(abs(v));
}

template <class T>
double real_part(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return v.real();
  } else {
    return static_cast<double>(v);
  }
}

// One 21-point Gauss–Kronrod panel on [a, b]; error = |K21 − G10|·(b − a)/2,
// floored at 50 ulps of ∫|f|. `at_floor` reports whether the floor won.
template <class F>
auto gk21_panel(F& f, double a, double b, double* error, bool* at_floor) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  using T = std::decay_t<decltype(f(0.0))>;
  const auto& x = gauss_kronrod<double, 21>::abscissa();
  const auto& wk = gauss_kronrod<double, 21>::weights();
  const auto& wg = gauss<double, 10>::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kron = f(mid) * wk[0];
  T gsum{};
  double l1 = magnitude(kron);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const T fp = f(mid + half * x[i]);
    const T fm = f(mid - half * x[i]);
    kron += (fp + fm) * wk[i];
    l1 += (magnitude(fp) + magnitude(fm)) * wk[i];
    if (i % 2 == 1) gsum += (fp + fm) * wg[i / 2];
  }
  const double diff = magnitude(kron - gsum);
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * l1;
  *at_floor = diff <= floor;
  *error = half * std::max(diff, floor);
  return T(kron * half);
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod integration over the consecutive intervals
/// defined by `points` (ascending, at least two). The interval with the largest
/// error estimate is bisected until the summed error meets
/// max(abs_tol, rel_tol·|result|). Works for real or complex-valued integrands.
/// Throws ConvergenceError (carrying the best estimate) when max_subdivisions
/// is exhausted.
template <class F>
auto adaptive_integrate(F&& f, std::span<const double> points, const QuadratureConfig& cfg)
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
  using T = std::decay_t<decltype(f(0.0))>;
  cfg.validate();
  if (points.size() < 2) throw DomainError("adaptive_integrate: need at least two points");

  struct Piece {
    double a, b;
    T value;
    double error;
    bool splittable;
    bool at_floor;
  };
  std::vector<Piece> pieces;
  auto make_piece = [&](double a, double b) {
    double err = 0.0;
    bool at_floor = false;
    T v = detail::gk21_panel(f, a, b, &err, &at_floor);
    const double mid = 0.5 * (a + b);
    const bool wide =
        (b - a) > 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid));
    return Piece{a, b, v, err, wide && !at_floor, at_floor};
  };
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) {
      throw DomainError("adaptive_integrate: points must be strictly increasing");
    }
    pieces.push_back(make_piece(points[i], points[i + 1]));
  }

  while (true) {
    // Panels at the rounding floor cannot improve by splitting, so only the
    // remaining error is held to the tolerance.
    T sum{};
    double err = 0.0;
    double resolvable = 0.0;
    for (const auto& p : pieces) {
      sum += p.value;
      err += p.error;
      if (!p.at_floor) resolvable += p.error;
    }
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * detail::magnitude(sum));
    if (resolvable <= target) {
      return {sum, err, static_cast<int>(pieces.size())};
    }
    auto worst = pieces.end();
    for (auto it = pieces.begin(); it != pieces.end(); ++it) {
      if (it->splittable && (worst == pieces.end() || it->error > worst->error)) worst = it;
    }
    if (worst == pieces.end() || static_cast<int>(pieces.size()) >= cfg.max_subdivisions) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "adaptive quadrature did not converge on [%.6g, %.6g] (error %.3e, target %.3e)",
                    points.front(), points.back(), err, target);
      throw ConvergenceError(msg, detail::real_part(sum), err);
    }
    const double a = worst->a;
    const double b = worst->b;
    const double mid = 0.5 * (a + b);
    *worst = make_piece(a, mid);
    pieces.push_back(make_piece(mid, b));
  }
}

/// ∫_lo^hi f over a finite interval.
QuadratureResult<double> integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                          const QuadratureConfig& cfg = {});

/// ∫_0^∞ f for integrands dominated by e^{−x/decay_scale}. Uses the map
/// x = s·t/(1 − t) with s = decay_scale; `hints` are x-locations of features
/// that should start as interval boundaries.
template <class F>
auto integrate_semi_infinite(F&& f, double decay_scale, const QuadratureConfig& cfg,
                             std::span<const double> hints = {})
    -> QuadratureResult<std::decay_t<decltype(f(0.0))>> {
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
    throw DomainError("integrate_semi_infinite: decay scale must be positive");
  }
  const double s = decay_scale;
  auto mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    const double x = s * t / one_minus;
    return f(x) * (s / (one_minus * one_minus));
  };
  std::vector<double> pts{0.0, 0.5};
  for (double x : hints) {
    if (x > 0.0 && std::isfinite(x)) pts.push_back(x / (s + x));
  }
  pts.push_back(1.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            pts.end());
  return adaptive_integrate(mapped, pts, cfg);
}

QuadratureResult<double> integrate_semi_infinite_decay(const std::function<double(double)>& f,
                                                       double decay_scale,
                                                       const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// β-regulated oscillatory integrals
// ---------------------------------------------------------------------------

/// Decreasing positive β values used to evaluate ∫₀^∞ g(ω) e^{−βω} dω before
/// extrapolating to β = 0, plus the highest polynomial degree allowed.
struct RegulatorSchedule {
  std::vector<double> betas;
  int extrapolation_order = 0;

  /// β_k = beta0 · ratio^k, k = 0..terms−1; order = terms − 1.
  static RegulatorSchedule geometric(double beta0, double ratio, int terms);
  /// Default for a carrier e^{2iωz}: β0 = z, ratio 1/2, 10 terms. The regulated
  /// integral is analytic in β within |β| < 2z, so the geometric nodes sit
  /// inside the convergence disc regardless of the material scale.
  static RegulatorSchedule for_carrier(double z);

  void validate() const;
};

/// Symmetric folding ∫_{c−h}^{c+h} g = ∫_0^h [g(c+t) + g(c−t)] dt, which turns a
/// simple real pole into a principal value and keeps near-poles well conditioned.
struct FoldWindow {
  double center;
  double half_width;
  double inner_scale = 0.0;  // feature width near the center (adds t-breakpoints)
};

struct RegulatedOptions {
  /// Head region [0, head_end] integrated adaptively; the oscillatory tail
  /// beyond it is summed over fixed Gauss–Legendre panels one carrier period long.
  double head_end = 0.0;
  std::vector<double> breakpoints;
  std::vector<FoldWindow> folds;
  QuadratureConfig head_config{1e-13, 1e-300, 4000};
  /// The tail stops where β_min·ω reaches this value.
  double tail_cutoff = 70.0;
  /// Flag divergence when the best extrapolation residual exceeds this
  /// fraction of the largest regulated value.
  double divergence_rel_tol = 1e-6;
};

struct RegulatedResult {
  double value = 0.0;
  double residual = 0.0;
  std::size_t first = 0;  // window of the schedule used for the final value
  int order = 0;
  std::vector<double> betas;
  std::vector<double> regulated_values;  // I(β_k)
};

/// lim_{β→0} ∫₀^∞ g(ω) e^{−βω} dω for g of polynomial-times-sinusoid type with
/// carrier frequency 2·carrier (period π/carrier). Neville extrapolation in β
/// over every contiguous window of the schedule, keeping the one with the
/// smallest residual; throws ExtrapolationError when none settles.
RegulatedResult regulated_oscillatory_integral(const std::function<double(double)>& g, double carrier,
                                               const RegulatorSchedule& schedule,
                                               const RegulatedOptions& options = {});

/// I(β) for one β, using the same head/tail machinery.
double regulated_at(const std::function<double(double)>& g, double carrier, double beta,
                    const RegulatedOptions& options = {});

/// Neville extrapolation of samples (x_k, y_k) to x = 0 using polynomial
/// degree `order` (≤ n−1). Returns {value, |last diagonal difference|}.
std::pair<double, double> extrapolate_to_zero(std::span<const double> x, std::span<const double> y,
                                              int order);

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Si(x) = ∫₀^x sin t / t dt, any real x.
double sine_integral(double x);
/// Ci(x) = γ_E + ln x + ∫₀^x (cos t − 1)/t dt, x > 0.
double cosine_integral(double x);

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

struct Root {
  double x;
  int slope_sign;  // sign of f'(x) by central difference
};

struct RootOptions {
  int max_iterations = 200;
  int tolerance_bits = 50;
};

/// Scans `grid_n` equally spaced points on [lo, hi] for sign changes and
/// refines each bracket with TOMS 748 (bisection-safeguarded inverse cubic
/// interpolation). Results are in increasing order; empty when no sign change.
std::vector<Root> find_roots_bracketed(const std::function<double(double)>& f, double lo, double hi,
                                       int grid_n, const RootOptions& opts = {});

/// Same, with the grid values already known.
std::vector<Root> refine_sign_changes(const std::function<double(double)>& f,
                                      std::span<const double> grid, std::span<const double> values,
                                      const RootOptions& opts = {});

/// Central-difference step for slope signs: max(1e-6, 1e-6·|x|).
inline double slope_step(double x) { return std::max(1e-6, 1e-6 * std::abs(x)); }

}  // namespace casimir::numerics
