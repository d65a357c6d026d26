#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "casimir/numerics.hpp"

namespace casimir::numerics {

namespace {

constexpr int kPanelOrder = 20;

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

template <class F>
double gauss_panel(F&& f, double a, double b) {
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, kPanelOrder>::abscissa();
  const auto& w = gauss<double, kPanelOrder>::weights();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
  return s * half;
}

struct Segment {
  double a, b;
  const FoldWindow* fold;  // nullptr for a plain segment
};

std::vector<Segment> head_segments(const RegulatedOptions& opt) {
  std::vector<Segment> segs;
  if (!(opt.head_end > 0.0)) return segs;
  std::vector<double> cuts{0.0, opt.head_end};
  for (double b : opt.breakpoints) {
    if (b > 0.0 && b < opt.head_end) cuts.push_back(b);
  }
  for (const auto& w : opt.folds) {
    if (!(w.half_width > 0.0) || w.center - w.half_width < 0.0 || w.center + w.half_width > opt.head_end) {
      throw ConfigurationError("fold window must lie inside the head region");
    }
    cuts.push_back(w.center - w.half_width);
    cuts.push_back(w.center + w.half_width);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const FoldWindow* inside = nullptr;
    for (const auto& w : opt.folds) {
      if (a >= w.center - w.half_width && b <= w.center + w.half_width) inside = &w;
    }
    if (inside) {
      // Emit the folded window once, skipping interior cuts.
      if (a == inside->center - inside->half_width) {
        segs.push_back({a, inside->center + inside->half_width, inside});
      }
      continue;
    }
    segs.push_back({a, b, nullptr});
  }
  return segs;
}

double head_integral(const std::function<double(double)>& g, double beta, const RegulatedOptions& opt) {
  double total = 0.0;
  for (const auto& seg : head_segments(opt)) {
    if (seg.fold) {
      const double c = seg.fold->center;
      const double h = seg.fold->half_width;
      // With no inner scale the center is a real simple pole. The folded sum is
      // then even in t but loses about ε·c/t² of its accuracy, so it is held
      // constant below t_floor; that shifts the integral by O(t_floor³).
      const double t_floor =
          seg.fold->inner_scale > 0.0 ? 0.0 : std::cbrt(std::numeric_limits<double>::epsilon()) * c;
      auto folded = [&](double t) {
        t = std::max(t, t_floor);
        return g(c + t) * std::exp(-beta * (c + t)) + g(c - t) * std::exp(-beta * (c - t));
      };
      std::vector<double> pts{0.0};
      const double s = seg.fold->inner_scale;
      if (s > 0.0) {
        for (double m : {1.0, 10.0, 100.0}) {
          if (m * s < h) pts.push_back(m * s);
        }
      }
      pts.push_back(h);
      // Near a pole the two halves cancel, so the folded sum is only known to
      // about ε·∫(|g(c+t)| + |g(c−t)|) however fine the panels get.
      auto magnitude = [&](double t) {
        return std::abs(g(c + t)) * std::exp(-beta * (c + t)) + std::abs(g(c - t)) * std::exp(-beta * (c - t));
      };
      double spread = 0.0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) spread += gauss_panel(magnitude, pts[i], pts[i + 1]);
      QuadratureConfig cfg = opt.head_config;
      if (std::isfinite(spread)) {
        cfg.abs_tol = std::max(cfg.abs_tol, 64.0 * std::numeric_limits<double>::epsilon() * spread);
      }
      total += adaptive_integrate(folded, pts, cfg).value;
    } else {
      auto weighted = [&](double w) { return g(w) * std::exp(-beta * w); };
      const double pts[] = {seg.a, seg.b};
      total += adaptive_integrate(weighted, pts, opt.head_config).value;
    }
  }
  return total;
}

// Tail ∫_{head_end}^{∞} g e^{−β_k ω} for every β_k at once, over panels one
// carrier period (π/carrier) long.
std::vector<double> tail_integrals(const std::function<double(double)>& g, double carrier,
                                   std::span<const double> betas, const RegulatedOptions& opt) {
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, kPanelOrder>::abscissa();
  const auto& w = gauss<double, kPanelOrder>::weights();
  const double beta_min = *std::min_element(betas.begin(), betas.end());
  const double start = std::max(0.0, opt.head_end);
  const double end = opt.tail_cutoff / beta_min;
  const double period = std::numbers::pi / carrier;
  std::vector<CompensatedSum> sums(betas.size());
  std::vector<double> panel(betas.size());
  for (double a = start; a < end; a += period) {
    const double mid = a + 0.5 * period;
    const double half = 0.5 * period;
    std::fill(panel.begin(), panel.end(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int sgn : {-1, 1}) {
        const double node = mid + sgn * half * x[i];
        const double gv = g(node) * w[i];
        for (std::size_t k = 0; k < betas.size(); ++k) panel[k] += gv * std::exp(-betas[k] * node);
      }
    }
    for (std::size_t k = 0; k < betas.size(); ++k) sums[k].add(panel[k] * half);
  }
  std::vector<double> out(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) out[k] = sums[k].value();
  return out;
}

}  // namespace

RegulatorSchedule RegulatorSchedule::geometric(double beta0, double ratio, int terms) {
  if (!(beta0 > 0.0) || !(ratio > 0.0 && ratio < 1.0) || terms < 2) {
    throw ConfigurationError("geometric schedule needs beta0 > 0, 0 < ratio < 1, terms >= 2");
  }
  RegulatorSchedule s;
  double b = beta0;
  for (int k = 0; k < terms; ++k, b *= ratio) s.betas.push_back(b);
  s.extrapolation_order = terms - 1;
  return s;
}

RegulatorSchedule RegulatorSchedule::for_carrier(double z) {
  if (!(z > 0.0)) throw DomainError("regulator schedule: carrier must be positive");
  return geometric(z, 0.5, 10);
}

void RegulatorSchedule::validate() const {
  if (betas.size() < 2) throw ConfigurationError("regulator schedule needs at least two beta values");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0)) throw ConfigurationError("regulator schedule: beta values must be positive");
    if (i > 0 && !(betas[i] < betas[i - 1])) {
      throw ConfigurationError("regulator schedule: beta values must be strictly decreasing");
    }
  }
  if (extrapolation_order < 1 || extrapolation_order > static_cast<int>(betas.size()) - 1) {
    throw ConfigurationError("regulator schedule: extrapolation order out of range");
  }
}

std::pair<double, double> extrapolate_to_zero(std::span<const double> x, std::span<const double> y,
                                              int order) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw ConfigurationError("extrapolate_to_zero: need matching samples");
  order = std::clamp(order, 1, static_cast<int>(n) - 1);
  // Use the last order+1 samples (smallest x).
  const std::size_t first = n - static_cast<std::size_t>(order) - 1;
  std::vector<std::vector<double>> t(order + 1, std::vector<double>(order + 1, 0.0));
  for (int i = 0; i <= order; ++i) {
    t[i][0] = y[first + i];
    for (int k = 1; k <= i; ++k) {
      const double xi = x[first + i];
      const double xik = x[first + i - k];
      t[i][k] = t[i][k - 1] + (t[i][k - 1] - t[i - 1][k - 1]) * xi / (xik - xi);
    }
  }
  const double value = t[order][order];
  const double residual = std::abs(value - t[order - 1][order - 1]);
  return {value, residual};
}

double regulated_at(const std::function<double(double)>& g, double carrier, double beta,
                    const RegulatedOptions& options) {
  if (!(carrier > 0.0)) throw DomainError("regulated integral: carrier must be positive");
  if (!(beta > 0.0)) throw DomainError("regulated integral: beta must be positive");
  const double b[] = {beta};
  return head_integral(g, beta, options) + tail_integrals(g, carrier, b, options)[0];
}

RegulatedResult regulated_oscillatory_integral(const std::function<double(double)>& g, double carrier,
                                               const RegulatorSchedule& schedule,
                                               const RegulatedOptions& options) {
  if (!(carrier > 0.0)) throw DomainError("regulated integral: carrier must be positive");
  schedule.validate();
  RegulatedResult r;
  r.betas = schedule.betas;
  r.regulated_values = tail_integrals(g, carrier, schedule.betas, options);
  for (std::size_t k = 0; k < r.betas.size(); ++k) {
    r.regulated_values[k] += head_integral(g, r.betas[k], options);
  }

  // Small β values carry the most roundoff and large ones the most truncation
  // error, so every contiguous window is tried and the steadiest one wins.
  const std::size_t n = r.betas.size();
  const int max_order = schedule.extrapolation_order;
  const int min_order = std::min(2, max_order);
  bool found = false;
  for (std::size_t first = 0; first + static_cast<std::size_t>(min_order) < n; ++first) {
    const int top = std::min<int>(max_order, static_cast<int>(n - first) - 1);
    for (int order = min_order; order <= top; ++order) {
      const auto window = static_cast<std::size_t>(order) + 1;
      const auto [value, residual] =
          extrapolate_to_zero(std::span<const double>(r.betas).subspan(first, window),
                              std::span<const double>(r.regulated_values).subspan(first, window), order);
      if (!std::isfinite(value) || !std::isfinite(residual)) continue;
      if (!found || residual < r.residual) {
        r.value = value;
        r.residual = residual;
        r.first = first;
        r.order = order;
        found = true;
      }
    }
  }
  double scale = 0.0;
  for (double v : r.regulated_values) scale = std::max(scale, std::abs(v));
  scale = std::max(scale, std::abs(r.value));
  if (!found || r.residual > options.divergence_rel_tol * std::max(scale, 1e-300)) {
    throw ExtrapolationError("beta -> 0 extrapolation is not converging (residual " +
                                 (found ? std::to_string(r.residual) : std::string("non-finite")) + ")",
                             r.value, r.residual);
  }
  return r;
}

}  // namespace casimir::numerics
