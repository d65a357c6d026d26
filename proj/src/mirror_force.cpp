#include "casimir/mirror_force.hpp"

#include <cmath>
#include <numbers>

namespace casimir::mirror {

namespace {

constexpr double kPi = std::numbers::pi;

struct Params {
  double a3, wp, gamma, omega;
};

Params params_of(const Sphere& s) {
  const auto& m = s.material();
  return {s.volume_factor(), m.plasma_frequency(), m.damping(), resonance(m).omega};
}

void require_positive_separation(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("separation must be positive and finite");
}

// K(ξ) = α1(iξ)/(a³ω_p²)
double imaginary_axis_kernel(const Params& p, double xi) {
  const double q = 3.0 * xi * xi + p.wp * p.wp;
  return q / (q * q - 9.0 * xi * xi * p.gamma * p.gamma);
}

// ∫₀^∞ K(u/z) poly(u) e^{−2u} du / z, with the polynomial chosen by the caller.
template <class Poly>
double imaginary_axis_integral(const Params& p, double z, Poly poly,
                               const numerics::QuadratureConfig& cfg) {
  auto f = [&](double u) { return imaginary_axis_kernel(p, u / z) * poly(u) * std::exp(-2.0 * u); };
  const double hints[] = {z * p.wp / std::sqrt(3.0), z * p.wp};
  return numerics::integrate_semi_infinite(f, 0.5, cfg, hints).value / z;
}

// −(1/4πz⁴)∫α1·bracket uses the pole residue; the result is
// prefactor·e^{−γz}·(S sin 2Ωz + C cos 2Ωz).
struct PoleCoefficients {
  double prefactor, s, c;
};

PoleCoefficients pole_coefficients(const Params& p, double z) {
  const double w = p.omega;
  const double g = p.gamma;
  const double z2 = z * z;
  const double z3 = z2 * z;
  PoleCoefficients k;
  k.prefactor = -p.a3 * p.wp * p.wp / (48.0 * w * z2 * z2) * std::exp(-g * z);
  k.s = 2.0 * w * z * (4.0 * w * w * z2 - 3.0 * g * g * z2 - 6.0 * g * z - 6.0);
  k.c = 12.0 * g * w * w * z3 - g * g * g * z3 + 12.0 * w * w * z2 - 3.0 * g * g * z2 - 6.0 * g * z - 6.0;
  return k;
}

bool below_small_separation(const Params& p, double z) { return z * p.wp < kSmallSeparation; }

}  // namespace

double casimir_polder_force(const Sphere& s, double z) {
  require_positive_separation(z);
  return -3.0 * s.volume_factor() / (2.0 * kPi * std::pow(z, 5));
}

double casimir_polder_potential(const Sphere& s, double z) {
  require_positive_separation(z);
  return -3.0 * s.volume_factor() / (8.0 * kPi * std::pow(z, 4));
}

double small_separation_force(const Sphere& s, double z) {
  require_positive_separation(z);
  const double wp = s.material().plasma_frequency();
  return s.volume_factor() * wp * wp / (6.0 * kPi * z * z * z);
}

double j_integral(const Sphere& s, double z, const numerics::QuadratureConfig& cfg) {
  require_positive_separation(z);
  const Params p = params_of(s);
  const double scale = p.a3 * p.wp * p.wp;
  if (below_small_separation(p, z)) {
    return -scale / (8.0 * p.omega * std::pow(z, 4)) + scale / (6.0 * kPi * z * z * z);
  }
  const double integral = imaginary_axis_integral(
      p, z, [](double u) { return ((4.0 * u + 6.0) * u + 6.0) * u + 3.0; }, cfg);
  return -scale / (4.0 * kPi * std::pow(z, 4)) * integral;
}

double j_integral_undamped_closed_form(const Sphere& s, double z) {
  require_positive_separation(z);
  const Params p = params_of(s);
  if (p.gamma != 0.0) throw ConfigurationError("closed-form J requires an undamped material");
  const double b = p.wp / std::sqrt(3.0);
  const double q = 2.0 * z;
  const double x = q * b;
  const double ci = numerics::cosine_integral(x);
  const double si = numerics::sine_integral(x) - kPi / 2.0;
  // Moments ∫₀^∞ ξⁿ e^{−qξ}/(ξ² + b²) dξ, n = 0..3.
  const double l0 = (ci * std::sin(x) - si * std::cos(x)) / b;
  const double l1 = -ci * std::cos(x) - si * std::sin(x);
  const double l2 = 1.0 / q - b * b * l0;
  const double l3 = 1.0 / (q * q) - b * b * l1;
  const double bracket = 4.0 * z * z * z * l3 + 6.0 * z * z * l2 + 6.0 * z * l1 + 3.0 * l0;
  return -p.a3 * p.wp * p.wp / (12.0 * kPi * std::pow(z, 4)) * bracket;
}

double pole_term(const Sphere& s, double z) {
  require_positive_separation(z);
  const PoleCoefficients k = pole_coefficients(params_of(s), z);
  const double arg = 2.0 * params_of(s).omega * z;
  return k.prefactor * (k.s * std::sin(arg) + k.c * std::cos(arg));
}

double pole_term_amplitude(const Sphere& s, double z) {
  require_positive_separation(z);
  const PoleCoefficients k = pole_coefficients(params_of(s), z);
  return std::abs(k.prefactor) * std::hypot(k.s, k.c);
}

double pole_term_large_z(const Sphere& s, double z) {
  require_positive_separation(z);
  const Params p = params_of(s);
  const double arg = 2.0 * p.omega * z;
  return -(p.omega * p.wp * p.wp * p.a3 / (12.0 * z)) * std::exp(-p.gamma * z) *
         (2.0 * p.omega * std::sin(arg) + 3.0 * p.gamma * std::cos(arg));
}

double pole_envelope(const Sphere& s, double z) {
  require_positive_separation(z);
  const Params p = params_of(s);
  return (p.omega * p.wp * p.wp * p.a3 / (12.0 * z)) *
         std::sqrt(4.0 * p.omega * p.omega + 9.0 * p.gamma * p.gamma) * std::exp(-p.gamma * z);
}

double pole_negligible_separation(const Sphere& s, double fraction, double z_min) {
  const Params p = params_of(s);
  if (!(p.gamma > 0.0)) throw ConfigurationError("the pole term never becomes negligible without damping");
  if (!(fraction > 0.0)) throw DomainError("fraction must be positive");
  // envelope/|CP| ∝ z⁴ e^{−γz} decreases beyond z = 4/γ.
  auto excess = [&](double z) {
    return std::log(pole_envelope(s, z) / std::abs(casimir_polder_force(s, z))) - std::log(fraction);
  };
  double lo = std::max(z_min, 4.0 / p.gamma);
  if (excess(lo) <= 0.0) return std::max(z_min, lo);
  double hi = 2.0 * lo;
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

ForceBreakdown total_force(const Sphere& s, double z, const numerics::QuadratureConfig& cfg) {
  require_positive_separation(z);
  const Params p = params_of(s);
  ForceBreakdown out;
  out.z = z;
  if (below_small_separation(p, z)) {
    const double lead = p.a3 * p.wp * p.wp / (8.0 * p.omega * std::pow(z, 4));
    out.j = -lead + small_separation_force(s, z);
    out.p = lead;
  } else {
    out.j = j_integral(s, z, cfg);
    out.p = pole_term(s, z);
  }
  out.total = out.j + out.p;
  return out;
}

double force_bracket(double omega, double z) {
  const double x = omega * z;
  const double arg = 2.0 * x;
  const double sn = std::sin(arg);
  const double cs = std::cos(arg);
  return 3.0 * sn - 6.0 * x * cs - 6.0 * x * x * sn + 4.0 * x * x * x * cs;
}

OracleResult total_force_oracle(const Sphere& s, double z,
                                const std::optional<numerics::RegulatorSchedule>& schedule) {
  require_positive_separation(z);
  const Params p = params_of(s);
  auto g = [&](double w) { return alpha1_real(s, w) * force_bracket(w, z); };

  numerics::RegulatedOptions opt;
  opt.head_end = 4.0 * p.wp;
  opt.breakpoints = {p.wp, 2.0 * p.wp};
  opt.folds.push_back({p.omega, 0.5 * p.omega, 0.5 * p.gamma});
  const auto sched = schedule.value_or(numerics::RegulatorSchedule::for_carrier(z));
  const auto r = numerics::regulated_oscillatory_integral(g, z, sched, opt);
  const double scale = -1.0 / (4.0 * kPi * std::pow(z, 4));
  return {scale * r.value, std::abs(scale) * r.residual};
}

double spectrum_sigma(double z, double omega) {
  const double x = omega * z;
  return (2.0 * x * x - 1.0) * std::sin(2.0 * x) + 2.0 * x * std::cos(2.0 * x);
}

OracleResult regulated_spectrum_integral(double z,
                                         const std::optional<numerics::RegulatorSchedule>& schedule) {
  require_positive_separation(z);
  auto g = [z](double w) { return spectrum_sigma(z, w); };
  const auto sched = schedule.value_or(numerics::RegulatorSchedule::for_carrier(z));
  const auto r = numerics::regulated_oscillatory_integral(g, z, sched, {});
  return {r.value, r.residual};
}

std::vector<double> cumulative_spectrum(double z, double beta, const std::vector<double>& omegas) {
  require_positive_separation(z);
  if (!(beta >= 0.0)) throw DomainError("cumulative spectrum: beta must be non-negative");
  std::vector<double> out;
  out.reserve(omegas.size());
  auto f = [&](double w) { return spectrum_sigma(z, w) * std::exp(-beta * w); };
  const numerics::QuadratureConfig cfg{1e-12, 1e-15, 4000};
  double acc = 0.0;
  double prev = 0.0;
  for (double w : omegas) {
    if (w < prev) throw DomainError("cumulative spectrum: frequencies must be ascending");
    if (w > prev) {
      // Split into carrier periods so each panel sees at most one oscillation.
      std::vector<double> pts{prev};
      const double period = kPi / z;
      for (double x = (std::floor(prev / period) + 1.0) * period; x < w; x += period) pts.push_back(x);
      pts.push_back(w);
      acc += numerics::adaptive_integrate(f, pts, cfg).value;
    }
    out.push_back(acc);
    prev = w;
  }
  return out;
}

PotentialBreakdown potential_breakdown(const Sphere& s, double z, const numerics::QuadratureConfig& cfg) {
  require_positive_separation(z);
  const Params p = params_of(s);
  const double scale = p.a3 * p.wp * p.wp;
  PotentialBreakdown out;
  out.z = z;
  if (below_small_separation(p, z)) {
    const double lead = scale / (24.0 * p.omega * z * z * z);
    out.j = -lead + scale / (12.0 * kPi * z * z);
    out.p = lead;
  } else {
    const double integral =
        imaginary_axis_integral(p, z, [](double u) { return (2.0 * u + 2.0) * u + 1.0; }, cfg);
    out.j = -scale / (4.0 * kPi * z * z * z) * integral;

    const double w = p.omega;
    const double g = p.gamma;
    const double arg = 2.0 * w * z;
    const double residue = -kPi * scale / (6.0 * w);
    const double cos_coeff = -0.5 * z * z * (g * g - 4.0 * w * w) - g * z - 1.0;
    const double sin_coeff = -2.0 * g * w * z * z - 2.0 * w * z;
    out.p = residue * std::exp(-g * z) / (4.0 * kPi * z * z * z) *
            (cos_coeff * std::cos(arg) + sin_coeff * std::sin(arg));
  }
  out.total = out.j + out.p;
  return out;
}

double potential(const Sphere& s, double z, const numerics::QuadratureConfig& cfg) {
  return potential_breakdown(s, z, cfg).total;
}

double potential_by_force_integration(const Sphere& s, double z) {
  require_positive_separation(z);
  const Params p = params_of(s);
  if (!(p.gamma > 0.0)) {
    throw ConfigurationError("potential by force integration needs damping so the oscillations decay");
  }
  const numerics::QuadratureConfig inner{1e-13, 1e-300, 2000};
  auto force = [&](double x) { return total_force(s, x, inner).total; };

  // Oscillating region, one pole period per initial panel.
  const double far = std::max(z, 40.0 / p.gamma);
  double near_part = 0.0;
  if (far > z) {
    std::vector<double> pts{z};
    const double period = kPi / p.omega;
    for (double x = z + period; x < far; x += period) pts.push_back(x);
    pts.push_back(far);
    const numerics::QuadratureConfig cfg{1e-11, 1e-300, static_cast<int>(pts.size()) * 8 + 100};
    near_part = numerics::adaptive_integrate(force, pts, cfg).value;
  }
  // Beyond `far` the pole part is below e^{−40}; only the smooth J remains.
  auto tail = [&](double t) { return j_integral(s, far + t, inner); };
  const double tail_part = numerics::integrate_semi_infinite(tail, far, {1e-11, 1e-300, 2000}).value;
  return near_part + tail_part;
}

}  // namespace casimir::mirror
