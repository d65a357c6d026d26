#include "casimir/interface_force.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

namespace casimir::interface {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

void check_cosine(double c) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("direction cosine must lie in (0, 1]");
}

// sin(x + δ) and cos(x + δ) expanded so that δ = π reproduces −sin x, −cos x
// up to a term of order 1e-16·|cos x|.
double shifted_sin(double sx, double cx, double delta) { return sx * std::cos(delta) + cx * std::sin(delta); }
double shifted_cos(double sx, double cx, double delta) { return cx * std::cos(delta) - sx * std::sin(delta); }

struct AngularRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Composite 20-point Gauss–Legendre rule on [0, 1] with `panels` equal panels
// and extra cuts at the model's cosine breakpoints.
AngularRule angular_rule(int panels, const std::vector<double>& cuts_in) {
  using boost::math::quadrature::gauss;
  const auto& x = gauss<double, 20>::abscissa();
  const auto& w = gauss<double, 20>::weights();
  std::vector<double> cuts;
  for (int i = 0; i <= panels; ++i) cuts.push_back(static_cast<double>(i) / panels);
  for (double c : cuts_in) {
    if (c > 0.0 && c < 1.0) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return b - a < 1e-14; }),
             cuts.end());
  AngularRule r;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double mid = 0.5 * (cuts[p] + cuts[p + 1]);
    const double half = 0.5 * (cuts[p + 1] - cuts[p]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int sgn : {-1, 1}) {
        if (x[i] == 0.0 && sgn < 0) continue;
        r.nodes.push_back(mid + sgn * half * x[i]);
        r.weights.push_back(half * w[i]);
      }
    }
  }
  return r;
}

int panels_for_phase(double phase_span) {
  return std::max(2, static_cast<int>(std::ceil(phase_span / kPi)));
}

enum class Kind { force, potential };

double angular_integrand(Kind kind, const FresnelModel& m, double omega, double z, double c) {
  const FresnelCoefficients r = m.evaluate(omega, c);
  const double x = 2.0 * omega * z * c;
  const double sx = std::sin(x);
  const double cx = std::cos(x);
  const double tilt = 1.0 - 2.0 * c * c;
  if (kind == Kind::force) {
    return c * (-r.r_s * shifted_sin(sx, cx, r.delta_s) + r.r_p * tilt * shifted_sin(sx, cx, r.delta_p));
  }
  return -r.r_s * shifted_cos(sx, cx, r.delta_s) + r.r_p * tilt * shifted_cos(sx, cx, r.delta_p);
}

// T_k(u) = ∫_W^∞ ω^k α1(ω) e^{2iωu} dω in the β → 0 sense, taken along the
// ray ω = W + iy where the integrand decays as e^{−2uy}.
Complex ray_transform(const Sphere& s, int power, double w, double u, const numerics::QuadratureConfig& cfg) {
  auto f = [&](double y) {
    const Complex omega(w, y);
    return std::pow(omega, power) * alpha1_analytic(s, omega) * std::exp(-2.0 * u * y);
  };
  const double hints[] = {w};
  const Complex integral = numerics::integrate_semi_infinite(f, 1.0 / (2.0 * u), cfg, hints).value;
  return Complex(0.0, 1.0) * std::polar(1.0, 2.0 * w * u) * integral;
}

double mode_sum(Kind kind, const Sphere& s, const FresnelModel& m, double z, const InterfaceOptions& opt) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("separation must be positive and finite");
  opt.quadrature.validate();
  const auto& mat = s.material();
  const double wp = mat.plasma_frequency();
  const double gamma = mat.damping();
  const double pole = resonance(mat).omega;
  const double w_max = opt.omega_max > 0.0 ? opt.omega_max : 40.0 * std::max(wp, 1.0 / z);
  if (!(w_max > 2.0 * pole)) throw ConfigurationError("omega_max must exceed twice the resonance frequency");
  const int power = kind == Kind::force ? 4 : 3;
  const double prefactor = kind == Kind::force ? 1.0 / kPi : 1.0 / (2.0 * kPi);
  const auto cos_cuts = m.cosine_breakpoints();

  // Explicit region [0, W].
  auto angular = [&](double omega) {
    const AngularRule rule = angular_rule(panels_for_phase(2.0 * omega * z), cos_cuts);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * angular_integrand(kind, m, omega, z, rule.nodes[i]);
    }
    return acc;
  };
  auto spectral = [&](double omega) {
    return std::pow(omega, power) * alpha1_real(s, omega) * angular(omega);
  };

  const double fold_half = 0.5 * pole;
  const double fold_lo = pole - fold_half;
  const double fold_hi = pole + fold_half;
  std::vector<double> lower{0.0, fold_lo};
  std::vector<double> upper{fold_hi};
  const double period = kPi / z;
  for (double x = period; x < w_max; x += period) {
    if (x < fold_lo) lower.push_back(x);
    if (x > fold_hi) upper.push_back(x);
  }
  for (double x : m.frequency_breakpoints()) {
    if (x > 0.0 && x < fold_lo) lower.push_back(x);
    if (x > fold_hi && x < w_max) upper.push_back(x);
  }
  upper.push_back(w_max);
  for (auto* v : {&lower, &upper}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  numerics::QuadratureConfig cfg = opt.quadrature;
  cfg.max_subdivisions =
      std::max(cfg.max_subdivisions, 20 * static_cast<int>(lower.size() + upper.size()));
  // The angular sum is accurate to about ε per unit of |integrand| while its
  // value falls like 1/(ωz), so the frequency integral cannot be resolved
  // below roughly ε·∫ω^k|α1|.
  auto magnitude = [&](double omega) { return std::pow(omega, power) * std::abs(alpha1_real(s, omega)); };
  const double spread = numerics::adaptive_integrate(magnitude, lower, cfg).value +
                        numerics::adaptive_integrate(magnitude, upper, cfg).value;
  if (std::isfinite(spread)) {
    cfg.abs_tol = std::max(cfg.abs_tol, 64.0 * std::numeric_limits<double>::epsilon() * spread);
  }

  double head = numerics::adaptive_integrate(spectral, lower, cfg).value;
  head += numerics::adaptive_integrate(spectral, upper, cfg).value;
  auto folded = [&](double t) { return spectral(pole + t) + spectral(pole - t); };
  std::vector<double> fold_pts{0.0};
  for (double k : {1.0, 10.0, 100.0}) {
    if (gamma > 0.0 && k * gamma < fold_half) fold_pts.push_back(k * gamma);
  }
  fold_pts.push_back(fold_half);
  head += numerics::adaptive_integrate(folded, fold_pts, cfg).value;

  // Tail [W, ∞) with the coefficients frozen at W.
  const AngularRule rule = angular_rule(panels_for_phase(2.0 * w_max * z), cos_cuts);
  const numerics::QuadratureConfig ray_cfg{1e-12, 1e-300, 2000};
  double tail = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double c = rule.nodes[i];
    const FresnelCoefficients r = m.evaluate(w_max, c);
    const Complex h = -r.r_s * std::polar(1.0, r.delta_s) + r.r_p * (1.0 - 2.0 * c * c) * std::polar(1.0, r.delta_p);
    if (h == Complex(0.0, 0.0)) continue;
    const Complex t = ray_transform(s, power, w_max, z * c, ray_cfg);
    tail += rule.weights[i] * (kind == Kind::force ? c * (h * t).imag() : (h * t).real());
  }
  return prefactor * (head + tail);
}

}  // namespace

FresnelCoefficients PerfectMirror::evaluate(double, double cos_theta) const {
  check_cosine(cos_theta);
  return {1.0, kPi, 1.0, kPi};
}

FresnelCoefficients ZeroReflector::evaluate(double, double cos_theta) const {
  check_cosine(cos_theta);
  return {0.0, 0.0, 0.0, 0.0};
}

TabulatedFresnel::TabulatedFresnel(const std::vector<std::array<double, 6>>& rows, bool lossless)
    : lossless_(lossless) {
  std::map<std::pair<double, double>, FresnelCoefficients> table;
  for (const auto& r : rows) {
    for (double v : r) {
      if (!std::isfinite(v)) throw ConfigurationError("Fresnel table: non-finite entry");
    }
    if (r[2] < 0.0 || r[2] > 1.0 || r[4] < 0.0 || r[4] > 1.0) {
      throw ConfigurationError("Fresnel table: reflection magnitudes must lie in [0, 1]");
    }
    if (!(r[0] >= 0.0) || !(r[1] >= 0.0 && r[1] <= 1.0)) {
      throw ConfigurationError("Fresnel table: need omega >= 0 and cos_theta in [0, 1]");
    }
    if (!table.emplace(std::make_pair(r[0], r[1]), FresnelCoefficients{r[2], r[3], r[4], r[5]}).second) {
      throw ConfigurationError("Fresnel table: duplicate (omega, cos_theta) row");
    }
    omegas_.push_back(r[0]);
    cosines_.push_back(r[1]);
  }
  for (auto* v : {&omegas_, &cosines_}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (omegas_.size() < 2 || cosines_.size() < 2) {
    throw ConfigurationError("Fresnel table: need at least two frequencies and two cosines");
  }
  if (table.size() != omegas_.size() * cosines_.size()) {
    throw ConfigurationError("Fresnel table: rows do not form a complete rectangular grid");
  }
  for (double w : omegas_) {
    for (double c : cosines_) values_.push_back(table.at({w, c}));
  }
}

TabulatedFresnel TabulatedFresnel::parse(const std::string& text, bool lossless) {
  std::vector<std::array<double, 6>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::array<double, 6> row{};
    int n = 0;
    double v;
    while (fields >> v) {
      if (n == 6) throw ConfigurationError("Fresnel table line " + std::to_string(line_no) + ": too many fields");
      row[n++] = v;
    }
    if (!fields.eof()) throw ConfigurationError("Fresnel table line " + std::to_string(line_no) + ": not a number");
    if (n == 0) continue;
    if (n != 6) throw ConfigurationError("Fresnel table line " + std::to_string(line_no) + ": expected 6 fields");
    rows.push_back(row);
  }
  return TabulatedFresnel(rows, lossless);
}

TabulatedFresnel TabulatedFresnel::load_file(const std::string& path, bool lossless) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open Fresnel table " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), lossless);
}

FresnelCoefficients TabulatedFresnel::evaluate(double omega, double cos_theta) const {
  if (omega < omegas_.front() || omega > omegas_.back() || cos_theta < cosines_.front() ||
      cos_theta > cosines_.back()) {
    throw RangeError("Fresnel table queried outside its range at omega=" + std::to_string(omega) +
                     ", cos_theta=" + std::to_string(cos_theta));
  }
  auto locate = [](const std::vector<double>& grid, double x) {
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    std::size_t i = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
    i = std::min(i, grid.size() - 2);
    return std::pair<std::size_t, double>(i, (x - grid[i]) / (grid[i + 1] - grid[i]));
  };
  const auto [i, tw] = locate(omegas_, omega);
  const auto [j, tc] = locate(cosines_, cos_theta);
  const std::size_t nc = cosines_.size();
  const auto& v00 = values_[i * nc + j];
  const auto& v01 = values_[i * nc + j + 1];
  const auto& v10 = values_[(i + 1) * nc + j];
  const auto& v11 = values_[(i + 1) * nc + j + 1];
  auto blend = [&](double FresnelCoefficients::*field) {
    return (1.0 - tw) * ((1.0 - tc) * v00.*field + tc * v01.*field) +
           tw * ((1.0 - tc) * v10.*field + tc * v11.*field);
  };
  return {blend(&FresnelCoefficients::r_s), blend(&FresnelCoefficients::delta_s),
          blend(&FresnelCoefficients::r_p), blend(&FresnelCoefficients::delta_p)};
}

double phase_difference(double omega, double z, double cos_theta, double delta) {
  check_cosine(cos_theta);
  return 2.0 * omega * z * cos_theta + delta;
}

double mode_force_s(double amplitude_sq, double r_s, double alpha1, double cos_theta, double delta_phase) {
  return -amplitude_sq * r_s * alpha1 * cos_theta * std::sin(delta_phase);
}

double mode_force_p(double amplitude_sq, double r_p, double alpha1, double cos_theta, double delta_phase) {
  return amplitude_sq * r_p * alpha1 * cos_theta * (1.0 - 2.0 * cos_theta * cos_theta) * std::sin(delta_phase);
}

double angular_force_integrand(const FresnelModel& model, double omega, double z, double cos_theta) {
  check_cosine(cos_theta);
  return angular_integrand(Kind::force, model, omega, z, cos_theta);
}

double angular_potential_integrand(const FresnelModel& model, double omega, double z, double cos_theta) {
  check_cosine(cos_theta);
  return angular_integrand(Kind::potential, model, omega, z, cos_theta);
}

double interface_force(const Sphere& s, const FresnelModel& mirror, double z, const InterfaceOptions& options) {
  return mode_sum(Kind::force, s, mirror, z, options);
}

double interface_potential(const Sphere& s, const FresnelModel& mirror, double z,
                           const InterfaceOptions& options) {
  return mode_sum(Kind::potential, s, mirror, z, options);
}

std::vector<std::string> interface_advisories(const Sphere& s, const FresnelModel& mirror) {
  std::vector<std::string> out;
  if (!mirror.lossless()) {
    out.push_back("wall model '" + mirror.name() +
                  "' may absorb; the mode sum assumes T^2 + R^2 = 1 and is not validated there");
  }
  if (s.outside_dipole_regime()) {
    out.push_back("sphere radius times plasma frequency >= 1; the dipole approximation is not justified");
  }
  return out;
}

}  // namespace casimir::interface
