#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "casimir/numerics.hpp"

namespace casimir::numerics {

namespace {

constexpr double kSeriesLimit = 4.0;
constexpr double kEps = 1e-16;

// Power series; alternating but the largest term at x = 4 is O(10), so the
// cancellation costs at most one digit.
void series(double x, double* si, double* ci) {
  const double x2 = x * x;
  double si_sum = x;
  double term = x;  // x^(2k+1)/(2k+1)! with sign
  double ci_sum = 0.0;
  double cterm = 1.0;  // x^(2k)/(2k)! with sign
  for (int k = 1; k < 60; ++k) {
    cterm *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double dc = cterm / (2.0 * k);
    const double ds = term / (2.0 * k + 1.0);
    ci_sum += dc;
    si_sum += ds;
    if (std::abs(ds) < kEps * std::abs(si_sum) && std::abs(dc) < kEps * (std::abs(ci_sum) + 1e-300)) {
      break;
    }
  }
  *si = si_sum;
  *ci = std::numbers::egamma + std::log(x) + ci_sum;
}

// E1(ix) by the modified Lentz continued fraction; Ci = −Re E1(ix),
// Si = π/2 + Im E1(ix). Converges quickly for x ≳ 2.
void continued_fraction(double x, double* si, double* ci) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 1000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  *ci = -h.real();
  *si = std::numbers::pi / 2.0 + h.imag();
}

}  // namespace

double sine_integral(double x) {
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return std::copysign(std::numbers::pi / 2.0, x);
  const double ax = std::abs(x);
  double si = 0.0;
  double ci = 0.0;
  if (ax <= kSeriesLimit) {
    series(ax, &si, &ci);
  } else {
    continued_fraction(ax, &si, &ci);
  }
  return std::copysign(si, x);
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cosine_integral: argument must be positive");
  if (std::isinf(x)) return 0.0;
  double si = 0.0;
  double ci = 0.0;
  if (x <= kSeriesLimit) {
    series(x, &si, &ci);
  } else {
    continued_fraction(x, &si, &ci);
  }
  return ci;
}

}  // namespace casimir::numerics
