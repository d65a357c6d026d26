#include "casimir/dipole.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::dipole {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 dipole_force(const FieldSample& fs, const DipoleState& ds) {
  const Vec3 pxb = cross(ds.p_dot, fs.b0);
  Vec3 f{};
  for (int i = 0; i < 3; ++i) {
    double along = 0.0;
    double transverse = 0.0;
    for (int j = 0; j < 3; ++j) {
      along += ds.p[j] * fs.grad_e[i][j];
      transverse += ds.p[j] * fs.grad_e[j][i];
    }
    f[i] = (2.0 / 3.0) * along + (1.0 / 3.0) * transverse + (2.0 / 3.0) * pxb[i];
  }
  return f;
}

Vec3 gradient_of_field_squared(const FieldSample& fs) {
  Vec3 g{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g[i] += 2.0 * fs.e0[j] * fs.grad_e[j][i];
  }
  return g;
}

PlaneWave::PlaneWave(double amplitude, Vec3 wavevector, Vec3 polarization)
    : amplitude_(amplitude), k_(wavevector), pol_(polarization) {
  const double kn = norm(k_);
  if (!(kn > 0.0) || !std::isfinite(kn)) throw DomainError("plane wave: |k| must be positive");
  if (std::abs(norm(pol_) - 1.0) > 1e-12) throw DomainError("plane wave: polarization must be a unit vector");
  if (std::abs(dot(pol_, k_)) > 1e-12 * kn) {
    throw DomainError("plane wave: polarization must be transverse to k");
  }
  if (!std::isfinite(amplitude_)) throw DomainError("plane wave: amplitude must be finite");
}

double PlaneWave::frequency() const { return norm(k_); }

CVec3 PlaneWave::electric_phasor() const {
  CVec3 e;
  for (int i = 0; i < 3; ++i) e[i] = amplitude_ * pol_[i];
  return e;
}

CVec3 PlaneWave::magnetic_phasor() const {
  // B = k̂ × E in Gaussian units with c = 1.
  const double w = frequency();
  const Vec3 kh{k_[0] / w, k_[1] / w, k_[2] / w};
  const Vec3 b = cross(kh, pol_);
  CVec3 out;
  for (int i = 0; i < 3; ++i) out[i] = amplitude_ * b[i];
  return out;
}

Vec3 plane_wave_force(const PlaneWave& w, std::complex<double> alpha) {
  const double s = 0.5 * w.amplitude() * w.amplitude() * alpha.imag();
  const Vec3& k = w.wavevector();
  return {s * k[0], s * k[1], s * k[2]};
}

double absorbed_power(const PlaneWave& w, std::complex<double> alpha) {
  return 0.5 * w.frequency() * w.amplitude() * w.amplitude() * alpha.imag();
}

Vec3 cycle_averaged_plane_wave_force(const PlaneWave& w, std::complex<double> alpha) {
  using C = std::complex<double>;
  const CVec3 e = w.electric_phasor();
  const CVec3 b = w.magnetic_phasor();
  const Vec3& k = w.wavevector();
  const double omega = w.frequency();
  CVec3 p, p_dot;
  for (int i = 0; i < 3; ++i) {
    p[i] = alpha * e[i];
    p_dot[i] = C(0.0, -omega) * p[i];
  }
  // ⟨Re(X e^{−iωt}) Re(Y e^{−iωt})⟩ = Re(X Y*)/2.
  Vec3 f{};
  for (int i = 0; i < 3; ++i) {
    C along = 0.0;
    C transverse = 0.0;
    for (int j = 0; j < 3; ++j) {
      along += p[j] * std::conj(C(0.0, k[j]) * e[i]);
      transverse += p[j] * std::conj(C(0.0, k[i]) * e[j]);
    }
    const int a = (i + 1) % 3;
    const int c = (i + 2) % 3;
    const C pxb = p_dot[a] * std::conj(b[c]) - p_dot[c] * std::conj(b[a]);
    f[i] = 0.5 * ((2.0 / 3.0) * along + (1.0 / 3.0) * transverse + (2.0 / 3.0) * pxb).real();
  }
  return f;
}

}  // namespace casimir::dipole
