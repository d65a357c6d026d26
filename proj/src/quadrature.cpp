#include <cmath>

#include "casimir/numerics.hpp"

namespace casimir::numerics {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw ConfigurationError("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) throw ConfigurationError("max_subdivisions must be at least 1");
}

QuadratureResult<double> integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                          const QuadratureConfig& cfg) {
  if (!(lo < hi)) throw DomainError("integrate_finite: require lo < hi");
  const double pts[] = {lo, hi};
  return adaptive_integrate(f, pts, cfg);
}

QuadratureResult<double> integrate_semi_infinite_decay(const std::function<double(double)>& f,
                                                       double decay_scale,
                                                       const QuadratureConfig& cfg) {
  return integrate_semi_infinite(f, decay_scale, cfg);
}

}  // namespace casimir::numerics
