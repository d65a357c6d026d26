#include <boost/math/tools/toms748_solve.hpp>

#include "casimir/numerics.hpp"

namespace casimir::numerics {

namespace {

int slope_sign_at(const std::function<double(double)>& f, double x) {
  const double h = slope_step(x);
  const double d = f(x + h) - f(x - h);
  return (d > 0.0) - (d < 0.0);
}

}  // namespace

std::vector<Root> refine_sign_changes(const std::function<double(double)>& f,
                                      std::span<const double> grid, std::span<const double> values,
                                      const RootOptions& opts) {
  std::vector<Root> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double fa = values[i];
    if (fa == 0.0) {
      roots.push_back({grid[i], slope_sign_at(f, grid[i])});
      continue;
    }
    if (i + 1 == grid.size()) break;
    const double fb = values[i + 1];
    if (fb == 0.0 || (fa > 0.0) == (fb > 0.0)) continue;
    boost::uintmax_t iters = static_cast<boost::uintmax_t>(opts.max_iterations);
    const auto bracket = boost::math::tools::toms748_solve(
        f, grid[i], grid[i + 1], fa, fb, boost::math::tools::eps_tolerance<double>(opts.tolerance_bits),
        iters);
    const double fl = f(bracket.first);
    const double fr = f(bracket.second);
    const double x = std::abs(fl) <= std::abs(fr) ? bracket.first : bracket.second;
    // A flat central difference (step below resolution) falls back to the bracket.
    const int bracket_sign = fa < 0.0 ? 1 : -1;
    int s = slope_sign_at(f, x);
    if (s == 0) s = bracket_sign;
    roots.push_back({x, s});
  }
  return roots;
}

std::vector<Root> find_roots_bracketed(const std::function<double(double)>& f, double lo, double hi,
                                       int grid_n, const RootOptions& opts) {
  if (grid_n < 2) throw ConfigurationError("find_roots_bracketed: grid_n must be at least 2");
  if (!(lo < hi)) throw DomainError("find_roots_bracketed: require lo < hi");
  std::vector<double> grid(static_cast<std::size_t>(grid_n));
  std::vector<double> values(grid.size());
  for (int i = 0; i < grid_n; ++i) {
    grid[i] = (i == grid_n - 1) ? hi : lo + (hi - lo) * i / (grid_n - 1);
    values[i] = f(grid[i]);
  }
  return refine_sign_changes(f, grid, values, opts);
}

}  // namespace casimir::numerics
