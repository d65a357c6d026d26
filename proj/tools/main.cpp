// casimir: force curves, spectra, equilibria and levitation tables for a
// Drude sphere in front of a reflecting wall.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "casimir/equilibria.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/mirror_force.hpp"
#include "casimir/parallel.hpp"
#include "casimir/units.hpp"
#include "casimir/validation.hpp"
#include "casimir/version.hpp"
#include "output.hpp"

namespace {

using nlohmann::ordered_json;
namespace units = casimir::units;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::optional<int> n;
};

Range parse_range(const std::string& text, bool need_count) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("range '" + text + "' must look like lo:hi or lo:hi:n");
  Range r;
  try {
    std::size_t used = 0;
    r.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("trailing");
    r.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    if (parts.size() == 3) {
      r.n = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::logic_error&) {
    throw UsageError("range '" + text + "' is not numeric");
  }
  if (!(r.lo > 0.0) || !(r.hi > r.lo)) throw UsageError("range '" + text + "' must be positive and increasing");
  if (need_count && !r.n) throw UsageError("range '" + text + "' needs a point count (lo:hi:n)");
  if (r.n && *r.n < 2) throw UsageError("range '" + text + "' needs at least two points");
  return r;
}

std::vector<double> linspace(const Range& r) {
  std::vector<double> v(*r.n);
  for (int i = 0; i < *r.n; ++i) v[i] = r.lo + (r.hi - r.lo) * i / (*r.n - 1);
  v.back() = r.hi;
  return v;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

struct MaterialArgs {
  std::string name;
  std::optional<double> wp, gamma, gamma_ratio, rho;

  void attach(CLI::App* cmd) {
    cmd->add_option("--material", name, "Catalog material (Li, Na, K, Al)");
    cmd->add_option("--wp", wp, "Plasma frequency in eV (inline material)");
    cmd->add_option("--gamma", gamma, "Damping in eV (inline material)");
    cmd->add_option("--gamma-ratio", gamma_ratio, "Damping as a fraction of the plasma frequency");
    cmd->add_option("--rho", rho, "Density in g/cm^3 (inline material)");
  }

  std::pair<std::string, casimir::DrudeMaterial> resolve() const {
    if (!name.empty()) {
      if (wp || gamma || rho) throw UsageError("give either --material or an inline material, not both");
      auto m = casimir::preset(name);
      if (gamma_ratio) m = m.with_damping(*gamma_ratio * m.plasma_frequency());
      return {name, m};
    }
    if (gamma && gamma_ratio) throw UsageError("--gamma and --gamma-ratio are mutually exclusive");
    if (!wp && !gamma_ratio) throw UsageError("no material: use --material NAME, --wp/--gamma, or --gamma-ratio");
    const double plasma = wp.value_or(1.0);
    if (!gamma && !gamma_ratio) throw UsageError("inline material needs --gamma or --gamma-ratio");
    const double damping = gamma ? *gamma : *gamma_ratio * plasma;
    return {"inline", casimir::DrudeMaterial::make(plasma, damping, rho)};
  }
};

struct OutputArgs {
  std::string format = "csv";
  std::string path;
  bool log_x = false;
  bool log_y = false;

  void attach(CLI::App* cmd, bool allow_svg) {
    std::vector<std::string> formats{"csv", "json"};
    if (allow_svg) formats.push_back("svg");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("-o,--output", path, "Output file (default: stdout)");
    if (allow_svg) {
      cmd->add_flag("--log-x", log_x, "Logarithmic x axis in SVG output");
      cmd->add_flag("--log-y", log_y, "Logarithmic |y| axis in SVG output");
    }
  }

  void emit(const cli::Table& t, const ordered_json& meta, const cli::PlotOptions& plot) const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw UsageError("cannot open " + path + " for writing");
    }
    std::ostream& os = path.empty() ? std::cout : file;
    if (format == "csv") {
      cli::write_csv(os, t);
    } else if (format == "json") {
      cli::write_json(os, t, meta);
    } else {
      cli::PlotOptions p = plot;
      p.log_x = log_x;
      p.log_y = log_y;
      cli::write_svg(os, t, p);
    }
  }
};

ordered_json constants_json() {
  const auto& k = units::kCodata2018;
  return {{"hbar_c_eV_um", k.hbar_c_ev_um},
          {"joule_per_eV", k.joule_per_ev},
          {"kg_to_eV", k.kg_to_ev},
          {"g_accel_m_s2", k.g_accel},
          {"boltzmann_eV_per_K", k.boltzmann_ev_per_k},
          {"newtons_per_eV2", units::force_natural_to_newtons(1.0)},
          {"um_per_inverse_eV", units::length_natural_to_um(1.0)}};
}

ordered_json base_metadata(const std::string& command) {
  return {{"tool", "casimir"}, {"version", casimir::kVersion}, {"command", command}, {"constants", constants_json()}};
}

ordered_json material_json(const std::string& name, const casimir::DrudeMaterial& m) {
  ordered_json j{{"name", name}, {"omega_p_eV", m.plasma_frequency()}, {"gamma_eV", m.damping()}};
  j["rho_g_cm3"] = m.density() ? ordered_json(*m.density()) : ordered_json(nullptr);
  j["resonance_eV"] = casimir::resonance(m).omega;
  return j;
}

cli::Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::string();
}

// ---------------------------------------------------------------------------

int cmd_material(const std::string& name, const OutputArgs& out) {
  const auto& catalog = casimir::MaterialCatalog::builtin();
  cli::Table t;
  t.columns = {"name", "rho_g_cm3", "omega_p_eV", "gamma_eV", "resonance_eV", "spacing_um", "note", "advisory"};
  for (const auto& e : catalog.entries()) {
    if (!name.empty() && e.name != name) continue;
    const auto& m = e.material;
    const double omega = casimir::resonance(m).omega;
    t.rows.push_back({e.name, m.density() ? cli::Cell(*m.density()) : cli::Cell(std::string()), m.plasma_frequency(),
                      m.damping(), omega, units::length_natural_to_um(std::numbers::pi / omega), e.note,
                      e.advisory.value_or("")});
  }
  if (!name.empty() && t.rows.empty()) catalog.find(name);  // throws with the list of names
  auto meta = base_metadata("material");
  meta["catalog_version"] = catalog.version();
  out.emit(t, meta, {});
  return kExitOk;
}

int cmd_force(const MaterialArgs& mat, double radius_nm, const std::string& z_natural, const std::string& z_um,
              const OutputArgs& out) {
  const auto [name, m] = mat.resolve();
  if (z_natural.empty() == z_um.empty()) throw UsageError("give exactly one of --z-natural or --z-um");
  const double wp = m.plasma_frequency();
  std::vector<double> zs;
  if (!z_natural.empty()) {
    for (double x : linspace(parse_range(z_natural, true))) zs.push_back(x / wp);
  } else {
    for (double x : linspace(parse_range(z_um, true))) zs.push_back(units::length_um_to_natural(x).value());
  }
  const auto sphere = casimir::Sphere::from_nm(radius_nm, m);
  const auto rows = casimir::parallel_map(
      zs.size(), [&](std::size_t i) { return casimir::mirror::total_force(sphere, zs[i]); }, thread_count());

  const double unit = std::pow(wp, 5) * sphere.volume_factor();
  cli::Table t;
  t.columns = {"z_natural", "z_um", "J", "P", "F_natural", "F_newtons"};
  for (const auto& r : rows) {
    t.rows.push_back({r.z * wp, units::length_natural_to_um(r.z), r.j / unit, r.p / unit, r.total / unit,
                      units::force_natural_to_newtons(r.total)});
  }
  auto meta = base_metadata("force");
  meta["material"] = material_json(name, m);
  meta["radius_nm"] = radius_nm;
  meta["columns"] = {{"z_natural", "separation in units of 1/omega_p"},
                     {"z_um", "separation in micrometres"},
                     {"J", "imaginary-frequency part, units of omega_p^5 a^3"},
                     {"P", "pole part, units of omega_p^5 a^3"},
                     {"F_natural", "J + P, units of omega_p^5 a^3"},
                     {"F_newtons", "J + P for the given radius, newtons (positive = away from wall)"}};
  const auto q = casimir::mirror::default_quadrature();
  meta["tolerances"] = {{"rel_tol", q.rel_tol}, {"small_separation_switch_z_omega_p", casimir::mirror::kSmallSeparation}};
  if (sphere.outside_dipole_regime()) meta["advisories"] = {"radius times plasma frequency >= 1: dipole approximation not justified"};
  out.emit(t, meta, {"Force on a sphere near a perfect mirror", "z_natural", {"J", "P", "F_natural"}});
  return kExitOk;
}

int cmd_spectrum(std::optional<double> z_nat, std::optional<double> z_um, const std::string& omega_range,
                 std::optional<double> beta_opt, const OutputArgs& out) {
  if (z_nat.has_value() == z_um.has_value()) throw UsageError("give exactly one of --z or --z-um");
  const double z = z_nat ? *z_nat : units::length_um_to_natural(*z_um).value();
  if (!(z > 0.0)) throw UsageError("separation must be positive");
  const auto omegas = linspace(parse_range(omega_range, true));
  const double beta = beta_opt.value_or(0.01 * z);
  if (!(beta > 0.0)) throw UsageError("--beta must be positive");
  std::vector<double> grid{0.0};
  grid.insert(grid.end(), omegas.begin(), omegas.end());
  const auto cumulative = casimir::mirror::cumulative_spectrum(z, beta, grid);

  cli::Table t;
  t.columns = {"omega_eV", "sigma", "cumulative"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.rows.push_back({grid[i], casimir::mirror::spectrum_sigma(z, grid[i]), cumulative[i]});
  }
  const auto regulated = casimir::mirror::regulated_spectrum_integral(z);
  auto meta = base_metadata("spectrum");
  meta["z_natural_inverse_eV"] = z;
  meta["z_um"] = units::length_natural_to_um(z);
  meta["beta_inverse_eV"] = beta;
  meta["regulated_total"] = regulated.value;
  meta["regulated_residual"] = regulated.residual;
  meta["expected_total"] = -1.5 / z;
  meta["columns"] = {{"omega_eV", "frequency, eV"},
                     {"sigma", "(2 w^2 z^2 - 1) sin 2wz + 2wz cos 2wz"},
                     {"cumulative", "integral of sigma exp(-beta w) from 0 to omega"}};
  out.emit(t, meta, {"Vacuum spectrum at fixed separation", "omega_eV", {"sigma", "cumulative"}});
  return kExitOk;
}

int cmd_equilibria(const MaterialArgs& mat, double radius_nm, const std::string& z_natural, const std::string& z_um,
                   int grid_n, bool stable_only, const OutputArgs& out) {
  const auto [name, m] = mat.resolve();
  if (z_natural.empty() == z_um.empty()) throw UsageError("give exactly one of --z-natural or --z-um");
  const double wp = m.plasma_frequency();
  double lo, hi;
  if (!z_natural.empty()) {
    const auto r = parse_range(z_natural, false);
    lo = r.lo / wp;
    hi = r.hi / wp;
  } else {
    const auto r = parse_range(z_um, false);
    lo = units::length_um_to_natural(r.lo).value();
    hi = units::length_um_to_natural(r.hi).value();
  }
  const auto sphere = casimir::Sphere::from_nm(radius_nm, m);
  casimir::equilibria::SearchOptions opt;
  opt.grid_n = grid_n;
  opt.threads = thread_count();
  const auto points = casimir::equilibria::find_equilibria(sphere, lo, hi, opt);

  cli::Table t;
  t.columns = {"z_natural", "z_um", "stable", "energy_eV", "well_depth_eV", "well_depth_K", "step_to_next_eV"};
  for (const auto& p : points) {
    if (stable_only && !p.stable) continue;
    t.rows.push_back({p.z * wp, p.z_um, p.stable, p.energy, optional_cell(p.well_depth),
                      optional_cell(p.temperature_equivalent), optional_cell(p.step_to_next_stable)});
  }
  auto meta = base_metadata("equilibria");
  meta["material"] = material_json(name, m);
  meta["radius_nm"] = radius_nm;
  meta["expected_spacing_um"] = units::length_natural_to_um(std::numbers::pi / casimir::resonance(m).omega);
  meta["columns"] = {{"z_natural", "zero of F in units of 1/omega_p"},
                     {"stable", "slope of F negative"},
                     {"energy_eV", "interaction energy V at the point"},
                     {"well_depth_eV", "barrier toward the wall (or away from it when none lies in range)"},
                     {"well_depth_K", "well depth over k_B"},
                     {"step_to_next_eV", "V(next stable point) - V(this point)"}};
  out.emit(t, meta, {});
  return kExitOk;
}

int cmd_levitate(const std::string& preset, const MaterialArgs& mat, double radius_nm, const OutputArgs& out) {
  std::vector<std::pair<std::string, casimir::DrudeMaterial>> materials;
  const bool inline_given = !mat.name.empty() || mat.wp || mat.gamma || mat.gamma_ratio;
  if (inline_given) {
    if (!preset.empty()) throw UsageError("give either --preset or a material");
    materials.push_back(mat.resolve());
  } else if (preset.empty() || preset == "all") {
    for (const char* n : {"Li", "Na", "K"}) materials.emplace_back(n, casimir::preset(n));
  } else {
    materials.emplace_back(preset, casimir::preset(preset));
  }
  for (const auto& [n, m] : materials) {
    if (!m.density() || !(*m.density() > 0.0)) throw UsageError("levitation needs a density for " + n + " (--rho)");
  }

  cli::Table t;
  t.columns = {"material", "rho_g_cm3", "omega_p_eV", "gamma_eV", "spacing_um", "z_c_um", "z_c_rounded_um"};
  auto meta = base_metadata("levitate");
  meta["radius_nm"] = radius_nm;
  ordered_json advisories = ordered_json::array();
  for (const auto& [n, m] : materials) {
    const auto r = casimir::equilibria::levitation_report(n, m, radius_nm, 0, thread_count());
    t.rows.push_back({r.material, r.density, r.plasma_frequency, r.damping, r.spacing_um, optional_cell(r.z_c_um),
                      optional_cell(r.z_c_rounded_um)});
    meta["ratio_coefficient"] = r.coefficient;
    meta["ratio_exponent"] = r.exponent;
    for (const auto& a : r.advisories) advisories.push_back(n + ": " + a);
  }
  meta["ratio_form"] = "coefficient * (omega_p/eV)^4 * (um/z) * (g cm^-3/rho) * exp(-exponent * (gamma/eV) * (z/um))";
  meta["advisories"] = advisories;
  out.emit(t, meta, {});
  return kExitOk;
}

int cmd_validate(const std::string& path) {
  const auto report = casimir::validation::run_validation(units::kCodata2018, thread_count());
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance},
                      {"tolerance_kind", c.absolute ? "absolute" : "relative"},
                      {"pass", c.pass}});
  }
  ordered_json doc{{"tool", "casimir"}, {"version", casimir::kVersion}, {"all_pass", report.all_pass()}, {"checks", checks}};
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path + " for writing");
    f << doc.dump(2) << "\n";
  }
  return report.all_pass() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir force between a small Drude sphere and a reflecting wall"};
  app.set_version_flag("--version", std::string(casimir::kVersion));
  app.require_subcommand(1);

  std::string material_name;
  OutputArgs material_out;
  auto* material = app.add_subcommand("material", "List the material catalog");
  material->add_option("--name", material_name, "Show a single entry");
  material_out.attach(material, false);

  MaterialArgs force_mat;
  double force_radius = 50.0;
  std::string force_z_nat, force_z_um;
  OutputArgs force_out;
  auto* force = app.add_subcommand("force", "Force curve J, P and F = J + P against separation");
  force_mat.attach(force);
  force->add_option("--radius-nm", force_radius, "Sphere radius in nm")->check(CLI::PositiveNumber);
  force->add_option("--z-natural", force_z_nat, "lo:hi:n in units of 1/omega_p");
  force->add_option("--z-um", force_z_um, "lo:hi:n in micrometres");
  force_out.attach(force, true);

  std::optional<double> spec_z, spec_z_um, spec_beta;
  std::string spec_omega;
  OutputArgs spec_out;
  auto* spectrum = app.add_subcommand("spectrum", "Vacuum-fluctuation spectrum sigma(omega) at fixed separation");
  spectrum->add_option("--z", spec_z, "Separation in 1/eV");
  spectrum->add_option("--z-um", spec_z_um, "Separation in micrometres");
  spectrum->add_option("--omega", spec_omega, "lo:hi:n frequency grid in eV")->required();
  spectrum->add_option("--beta", spec_beta, "Convergence factor for the cumulative column, 1/eV (default 0.01 z)");
  spec_out.attach(spectrum, true);

  MaterialArgs eq_mat;
  double eq_radius = 50.0;
  std::string eq_z_nat, eq_z_um;
  int eq_grid = 0;
  bool eq_stable = false;
  OutputArgs eq_out;
  auto* equilibria = app.add_subcommand("equilibria", "Zeros of the force, stability and well depths");
  eq_mat.attach(equilibria);
  equilibria->add_option("--radius-nm", eq_radius, "Sphere radius in nm")->check(CLI::PositiveNumber);
  equilibria->add_option("--z-natural", eq_z_nat, "lo:hi in units of 1/omega_p");
  equilibria->add_option("--z-um", eq_z_um, "lo:hi in micrometres");
  equilibria->add_option("--grid-n", eq_grid, "Scan grid size (default: 8 points per oscillation)");
  equilibria->add_flag("--stable-only", eq_stable, "Only list stable points");
  eq_out.attach(equilibria, false);

  std::string lev_preset;
  MaterialArgs lev_mat;
  double lev_radius = 50.0;
  OutputArgs lev_out;
  auto* levitate = app.add_subcommand("levitate", "Equilibrium spacing and maximum levitation height");
  levitate->add_option("--preset", lev_preset, "Catalog material or 'all' (default)");
  lev_mat.attach(levitate);
  levitate->add_option("--radius-nm", lev_radius, "Sphere radius in nm")->check(CLI::PositiveNumber);
  lev_out.attach(levitate, false);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Run the built-in consistency checks and print a JSON report");
  validate->add_option("-o,--output", validate_path, "Report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (material->parsed()) return cmd_material(material_name, material_out);
    if (force->parsed()) return cmd_force(force_mat, force_radius, force_z_nat, force_z_um, force_out);
    if (spectrum->parsed()) return cmd_spectrum(spec_z, spec_z_um, spec_omega, spec_beta, spec_out);
    if (equilibria->parsed()) {
      return cmd_equilibria(eq_mat, eq_radius, eq_z_nat, eq_z_um, eq_grid, eq_stable, eq_out);
    }
    if (levitate->parsed()) return cmd_levitate(lev_preset, lev_mat, lev_radius, lev_out);
    if (validate->parsed()) return cmd_validate(validate_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const casimir::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const casimir::ExtrapolationError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    // Domain, configuration, lookup and range errors all describe bad input.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
