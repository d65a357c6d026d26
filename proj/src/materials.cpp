#include "casimir/materials.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace detail {
extern const std::string_view kEmbeddedCatalog;
}

DrudeMaterial DrudeMaterial::make(double wp, double gamma, std::optional<double> rho) {
  if (!(wp > 0.0) || !std::isfinite(wp)) {
    throw DomainError("plasma frequency must be positive and finite");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("damping must be non-negative and finite");
  }
  if (!(12.0 * wp * wp - 9.0 * gamma * gamma > 0.0)) {
    throw DomainError("overdamped material: require gamma < 2*omega_p/sqrt(3) (gamma=" +
                      std::to_string(gamma) + ", omega_p=" + std::to_string(wp) + ")");
  }
  if (rho && !(*rho >= 0.0)) {
    throw DomainError("density must be non-negative");
  }
  return DrudeMaterial(wp, gamma, rho);
}

DrudeMaterial DrudeMaterial::with_damping(double damping_ev) const {
  return make(plasma_frequency_, damping_ev, density_);
}

Sphere::Sphere(double radius_natural, DrudeMaterial material)
    : radius_(radius_natural), material_(material) {
  if (!(radius_natural > 0.0) || !std::isfinite(radius_natural)) {
    throw DomainError("sphere radius must be positive");
  }
}

Sphere Sphere::from_nm(double radius_nm, DrudeMaterial material) {
  if (!(radius_nm > 0.0)) throw DomainError("sphere radius must be positive");
  return Sphere(units::length_nm_to_natural(radius_nm), material);
}

std::complex<double> epsilon(const DrudeMaterial& m, double omega) {
  if (!(omega > 0.0)) throw DomainError("epsilon: frequency must be positive");
  const double wp = m.plasma_frequency();
  return 1.0 - wp * wp / (omega * std::complex<double>(omega, m.damping()));
}

std::complex<double> polarizability(const Sphere& s, double omega) {
  const auto eps = epsilon(s.material(), omega);
  if (eps == std::complex<double>(-2.0, 0.0)) {
    throw PoleError("polarizability: epsilon = -2 exactly (Froehlich pole)");
  }
  return s.volume_factor() * (eps - 1.0) / (eps + 2.0);
}

double alpha1_real(const Sphere& s, double omega) {
  const double wp2 = s.material().plasma_frequency() * s.material().plasma_frequency();
  const double g = s.material().damping();
  const double w2 = omega * omega;
  const double d = 3.0 * w2 - wp2;
  return s.volume_factor() * wp2 * (wp2 - 3.0 * w2) / (d * d + 9.0 * w2 * g * g);
}

std::complex<double> alpha1_analytic(const Sphere& s, std::complex<double> omega) {
  const double wp2 = s.material().plasma_frequency() * s.material().plasma_frequency();
  const double g = s.material().damping();
  const auto w2 = omega * omega;
  const auto d = 3.0 * w2 - wp2;
  return s.volume_factor() * wp2 * (wp2 - 3.0 * w2) / (d * d + 9.0 * w2 * g * g);
}

ResonancePole resonance(const DrudeMaterial& m) {
  const double wp = m.plasma_frequency();
  const double g = m.damping();
  const double disc = 12.0 * wp * wp - 9.0 * g * g;
  if (!(disc > 0.0)) throw DomainError("resonance: overdamped material");
  return {std::sqrt(disc) / 6.0, 0.5 * g};
}

MaterialCatalog MaterialCatalog::parse(std::string_view json_text) {
  MaterialCatalog cat;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
    cat.version_ = doc.at("catalog_version").get<int>();
    for (const auto& rec : doc.at("materials")) {
      std::optional<double> rho;
      if (rec.contains("rho_g_cm3") && !rec["rho_g_cm3"].is_null()) {
        rho = rec["rho_g_cm3"].get<double>();
      }
      CatalogEntry e{rec.at("name").get<std::string>(),
                     DrudeMaterial::make(rec.at("omega_p_eV").get<double>(),
                                         rec.at("gamma_eV").get<double>(), rho),
                     rec.value("note", std::string{}), std::nullopt};
      if (rec.contains("advisory")) e.advisory = rec["advisory"].get<std::string>();
      cat.entries_.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigurationError(std::string("malformed material catalog: ") + ex.what());
  }
  return cat;
}

MaterialCatalog MaterialCatalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open material catalog: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const MaterialCatalog& MaterialCatalog::builtin() {
  static const MaterialCatalog cat = parse(detail::kEmbeddedCatalog);
  return cat;
}

std::vector<std::string> MaterialCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

const CatalogEntry& MaterialCatalog::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  std::string list;
  for (const auto& e : entries_) list += (list.empty() ? "" : ",") + e.name;
  throw LookupError("unknown material '" + std::string(name) + "'; available: {" + list + "}");
}

DrudeMaterial preset(std::string_view name) { return MaterialCatalog::builtin().find(name).material; }

}  // namespace casimir
