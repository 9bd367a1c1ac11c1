#include "ksphere/config.hpp"

#include <cstdlib>
#include <string>

#include "ksphere/errors.hpp"

namespace ksphere {

std::string to_string(PhaseConvention p) {
  return p == PhaseConvention::PerFactorI ? "per-factor-i" : "single-i";
}

PhaseConvention phase_from_string(const std::string& s) {
  if (s == "per-factor-i" || s == "per-factor") return PhaseConvention::PerFactorI;
  if (s == "single-i" || s == "single") return PhaseConvention::SingleI;
  throw DomainError("unknown phase convention '" + s + "'");
}

void Config::validate() const {
  if (k_cap < 3 || k_cap % 2 == 0) throw DomainError("k_cap must be odd and at least 3");
  if (winding1_tolerance <= 0 || chern2_tolerance <= 0 || winding3_tolerance <= 0)
    throw DomainError("tolerances must be positive");
}

Config Config::from_env() {
  Config c;
  if (const char* cap = std::getenv("KSPHERE_KCAP"); cap != nullptr && *cap != '\0') {
    try {
      std::size_t used = 0;
      c.k_cap = std::stoi(cap, &used);
      if (used != std::string(cap).size()) throw std::invalid_argument(cap);
    } catch (const std::logic_error&) {
      throw DomainError(std::string("KSPHERE_KCAP is not an integer: ") + cap);
    }
  }
  c.validate();
  return c;
}

}  // namespace ksphere
