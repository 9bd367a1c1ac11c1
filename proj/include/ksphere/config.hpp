#pragma once

#include <cstdint>
#include <string>

namespace ksphere {

enum class PhaseConvention {
  PerFactorI,  // ∏ (i·Γ_j): one factor of i per generator in the product
  SingleI,     // i · ∏ Γ_j
};

std::string to_string(PhaseConvention p);
PhaseConvention phase_from_string(const std::string& s);

inline constexpr int kDefaultKCap = 15;

/// Runtime knobs shared by the library entry points and the CLI.
struct Config {
  int k_cap = kDefaultKCap;
  PhaseConvention phase = PhaseConvention::PerFactorI;
  int winding1_points = 10000;
  int chern2_theta = 400;
  int chern2_phi = 800;
  int winding3_points = 48;
  double winding1_tolerance = 1e-6;
  double chern2_tolerance = 1e-3;
  double winding3_tolerance = 1e-2;
  std::uint64_t seed = 20240607;
  bool json = false;

  // Throws DomainError when k_cap is even or below 3, or a tolerance is not positive.
  void validate() const;

  // Defaults, with KSPHERE_KCAP applied when set.
  static Config from_env();
};

}  // namespace ksphere
