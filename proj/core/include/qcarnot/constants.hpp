#pragma once

#include <numbers>

namespace qcarnot {

// Unit system: energies and temperatures in peV (k_B = 1), frequencies in kHz,
// times in ms. With these units h * nu is an energy in peV.
struct PhysicalConstants {
  // Planck constant in peV * ms.
  static constexpr double h = 4.135667696;
  static constexpr double hbar = h / (2.0 * std::numbers::pi);
  static constexpr double kB = 1.0;
};

inline constexpr double kPlanck = PhysicalConstants::h;
inline constexpr double kHbar = PhysicalConstants::hbar;

// Level splitting h * nu for a frequency in kHz.
constexpr double gap_energy(double nu_khz) { return kPlanck * nu_khz; }

}  // namespace qcarnot
