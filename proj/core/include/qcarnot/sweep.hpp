#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcarnot/cycle.hpp"

namespace qcarnot {

// Source temperatures (peV) of the reference parameter set.
inline constexpr std::array<double, 4> kDefaultHotTemperatures{16.5, 21.5, 26.5, 33.5};
inline constexpr double kDefaultTauMin = 0.01;
inline constexpr double kDefaultTauMax = 2.0;
inline constexpr std::size_t kDefaultTauCount = 64;

// count log-spaced points from lo to hi inclusive; count == 1 yields {lo}.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct SweepSpec {
  std::vector<double> tau_grid;
  std::vector<double> temps_hot;
  // tau and t_hot of base are overridden per grid point.
  CycleParams base;
  // Empty means standard output.
  std::string output_path;

  static SweepSpec defaults();
  // Throws DomainError on empty grids or values outside the CycleParams domain.
  void validate() const;
};

struct SweepPoint {
  double tau = 0.0;
  double t_hot = 0.0;
};

// Evaluation order of the grid: T_H ascending, then tau ascending.
std::vector<SweepPoint> sweep_points(const SweepSpec& spec);

// Runs every grid point; independent points may run on worker threads, but the
// result order always matches sweep_points(). threads == 0 picks the hardware
// concurrency.
std::vector<CycleReport> run_sweep(const SweepSpec& spec, unsigned threads = 0);

inline constexpr std::array<std::string_view, 20> kCsvColumns{
    "tau_ms", "t_hot_pev", "t_cold_pev", "q_ab",  "q_cpc",      "q_cd",   "q_apa",
    "q_in",   "q_out",     "work",       "eta",   "eta_carnot", "lag",    "srel_c",
    "srel_a", "coh_c",     "pop_c",      "coh_a", "pop_a",      "mode"};

std::string csv_header();
// One data row (no trailing newline). Reals use 12 significant digits;
// undefined eta/lag are empty fields.
std::string csv_row(const CycleReport& report);
// Header plus rows, LF line endings.
void write_csv(std::ostream& out, const std::vector<CycleReport>& reports);

// Formats a real with 12 significant digits ("%.12g").
std::string format_real(double value);

}  // namespace qcarnot
