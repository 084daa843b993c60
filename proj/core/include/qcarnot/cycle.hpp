#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qcarnot/driving.hpp"
#include "qcarnot/quantum_state.hpp"

namespace qcarnot {

// Inputs of one six-stroke cycle. nu_c and nu_a follow from the scale-invariance
// condition and are never supplied directly.
struct CycleParams {
  double nu_b = 3.6;     // kHz, end of hot isotherm
  double nu_d = 2.0;     // kHz, end of cold isotherm
  double t_cold = 6.6;   // peV
  double t_hot = 16.5;   // peV
  double tau = 1.0;      // ms, duration of each unitary stroke
  double tol = kDefaultTolerance;

  double nu_c() const { return (t_cold / t_hot) * nu_b; }
  double nu_a() const { return (t_hot / t_cold) * nu_d; }
  double eta_carnot() const { return 1.0 - t_cold / t_hot; }

  // Throws DomainError unless T_H > T_L > 0, frequencies and tau are positive
  // and 0 < tol < 1.
  void validate() const;
};

// Labels follow the corner names A, B, C', C, D, A'.
enum class Stroke { AB, BCp, CpC, CD, DAp, ApA };
enum class Axis { x, y };
enum class Mode { engine, non_engine };

std::string_view to_string(Stroke stroke);
std::string_view to_string(Mode mode);

// Field Hamiltonian -(h nu / 2) sigma_axis.
QubitOperator field_hamiltonian(double nu_khz, Axis axis);

// Heat q is absorbed by the spin (q > 0 means into the spin); w = dU - q is the
// work done on the spin during the stroke.
struct StrokeRecord {
  Stroke label = Stroke::AB;
  double q = 0.0;
  double w = 0.0;
  DensityMatrix state_in;
  DensityMatrix state_out;
  QubitOperator h_in;
  QubitOperator h_out;

  double energy_in() const { return mean_energy(h_in, state_in); }
  double energy_out() const { return mean_energy(h_out, state_out); }
  double delta_u() const { return energy_out() - energy_in(); }
};

struct CycleReport {
  CycleParams params;
  // Ordered AB, BCp, CpC, CD, DAp, ApA.
  std::array<StrokeRecord, 6> strokes;

  double q_in = 0.0;   // heat from the hot bath: q(ApA) + q(AB)
  double q_out = 0.0;  // heat to the cold bath: q(CpC) + q(CD)
  double work = 0.0;   // extracted work q_in + q_out
  std::optional<double> eta;  // 1 + q_out/q_in, only when q_in > 0
  double eta_carnot = 0.0;
  std::optional<double> lag;  // only when q_in > 0

  double fric_comp = 0.0;  // peV, T_L * srel_c
  double fric_exp = 0.0;   // peV, T_H * srel_a
  double srel_c = 0.0;     // S(rho_C' || rho_C), nats
  double srel_a = 0.0;     // S(rho_A' || rho_A), nats
  double coh_c = 0.0;
  double pop_c = 0.0;
  double coh_a = 0.0;
  double pop_a = 0.0;
  Mode mode = Mode::non_engine;

  std::uint64_t steps_comp = 0;
  std::uint64_t steps_exp = 0;

  const StrokeRecord& stroke(Stroke label) const {
    return strokes[static_cast<std::size_t>(label)];
  }
  StrokeRecord& stroke(Stroke label) { return strokes[static_cast<std::size_t>(label)]; }
};

struct FrictionWork {
  double fric_comp = 0.0;
  double fric_exp = 0.0;
};

struct FrictionSplit {
  double coh_c = 0.0;
  double pop_c = 0.0;
  double coh_a = 0.0;
  double pop_a = 0.0;
};

// Tolerance (peV) for T * S(rho'||rho) == -q_relax.
inline constexpr double kFrictionIdentityTolerance = 1e-8;

// Quasi-static isotherm: endpoints are Gibbs states of -(h nu/2) sigma_axis at T
// and q = T * (S_end - S_start).
StrokeRecord run_isothermal(double temperature, double nu_start, double nu_end, Axis axis,
                            Stroke label = Stroke::AB);

// Thermally isolated driven stroke. q = 0, w = dU.
StrokeRecord run_adiabatic(const HamiltonianSchedule& schedule, const DensityMatrix& rho0,
                           double tol = kDefaultTolerance,
                           std::uint64_t* steps_used = nullptr);

// Fixed-Hamiltonian thermalization: rho' snaps to gibbs_state(H, T).
StrokeRecord run_relaxation(const DensityMatrix& rho_prime, const QubitOperator& hamiltonian,
                            double temperature, Stroke label = Stroke::CpC);

// Executes A -> B -> C' -> C -> D -> A' -> A and fills every report field.
CycleReport run_cycle(const CycleParams& params);

// Both sides of the friction identity; throws ConsistencyError if
// T * S(rho'||rho) and -q_relax differ by more than kFrictionIdentityTolerance.
FrictionWork friction(const CycleReport& report);

// T_L (srel_c + srel_a) / q_in; nullopt when q_in <= 0.
std::optional<double> efficiency_lag(const CycleReport& report);

// Coherence / population-mismatch split of both relaxation relative entropies.
FrictionSplit decompose_friction(const CycleReport& report);

struct ScaleInvarianceResult {
  bool pass = false;
  std::optional<std::size_t> failing_index;
  std::string reason;
};

// Every gaps_hot[k] / gaps_cold[k] must equal T_H / T_L within tol.
ScaleInvarianceResult check_scale_invariance(std::span<const double> gaps_hot,
                                             std::span<const double> gaps_cold, double t_hot,
                                             double t_cold, double tol = 1e-9);

}  // namespace qcarnot
