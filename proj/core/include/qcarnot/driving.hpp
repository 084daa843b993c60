#pragma once

#include <cstdint>
#include <string_view>

#include "qcarnot/quantum_state.hpp"

namespace qcarnot {

enum class StrokeKind { compression, expansion };

std::string_view to_string(StrokeKind kind);

// Driving protocol of one unitary stroke over [0, tau]:
//
//   H(t) = -(h nu(t) / 2) [cos(pi t / 2 tau) s_from + sin(pi t / 2 tau) s_to]
//   nu(t) = nu_start (1 - t/tau) + nu_end t/tau
//
// where compression turns the field from s_y to s_x and expansion from s_x to s_y.
class HamiltonianSchedule {
 public:
  HamiltonianSchedule(StrokeKind kind, double nu_start, double nu_end, double tau);

  static HamiltonianSchedule compression(double nu_start, double nu_end, double tau) {
    return {StrokeKind::compression, nu_start, nu_end, tau};
  }
  static HamiltonianSchedule expansion(double nu_start, double nu_end, double tau) {
    return {StrokeKind::expansion, nu_start, nu_end, tau};
  }

  StrokeKind kind() const { return kind_; }
  double nu_start() const { return nu_start_; }
  double nu_end() const { return nu_end_; }
  double tau() const { return tau_; }

  // Instantaneous frequency nu(t) in kHz.
  double frequency(double t) const;
  // Instantaneous Hamiltonian; t must lie in [0, tau]. Endpoints are exact.
  QubitOperator evaluate(double t) const;

  QubitOperator start_hamiltonian() const { return evaluate(0.0); }
  QubitOperator end_hamiltonian() const { return evaluate(tau_); }

 private:
  // Hamiltonian for phase weights (cos, sin) without the range check.
  QubitOperator at(double t, double cos_w, double sin_w) const;

  StrokeKind kind_;
  double nu_start_;
  double nu_end_;
  double tau_;
};

struct PropagationResult {
  DensityMatrix final_state;
  std::uint64_t steps_used = 0;
  // Trace distance between the last two refinements.
  double convergence_estimate = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::uint64_t kInitialSteps = 256;
inline constexpr std::uint64_t kMaxSteps = std::uint64_t{1} << 24;

// Exact evolution under a constant Hamiltonian for dt (ms): the Bloch vector
// rotates about the field axis by 2 r dt / hbar.
DensityMatrix pauli_rotation_step(const QubitOperator& hamiltonian, double dt,
                                  const DensityMatrix& rho);

// Exponential midpoint rule with n_steps equal steps (second order in dt).
DensityMatrix propagate(const HamiltonianSchedule& schedule, const DensityMatrix& rho0,
                        std::uint64_t n_steps);

// Doubles the step count from kInitialSteps until successive refinements are
// within tol in trace distance; throws ConvergenceError past kMaxSteps.
PropagationResult propagate_converged(const HamiltonianSchedule& schedule,
                                      const DensityMatrix& rho0,
                                      double tol = kDefaultTolerance);

}  // namespace qcarnot
