#include "qcarnot/driving.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcarnot/constants.hpp"
#include "qcarnot/errors.hpp"

namespace qcarnot {

namespace {

// Rodrigues rotation of r by the propagator of field vector c over dt.
Vec3 rotate_bloch(const Vec3& c, double dt, const Vec3& r) {
  const double field = c.norm();
  if (field == 0.0) return r;
  const Vec3 axis = c * (1.0 / field);
  const double angle = 2.0 * field * dt / kHbar;
  const double cos_a = std::cos(angle);
  const double sin_a = std::sin(angle);
  return r * cos_a + axis.cross(r) * sin_a + axis * (axis.dot(r) * (1.0 - cos_a));
}

}  // namespace

std::string_view to_string(StrokeKind kind) {
  switch (kind) {
    case StrokeKind::compression:
      return "compression";
    case StrokeKind::expansion:
      return "expansion";
  }
  return "unknown";
}

HamiltonianSchedule::HamiltonianSchedule(StrokeKind kind, double nu_start, double nu_end,
                                         double tau)
    : kind_(kind), nu_start_(nu_start), nu_end_(nu_end), tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("HamiltonianSchedule: tau must be positive and finite");
  }
  if (!(nu_start > 0.0) || !(nu_end > 0.0) || !std::isfinite(nu_start) ||
      !std::isfinite(nu_end)) {
    throw DomainError("HamiltonianSchedule: frequencies must be positive and finite");
  }
}

double HamiltonianSchedule::frequency(double t) const {
  const double s = t / tau_;
  return nu_start_ * (1.0 - s) + nu_end_ * s;
}

QubitOperator HamiltonianSchedule::at(double t, double cos_w, double sin_w) const {
  const double amplitude = -0.5 * kPlanck * frequency(t);
  const double from = amplitude * cos_w;
  const double to = amplitude * sin_w;
  if (kind_ == StrokeKind::compression) return QubitOperator(0.0, to, from, 0.0);
  return QubitOperator(0.0, from, to, 0.0);
}

QubitOperator HamiltonianSchedule::evaluate(double t) const {
  if (!(t >= 0.0 && t <= tau_)) {
    std::ostringstream msg;
    msg << "HamiltonianSchedule::evaluate: t = " << t << " outside [0, " << tau_ << "]";
    throw DomainError(msg.str());
  }
  if (t == 0.0) return at(0.0, 1.0, 0.0);
  if (t == tau_) return at(tau_, 0.0, 1.0);
  const double phase = std::numbers::pi * t / (2.0 * tau_);
  return at(t, std::cos(phase), std::sin(phase));
}

DensityMatrix pauli_rotation_step(const QubitOperator& hamiltonian, double dt,
                                  const DensityMatrix& rho) {
  return DensityMatrix(rotate_bloch(hamiltonian.pauli(), dt, rho.bloch()));
}

DensityMatrix propagate(const HamiltonianSchedule& schedule, const DensityMatrix& rho0,
                        std::uint64_t n_steps) {
  if (n_steps == 0) throw DomainError("propagate: n_steps must be at least 1");
  const double tau = schedule.tau();
  const double dt = tau / static_cast<double>(n_steps);
  const double phase_rate = std::numbers::pi / (2.0 * tau);
  const bool compression = schedule.kind() == StrokeKind::compression;

  Vec3 r = rho0.bloch();
  for (std::uint64_t i = 0; i < n_steps; ++i) {
    const double t = (static_cast<double>(i) + 0.5) * dt;
    const double amplitude = -0.5 * kPlanck * schedule.frequency(t);
    const double from = amplitude * std::cos(phase_rate * t);
    const double to = amplitude * std::sin(phase_rate * t);
    const Vec3 c = compression ? Vec3{to, from, 0.0} : Vec3{from, to, 0.0};
    r = rotate_bloch(c, dt, r);
  }
  return DensityMatrix(r);
}

PropagationResult propagate_converged(const HamiltonianSchedule& schedule,
                                      const DensityMatrix& rho0, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw DomainError("propagate_converged: tolerance must lie in (0, 1)");
  }
  std::uint64_t n = kInitialSteps;
  DensityMatrix coarse = propagate(schedule, rho0, n);
  double estimate = 0.0;
  while (n < kMaxSteps) {
    n *= 2;
    DensityMatrix fine = propagate(schedule, rho0, n);
    estimate = trace_distance(coarse, fine);
    if (estimate < tol) return {fine, n, estimate};
    coarse = fine;
  }
  std::ostringstream msg;
  msg << "propagate_converged: no convergence to " << tol << " within " << kMaxSteps
      << " steps (last estimate " << estimate << ", tau = " << schedule.tau() << " ms)";
  throw ConvergenceError(msg.str());
}

}  // namespace qcarnot
