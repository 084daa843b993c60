#include "qcarnot/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcarnot/errors.hpp"

namespace qcarnot {

namespace {

bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Unit field axis of a non-degenerate Hamiltonian.
Vec3 field_axis(const QubitOperator& h, const char* what) {
  const double r = h.field_norm();
  if (!(r > 0.0)) {
    throw DomainError(std::string(what) + ": degenerate Hamiltonian has no energy eigenbasis");
  }
  return h.pauli() * (1.0 / r);
}

// Entropy of a state with Bloch norm n, using (1 -/+ n)/2 directly to keep
// precision near pure states.
double entropy_from_norm(double n) {
  n = std::clamp(n, 0.0, 1.0);
  const double p_minus = 0.5 * (1.0 - n);
  const double p_plus = 0.5 * (1.0 + n);
  double s = 0.0;
  if (p_minus > 0.0) s -= p_minus * std::log(p_minus);
  if (p_plus > 0.0) s -= p_plus * std::log(p_plus);
  return s;
}

}  // namespace

QubitOperator::QubitOperator(double c0, double cx, double cy, double cz)
    : QubitOperator(c0, Vec3{cx, cy, cz}) {}

QubitOperator::QubitOperator(double c0, const Vec3& pauli) : c0_(c0), pauli_(pauli) {
  if (!std::isfinite(c0) || !finite(pauli)) {
    throw DomainError("QubitOperator: coefficients must be finite");
  }
}

std::array<double, 2> QubitOperator::eigenvalues() const {
  const double r = field_norm();
  return {c0_ - r, c0_ + r};
}

double QubitOperator::commutator_norm(const QubitOperator& a, const QubitOperator& b) {
  return 2.0 * a.pauli().cross(b.pauli()).norm();
}

DensityMatrix::DensityMatrix(const Vec3& bloch) : bloch_(bloch) {
  if (!finite(bloch)) {
    throw InvalidStateError("DensityMatrix: Bloch vector must be finite");
  }
  const double n = bloch.norm();
  if (n > 1.0 + kPositivityTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "DensityMatrix: Bloch norm " << n << " exceeds 1 (state not positive semidefinite)";
    throw InvalidStateError(msg.str());
  }
  if (n > 1.0) bloch_ = bloch * (1.0 / n);
}

std::array<double, 2> DensityMatrix::eigenvalues() const {
  const double n = std::min(bloch_norm(), 1.0);
  return {0.5 * (1.0 - n), 0.5 * (1.0 + n)};
}

DensityMatrix gibbs_state(const QubitOperator& hamiltonian, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("gibbs_state: temperature must be positive and finite");
  }
  const double r = hamiltonian.field_norm();
  if (r == 0.0) return DensityMatrix::maximally_mixed();
  // exp(-H/T)/Z has Bloch vector -tanh(r/T) * (field axis).
  const double polarization = std::tanh(r / temperature);
  return DensityMatrix(hamiltonian.pauli() * (-polarization / r));
}

double mean_energy(const QubitOperator& hamiltonian, const DensityMatrix& rho) {
  return hamiltonian.c0() + hamiltonian.pauli().dot(rho.bloch());
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy: probability outside [0, 1]");
  }
  double s = 0.0;
  if (p > 0.0) s -= p * std::log(p);
  if (p < 1.0) s -= (1.0 - p) * std::log1p(-p);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_from_norm(rho.bloch_norm()); }

QubitOperator log_operator(const DensityMatrix& rho) {
  const double s = rho.bloch_norm();
  if (s >= 1.0 - DensityMatrix::kPositivityTolerance) {
    throw DomainError("log_operator: state is (numerically) singular");
  }
  // Eigenvalues (1 -/+ s)/2 along -/+ the Bloch axis:
  // ln rho = (1/2) ln((1 - s^2)/4) I + atanh(s) (unit Bloch axis).sigma
  const double identity_part = 0.5 * std::log1p(-s * s) - std::numbers::ln2;
  const Vec3 pauli = s > 0.0 ? rho.bloch() * (std::atanh(s) / s) : Vec3{};
  return QubitOperator(identity_part, pauli);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (sigma.bloch_norm() >= 1.0 - DensityMatrix::kPositivityTolerance) {
    throw DomainError("relative_entropy: reference state is singular; S(rho||sigma) diverges");
  }
  // tr(rho ln rho) = -S(rho); tr(rho ln sigma) from the spectral form of ln sigma.
  const double cross = mean_energy(log_operator(sigma), rho);
  const double value = -von_neumann_entropy(rho) - cross;
  // Non-negative by Klein's inequality; only rounding can push it below zero.
  return std::max(value, 0.0);
}

DensityMatrix dephase(const DensityMatrix& rho, const QubitOperator& hamiltonian) {
  const Vec3 axis = field_axis(hamiltonian, "dephase");
  return DensityMatrix(axis * axis.dot(rho.bloch()));
}

double coherence(const DensityMatrix& rho, const QubitOperator& hamiltonian) {
  const DensityMatrix diagonal = dephase(rho, hamiltonian);
  return std::max(von_neumann_entropy(diagonal) - von_neumann_entropy(rho), 0.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 0.5 * (rho.bloch() - sigma.bloch()).norm();
}

}  // namespace qcarnot
