#pragma once

#include <array>
#include <cmath>

namespace qcarnot {

// Real 3-vector used for Pauli coefficients and Bloch vectors.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Hermitian 2x2 operator c0*I + cx*sx + cy*sy + cz*sz, coefficients in peV.
class QubitOperator {
 public:
  constexpr QubitOperator() = default;
  QubitOperator(double c0, double cx, double cy, double cz);
  QubitOperator(double c0, const Vec3& pauli);

  static QubitOperator sigma_x(double coefficient) { return {0.0, coefficient, 0.0, 0.0}; }
  static QubitOperator sigma_y(double coefficient) { return {0.0, 0.0, coefficient, 0.0}; }
  static QubitOperator sigma_z(double coefficient) { return {0.0, 0.0, 0.0, coefficient}; }

  double c0() const { return c0_; }
  double cx() const { return pauli_.x; }
  double cy() const { return pauli_.y; }
  double cz() const { return pauli_.z; }
  const Vec3& pauli() const { return pauli_; }

  // Norm r of the traceless part; eigenvalues are c0 -/+ r.
  double field_norm() const { return pauli_.norm(); }
  // Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;
  // Operator norm of [A, B] = 2i (a x b).sigma, i.e. 2|a x b|.
  static double commutator_norm(const QubitOperator& a, const QubitOperator& b);

  bool operator==(const QubitOperator&) const = default;

 private:
  double c0_ = 0.0;
  Vec3 pauli_{};
};

// Qubit state (1/2)(I + r.sigma). Trace and Hermiticity hold by construction;
// the constructor enforces |r| <= 1 within kPositivityTolerance.
class DensityMatrix {
 public:
  static constexpr double kPositivityTolerance = 1e-12;

  // Maximally mixed state.
  constexpr DensityMatrix() = default;
  explicit DensityMatrix(const Vec3& bloch);
  DensityMatrix(double rx, double ry, double rz) : DensityMatrix(Vec3{rx, ry, rz}) {}

  static DensityMatrix maximally_mixed() { return DensityMatrix{}; }

  const Vec3& bloch() const { return bloch_; }
  double rx() const { return bloch_.x; }
  double ry() const { return bloch_.y; }
  double rz() const { return bloch_.z; }
  double bloch_norm() const { return bloch_.norm(); }
  // tr(rho^2) = (1 + |r|^2) / 2
  double purity() const { return 0.5 * (1.0 + bloch_.dot(bloch_)); }
  // Eigenvalues (1 -/+ |r|)/2 in ascending order.
  std::array<double, 2> eigenvalues() const;

  bool operator==(const DensityMatrix&) const = default;

 private:
  Vec3 bloch_{};
};

// Thermal state exp(-H/T)/Z at temperature T (peV, k_B = 1).
DensityMatrix gibbs_state(const QubitOperator& hamiltonian, double temperature);

// tr(H rho) in peV.
double mean_energy(const QubitOperator& hamiltonian, const DensityMatrix& rho);

// -tr(rho ln rho) in nats.
double von_neumann_entropy(const DensityMatrix& rho);

// Binary Shannon entropy -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0.
double binary_entropy(double p);

// Matrix logarithm of a full-rank state, as a Pauli-basis operator.
QubitOperator log_operator(const DensityMatrix& rho);

// S(rho||sigma) = tr(rho (ln rho - ln sigma)) in nats. sigma must be full rank.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Energy-frame dephasing: keeps the Bloch component along H's field axis.
DensityMatrix dephase(const DensityMatrix& rho, const QubitOperator& hamiltonian);

// Relative entropy of coherence S(dephase(rho, H)) - S(rho).
double coherence(const DensityMatrix& rho, const QubitOperator& hamiltonian);

// Trace distance (1/2)||rho - sigma||_1 = |r - s| / 2.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qcarnot
