#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stokes/smallherm.hpp"

namespace stokes {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr int kMaxQubits = 5;

// Multi-index (j_1 ... j_n), each digit in 0..3, one digit per qubit.
// The first qubit is the most significant base-4 digit of the flat offset.
struct MultiIndex {
  std::vector<int> digits;

  static MultiIndex from_flat(std::size_t offset, int n);
  std::size_t flat() const;
};

// Real expansion coefficients of an n-qubit operator in the orthonormal
// product basis built from the scaled Pauli matrices (sigma_j / sqrt 2).
// Stored dense as 4^n doubles in flat multi-index order. A unit-trace
// operator has component (1/sqrt 2)^n at the all-zero index.
class CoherenceTensor {
 public:
  CoherenceTensor() = default;
  explicit CoherenceTensor(int n);
  CoherenceTensor(int n, std::vector<double> components);

  int qubits() const { return n_; }
  std::size_t size() const { return components_.size(); }

  double& operator[](std::size_t flat) { return components_[flat]; }
  double operator[](std::size_t flat) const { return components_[flat]; }
  double& at(const MultiIndex& idx) { return components_[idx.flat()]; }
  double at(const MultiIndex& idx) const { return components_[idx.flat()]; }

  const std::vector<double>& components() const { return components_; }

 private:
  int n_ = 0;
  std::vector<double> components_;
};

// Single-qubit tensor as a 4-vector; c[0] is 1/sqrt 2 for unit trace and
// (c[1], c[2], c[3]) is the scaled Bloch vector of radius <= 1/sqrt 2.
struct BlochVector {
  std::array<double, 4> c{};

  double radius() const;
  bool physical(double tol = 1e-12) const { return radius() <= kInvSqrt2 + tol; }
};

double bloch_radius(const BlochVector& b);

// Scaled Pauli matrix sigma_j / sqrt 2 for j in 0..3 (j = 0 is the scaled
// identity). The four matrices are orthonormal under the trace inner
// product.
ComplexMatrix pauli_basis_matrix(int j);

// All 4^n product-basis matrices for n qubits, built once per n and cached.
const std::vector<ComplexMatrix>& product_basis(int n);

ComplexMatrix product_operator(const MultiIndex& idx);

// Expansion of a Hermitian unit-trace matrix over the product basis.
// Checks squareness/power-of-two dimension (BadDimension), hermiticity
// within herm_tol (NotHermitian) and unit trace within trace_tol (BadTrace).
CoherenceTensor density_to_tensor(const ComplexMatrix& rho,
                                  double herm_tol = kHermiticityTol,
                                  double trace_tol = 1e-10);

// Reassembles the matrix from its components. Deliberately does not check
// positivity: tensors outside the density cone are representable.
ComplexMatrix tensor_to_density(const CoherenceTensor& t);

// Closed-form two-qubit expansion written directly in the 16 matrix
// entries; independent of the generic trace-inner-product route.
CoherenceTensor two_qubit_components_closed_form(const ComplexMatrix& rho);

BlochVector bloch_vector(const CoherenceTensor& t);

}  // namespace stokes
