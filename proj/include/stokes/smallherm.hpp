#pragma once

#include <complex>
#include <span>
#include <vector>

#include "stokes/errors.hpp"

namespace stokes {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

// Dense row-major complex matrix sized for few-qubit operators (up to
// 32x32). Value semantics throughout; no expression templates.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  // max |a_ij - conj(a_ji)| over all entries; 0 for exactly Hermitian input.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermiticityTol) const {
    return rows_ == cols_ && hermiticity_defect() <= tol;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
inline ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

// max entrywise |a - b|; both shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct Spectrum {
  std::vector<double> values;

  double min() const;
  double max() const;
  double sum() const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending. Runs cyclic Jacobi sweeps
// on the 2d x 2d real symmetric embedding [[X, -Y], [Y, X]] until the
// off-diagonal Frobenius norm drops below 1e-14 (at most 100 sweeps).
// Throws NotHermitian when the defect exceeds herm_tol, BadDimension for
// non-square input.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol = kHermiticityTol);

// Singular values, descending: square roots of the eigenvalues of the
// smaller of m^dag m and m m^dag. min(rows, cols) values.
Spectrum singular_values(const ComplexMatrix& m);

bool is_psd(const ComplexMatrix& m, double tol = kPsdTol);

// Sum of |k><k| over the given kets. All kets must share one dimension
// (DimensionMismatch) and be unit-norm within 1e-12.
ComplexMatrix projector_from_kets(std::span<const ComplexVector> kets);

}  // namespace stokes
