#include "stokes/smallherm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace stokes {

namespace {

constexpr double kJacobiOffTol = 1e-14;
constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

// One two-sided Jacobi rotation zeroing a_pq of a symmetric matrix.
void jacobi_rotate(std::vector<double>& a, int n, int p, int q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  for (int k = 0; k < n; ++k) {
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    a[k * n + p] = c * akp - s * akq;
    a[k * n + q] = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a[p * n + k];
    const double aqk = a[q * n + k];
    a[p * n + k] = c * apk - s * aqk;
    a[q * n + k] = s * apk + c * aqk;
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) throw BadDimension("trace: matrix is not square");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("operator+: shapes differ");
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("operator-: shapes differ");
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("operator*: inner dimensions differ");
  ComplexMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff: shapes differ");
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double Spectrum::min() const {
  return *std::min_element(values.begin(), values.end());
}

double Spectrum::max() const {
  return *std::max_element(values.begin(), values.end());
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols()) throw BadDimension("hermitian_eigenvalues: matrix is not square");
  if (m.hermiticity_defect() > herm_tol)
    throw NotHermitian("hermitian_eigenvalues: hermiticity defect " +
                       std::to_string(m.hermiticity_defect()) + " exceeds tolerance");

  const int d = m.rows();
  const int n = 2 * d;
  // Real symmetric embedding of the (symmetrized) input; its spectrum is
  // the spectrum of m with every eigenvalue doubled.
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a[i * n + j] = h.real();
      a[(i + d) * n + (j + d)] = h.real();
      a[i * n + (j + d)] = -h.imag();
      a[(i + d) * n + j] = h.imag();
    }

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kJacobiOffTol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, n, p, q);
  }

  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a[i * n + i];
  std::sort(diag.begin(), diag.end());

  Spectrum s;
  s.values.resize(d);
  for (int i = 0; i < d; ++i) s.values[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  return s;
}

Spectrum singular_values(const ComplexMatrix& m) {
  // Use the smaller Gram side: fewer spurious near-zero eigenvalues whose
  // square roots would otherwise pick up sqrt-amplified noise.
  const ComplexMatrix gram = m.rows() < m.cols() ? m * m.adjoint() : m.adjoint() * m;
  Spectrum eigs = hermitian_eigenvalues(gram);
  Spectrum s;
  s.values.reserve(eigs.values.size());
  for (auto it = eigs.values.rbegin(); it != eigs.values.rend(); ++it)
    s.values.push_back(std::sqrt(std::max(0.0, *it)));
  return s;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  return hermitian_eigenvalues(m).min() >= -tol;
}

ComplexMatrix projector_from_kets(std::span<const ComplexVector> kets) {
  if (kets.empty()) throw DimensionMismatch("projector_from_kets: no kets given");
  const std::size_t dim = kets.front().size();
  if (dim == 0) throw DimensionMismatch("projector_from_kets: empty ket");
  ComplexMatrix p(static_cast<int>(dim), static_cast<int>(dim));
  for (const auto& ket : kets) {
    if (ket.size() != dim)
      throw DimensionMismatch("projector_from_kets: kets have different dimensions");
    double norm2 = 0.0;
    for (const Complex& c : ket) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
      throw std::invalid_argument("projector_from_kets: ket is not unit-norm");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        p(static_cast<int>(i), static_cast<int>(j)) += ket[i] * std::conj(ket[j]);
  }
  return p;
}

}  // namespace stokes
