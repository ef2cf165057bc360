#include "stokes/coherence.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace stokes {

namespace {

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

int qubit_count_for_dim(int dim) {
  int n = 0;
  int d = 1;
  while (d < dim) {
    d *= 2;
    ++n;
  }
  if (d != dim || n < 1 || n > kMaxQubits)
    throw BadDimension("matrix dimension " + std::to_string(dim) +
                       " is not 2^n for n in 1.." + std::to_string(kMaxQubits));
  return n;
}

}  // namespace

MultiIndex MultiIndex::from_flat(std::size_t offset, int n) {
  MultiIndex idx;
  idx.digits.resize(n);
  for (int k = n - 1; k >= 0; --k) {
    idx.digits[k] = static_cast<int>(offset & 3u);
    offset >>= 2;
  }
  return idx;
}

std::size_t MultiIndex::flat() const {
  std::size_t offset = 0;
  for (int d : digits) {
    if (d < 0 || d > 3) throw IndexOutOfRange("multi-index digit out of 0..3");
    offset = offset * 4 + static_cast<std::size_t>(d);
  }
  return offset;
}

CoherenceTensor::CoherenceTensor(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits)
    throw BadDimension("tensor qubit count out of 1.." + std::to_string(kMaxQubits));
  components_.assign(pow4(n), 0.0);
}

CoherenceTensor::CoherenceTensor(int n, std::vector<double> components)
    : n_(n), components_(std::move(components)) {
  if (n < 1 || n > kMaxQubits)
    throw BadDimension("tensor qubit count out of 1.." + std::to_string(kMaxQubits));
  if (components_.size() != pow4(n))
    throw BadDimension("tensor component count is not 4^n");
}

double BlochVector::radius() const {
  return std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
}

double bloch_radius(const BlochVector& b) { return b.radius(); }

ComplexMatrix pauli_basis_matrix(int j) {
  if (j < 0 || j > 3) throw IndexOutOfRange("pauli index out of 0..3");
  ComplexMatrix m(2, 2);
  switch (j) {
    case 0:
      m(0, 0) = kInvSqrt2;
      m(1, 1) = kInvSqrt2;
      break;
    case 1:
      m(0, 1) = kInvSqrt2;
      m(1, 0) = kInvSqrt2;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -kInvSqrt2);
      m(1, 0) = Complex(0.0, kInvSqrt2);
      break;
    case 3:
      m(0, 0) = kInvSqrt2;
      m(1, 1) = -kInvSqrt2;
      break;
  }
  return m;
}

const std::vector<ComplexMatrix>& product_basis(int n) {
  if (n < 1 || n > kMaxQubits)
    throw BadDimension("product basis qubit count out of 1.." + std::to_string(kMaxQubits));
  static std::vector<ComplexMatrix> cache[kMaxQubits + 1];
  static std::once_flag built[kMaxQubits + 1];
  std::call_once(built[n], [n] {
    auto& basis = cache[n];
    basis.reserve(pow4(n));
    for (std::size_t offset = 0; offset < pow4(n); ++offset) {
      const MultiIndex idx = MultiIndex::from_flat(offset, n);
      ComplexMatrix m = pauli_basis_matrix(idx.digits[0]);
      for (int k = 1; k < n; ++k) m = kron(m, pauli_basis_matrix(idx.digits[k]));
      basis.push_back(std::move(m));
    }
  });
  return cache[n];
}

ComplexMatrix product_operator(const MultiIndex& idx) {
  const int n = static_cast<int>(idx.digits.size());
  if (n < 1 || n > kMaxQubits)
    throw BadDimension("multi-index length out of 1.." + std::to_string(kMaxQubits));
  return product_basis(n)[idx.flat()];
}

CoherenceTensor density_to_tensor(const ComplexMatrix& rho, double herm_tol, double trace_tol) {
  if (rho.rows() != rho.cols()) throw BadDimension("density_to_tensor: matrix is not square");
  const int n = qubit_count_for_dim(rho.rows());
  if (rho.hermiticity_defect() > herm_tol)
    throw NotHermitian("density_to_tensor: matrix is not Hermitian within tolerance");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > trace_tol)
    throw BadTrace("density_to_tensor: trace differs from 1 beyond tolerance");

  const auto& basis = product_basis(n);
  const int dim = rho.rows();
  CoherenceTensor t(n);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ComplexMatrix& op = basis[j];
    double comp = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const Complex& o = op(c, r);
        if (o == Complex(0.0, 0.0)) continue;
        comp += (rho(r, c) * o).real();
      }
    t[j] = comp;
  }
  return t;
}

ComplexMatrix tensor_to_density(const CoherenceTensor& t) {
  const int n = t.qubits();
  const auto& basis = product_basis(n);
  const int dim = 1 << n;
  ComplexMatrix rho(dim, dim);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double comp = t[j];
    if (comp == 0.0) continue;
    const ComplexMatrix& op = basis[j];
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const Complex& o = op(r, c);
        if (o == Complex(0.0, 0.0)) continue;
        rho(r, c) += comp * o;
      }
  }
  return rho;
}

CoherenceTensor two_qubit_components_closed_form(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw BadDimension("two_qubit_components_closed_form: matrix is not 4x4");

  const double r11 = rho(0, 0).real(), r22 = rho(1, 1).real();
  const double r33 = rho(2, 2).real(), r44 = rho(3, 3).real();
  const Complex r12 = rho(0, 1), r13 = rho(0, 2), r14 = rho(0, 3);
  const Complex r23 = rho(1, 2), r24 = rho(1, 3), r34 = rho(2, 3);

  CoherenceTensor t(2);
  auto set = [&t](int j, int k, double v) { t[static_cast<std::size_t>(j) * 4 + k] = v; };
  set(0, 0, 0.5 * (r11 + r22 + r33 + r44));
  set(0, 1, r12.real() + r34.real());
  set(0, 2, -r12.imag() - r34.imag());
  set(0, 3, 0.5 * (r11 - r22 + r33 - r44));
  set(1, 0, r13.real() + r24.real());
  set(2, 0, -r13.imag() - r24.imag());
  set(3, 0, 0.5 * (r11 + r22 - r33 - r44));
  set(1, 1, r14.real() + r23.real());
  set(1, 2, -r14.imag() + r23.imag());
  set(1, 3, r13.real() - r24.real());
  set(2, 1, -r14.imag() - r23.imag());
  set(2, 2, -r14.real() + r23.real());
  set(2, 3, -r13.imag() + r24.imag());
  set(3, 1, r12.real() - r34.real());
  set(3, 2, -r12.imag() + r34.imag());
  set(3, 3, 0.5 * (r11 - r22 - r33 + r44));
  return t;
}

BlochVector bloch_vector(const CoherenceTensor& t) {
  if (t.qubits() != 1) throw BadDimension("bloch_vector: tensor is not single-qubit");
  BlochVector b;
  for (int j = 0; j < 4; ++j) b.c[j] = t[j];
  return b;
}

}  // namespace stokes
