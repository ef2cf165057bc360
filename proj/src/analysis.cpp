#include "stokes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stokes {

namespace {

constexpr double kIndex2Tol = 1e-14;
constexpr double kSqrt2 = 1.4142135623730950488;

void check_qubit(const CoherenceTensor& t, int qubit, const char* op) {
  if (qubit < 0 || qubit >= t.qubits())
    throw BadPosition(std::string(op) + ": qubit index out of range");
}

std::vector<int> sorted_unique(const std::vector<int>& qs) {
  std::vector<int> s = qs;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Digits of the reduced tensor placed back into the full index layout,
// zero at the traced positions.
CoherenceTensor reduce_to_subset(const CoherenceTensor& t, const std::vector<int>& kept) {
  const int n = t.qubits();
  const int m = static_cast<int>(kept.size());
  const double scale = std::pow(kSqrt2, n - m);
  CoherenceTensor r(m);
  for (std::size_t offset = 0; offset < r.size(); ++offset) {
    const MultiIndex part = MultiIndex::from_flat(offset, m);
    MultiIndex full = MultiIndex::from_flat(0, n);
    for (int k = 0; k < m; ++k) full.digits[kept[k]] = part.digits[k];
    r[offset] = scale * t.at(full);
  }
  return r;
}

// Reorders the qubits of a tensor; order[k] names the source qubit that
// becomes qubit k of the result.
CoherenceTensor permute_qubits(const CoherenceTensor& t, const std::vector<int>& order) {
  const int n = t.qubits();
  CoherenceTensor r(n);
  for (std::size_t offset = 0; offset < t.size(); ++offset) {
    const MultiIndex src = MultiIndex::from_flat(offset, n);
    MultiIndex dst = MultiIndex::from_flat(0, n);
    for (int k = 0; k < n; ++k) dst.digits[k] = src.digits[order[k]];
    r.at(dst) = t[offset];
  }
  return r;
}

std::vector<std::vector<int>> nonempty_subsets(int n, bool proper_only) {
  std::vector<std::vector<int>> out;
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (proper_only && mask == full) continue;
    std::vector<int> s;
    for (int q = 0; q < n; ++q)
      if (mask & (1u << q)) s.push_back(q);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

double purity(const CoherenceTensor& t) {
  double s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) s += t[j] * t[j];
  return s;
}

CoherenceTensor partial_trace(const CoherenceTensor& t, const std::vector<int>& traced) {
  const int n = t.qubits();
  const std::vector<int> tr = sorted_unique(traced);
  if (tr.size() != traced.size())
    throw BadSubset("partial_trace: traced set has repeated qubits");
  if (tr.empty() || static_cast<int>(tr.size()) >= n)
    throw BadSubset("partial_trace: traced set must be a nonempty proper subset");
  for (int q : tr)
    if (q < 0 || q >= n) throw BadSubset("partial_trace: qubit index out of range");
  std::vector<int> kept;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(tr.begin(), tr.end(), q)) kept.push_back(q);
  return reduce_to_subset(t, kept);
}

CoherenceTensor partial_transpose(const CoherenceTensor& t, int qubit) {
  check_qubit(t, qubit, "partial_transpose");
  const int n = t.qubits();
  const int shift = 2 * (n - 1 - qubit);
  CoherenceTensor r = t;
  for (std::size_t offset = 0; offset < r.size(); ++offset)
    if (((offset >> shift) & 3u) == 2u) r[offset] = -r[offset];
  return r;
}

PptResult ppt_test(const CoherenceTensor& t, int qubit, double tol) {
  check_qubit(t, qubit, "ppt_test");
  const double self_min = hermitian_eigenvalues(tensor_to_density(t)).min();
  if (self_min < -tol)
    throw NotADensity("ppt_test: input reconstructs to a non-PSD matrix (min eigenvalue " +
                      std::to_string(self_min) + ")");
  const ComplexMatrix pt = tensor_to_density(partial_transpose(t, qubit));
  const double min_eig = hermitian_eigenvalues(pt).min();
  return {min_eig >= -tol, min_eig};
}

bool index2_free(const CoherenceTensor& t) {
  const int n = t.qubits();
  for (std::size_t offset = 0; offset < t.size(); ++offset) {
    bool has_two = false;
    for (int k = 0; k < n && !has_two; ++k) has_two = ((offset >> (2 * k)) & 3u) == 2u;
    if (has_two && std::abs(t[offset]) > kIndex2Tol) return false;
  }
  return true;
}

double CorrelationTensor::frobenius() const {
  double s = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) s += c[j][k] * c[j][k];
  return std::sqrt(s);
}

CorrelationTensor correlation_tensor(const CoherenceTensor& t) {
  if (t.qubits() != 2) throw BadDimension("correlation_tensor: tensor is not two-qubit");
  CorrelationTensor ct;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const double joint = t[static_cast<std::size_t>(j) * 4 + k];
      const double a = kSqrt2 * t[static_cast<std::size_t>(j) * 4];
      const double b = kSqrt2 * t[static_cast<std::size_t>(k)];
      ct.c[j - 1][k - 1] = joint - a * b;
    }
  return ct;
}

bool uncorrelation_test(const CoherenceTensor& t, double tol) {
  const int n = t.qubits();
  if (n == 1) return true;
  std::vector<BlochVector> singles;
  singles.reserve(n);
  for (int q = 0; q < n; ++q) singles.push_back(bloch_vector(reduce_to_subset(t, {q})));
  for (std::size_t offset = 0; offset < t.size(); ++offset) {
    const MultiIndex idx = MultiIndex::from_flat(offset, n);
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= singles[k].c[idx.digits[k]];
    if (std::abs(t[offset] - prod) > tol) return false;
  }
  return true;
}

NormDecomposition norm_decomposition(const CoherenceTensor& t) {
  if (t.qubits() != 2) throw BadDimension("norm_decomposition: tensor is not two-qubit");
  const BlochVector a = bloch_vector(reduce_to_subset(t, {0}));
  const BlochVector b = bloch_vector(reduce_to_subset(t, {1}));
  const CorrelationTensor ct = correlation_tensor(t);
  double na = 0.0, nb = 0.0;
  for (int j = 0; j < 4; ++j) {
    na += a.c[j] * a.c[j];
    nb += b.c[j] * b.c[j];
  }
  double corr = 0.0, cross = 0.0;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const double c = ct.c[j - 1][k - 1];
      corr += c * c;
      cross += 2.0 * a.c[j] * b.c[k] * c;
    }
  return {na * nb, corr, cross};
}

bool trace_square_chain(const CoherenceTensor& t, double tol) {
  const int n = t.qubits();
  if (n == 1) return true;
  const auto subsets = nonempty_subsets(n, false);
  std::vector<unsigned> masks;
  std::vector<double> purities;
  masks.reserve(subsets.size());
  purities.reserve(subsets.size());
  const unsigned full = (1u << n) - 1u;
  for (const auto& s : subsets) {
    unsigned mask = 0;
    for (int q : s) mask |= 1u << q;
    masks.push_back(mask);
    purities.push_back(mask == full ? purity(t) : purity(reduce_to_subset(t, s)));
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i == j) continue;
      // S strictly inside T: purity may only grow when tracing down.
      if ((masks[i] & masks[j]) == masks[i] && masks[i] != masks[j])
        if (purities[i] < purities[j] - tol) return false;
    }
  return true;
}

double realignment_norm(const CoherenceTensor& t, const std::vector<int>& left,
                        const std::vector<int>& right) {
  const int n = t.qubits();
  const std::vector<int> l = sorted_unique(left);
  const std::vector<int> r = sorted_unique(right);
  if (l.empty() || r.empty() || l.size() != left.size() || r.size() != right.size() ||
      static_cast<int>(l.size() + r.size()) != n)
    throw BadPartition("realignment_norm: sets do not partition the qubits");
  for (int q : l)
    if (std::binary_search(r.begin(), r.end(), q))
      throw BadPartition("realignment_norm: sets overlap");
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(l.begin(), l.end(), q) && !std::binary_search(r.begin(), r.end(), q))
      throw BadPartition("realignment_norm: sets do not cover the qubits");

  std::vector<int> order = l;
  order.insert(order.end(), r.begin(), r.end());
  const ComplexMatrix rho = tensor_to_density(permute_qubits(t, order));

  const int da = 1 << static_cast<int>(l.size());
  const int db = 1 << static_cast<int>(r.size());
  // Reshuffle: row pairs the two left-block indices, column pairs the two
  // right-block indices.
  ComplexMatrix re(da * da, db * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int m = 0; m < db; ++m)
          re(i * da + j, k * db + m) = rho(i * db + k, j * db + m);
  return singular_values(re).sum();
}

CoherenceTensor classically_correlated_example() {
  // Support {00, 03, 10, 13}: the reduced states lie on different axes,
  // and setting the joint 13-component to minus the product of the
  // marginals makes the purity factorize exactly while the connected
  // correlation stays nonzero.
  CoherenceTensor t(2);
  const double a = 0.1;
  t[0] = 0.5;                    // 00
  t[3] = a;                      // 03
  t[4] = a;                      // 10
  t[7] = -(kSqrt2 * a) * (kSqrt2 * a);  // 13 = -tA_1 * tB_3
  return t;
}

AnalysisReport analyze(const CoherenceTensor& t, double tol) {
  const int n = t.qubits();
  AnalysisReport rep;
  rep.n = n;
  rep.purity = purity(t);

  const double self_min = hermitian_eigenvalues(tensor_to_density(t)).min();
  if (self_min < -tol)
    throw NotADensity("analyze: input reconstructs to a non-PSD matrix (min eigenvalue " +
                      std::to_string(self_min) + ")");

  for (int q = 0; q < n; ++q) {
    const CoherenceTensor single = n == 1 ? t : reduce_to_subset(t, {q});
    rep.bloch_radii.push_back(bloch_vector(single).radius());
  }

  for (const auto& s : nonempty_subsets(n, true))
    rep.reduced_purities.push_back({s, purity(reduce_to_subset(t, s))});

  for (int q = 0; q < n; ++q) {
    const ComplexMatrix pt = tensor_to_density(partial_transpose(t, q));
    const double min_eig = hermitian_eigenvalues(pt).min();
    rep.ppt.push_back({min_eig >= -tol, min_eig});
  }

  rep.index2_free = index2_free(t);
  rep.chain_ok = trace_square_chain(t, 1e-12);

  if (n >= 2) {
    // Unordered bipartitions: enumerate subsets containing qubit 0.
    for (const auto& s : nonempty_subsets(n, true)) {
      if (s.front() != 0) continue;
      std::vector<int> rest;
      for (int q = 0; q < n; ++q)
        if (std::find(s.begin(), s.end(), q) == s.end()) rest.push_back(q);
      rep.realignment.push_back({s, rest, realignment_norm(t, s, rest)});
    }
  }
  return rep;
}

}  // namespace stokes
