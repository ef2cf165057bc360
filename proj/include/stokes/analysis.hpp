#pragma once

#include <vector>

#include "stokes/coherence.hpp"

namespace stokes {

// trace(rho^2) as the sum of squared tensor components.
double purity(const CoherenceTensor& t);

// Traces out the listed qubits (0-based, nonempty proper subset): keeps
// the components whose traced digits are all zero and rescales by sqrt 2
// per traced qubit.
CoherenceTensor partial_trace(const CoherenceTensor& t, const std::vector<int>& traced);

// Partial transpose on one qubit: flips the sign of every component whose
// digit at that qubit equals 2. An involution that preserves purity.
CoherenceTensor partial_transpose(const CoherenceTensor& t, int qubit);

struct PptResult {
  bool ppt;
  double min_eigenvalue;  // of the partially transposed matrix
};

// Checks positivity of the partial transpose on one qubit. Requires the
// input itself to reconstruct to a PSD matrix (NotADensity otherwise).
PptResult ppt_test(const CoherenceTensor& t, int qubit, double tol = kPsdTol);

// True when every component carrying at least one index-2 digit is zero
// within 1e-14; such states stay PSD under every partial transpose.
bool index2_free(const CoherenceTensor& t);

// Two-qubit connected correlations c_jk = t_jk - tA_j * tB_k, j,k in 1..3.
struct CorrelationTensor {
  double c[3][3]{};

  double frobenius() const;
};

CorrelationTensor correlation_tensor(const CoherenceTensor& t);

// True when the tensor factors into the product of its single-qubit
// reductions, component by component, within tol.
bool uncorrelation_test(const CoherenceTensor& t, double tol = 1e-12);

// Split of a two-qubit purity into reduced-product, connected-correlation
// and cross contributions; the three parts sum to trace(rho^2).
struct NormDecomposition {
  double product_part;
  double correlation_norm;
  double cross_term;
};

NormDecomposition norm_decomposition(const CoherenceTensor& t);

// Purity monotonicity along nested reductions: for every nonempty proper
// chain S subset of T, purity of the reduction to S must not fall below
// the purity of the reduction to T by more than tol. Violated by every
// pure entangled state; necessary for separability.
bool trace_square_chain(const CoherenceTensor& t, double tol = 1e-12);

// Sum of singular values of the reshuffled matrix for the bipartition
// (left | right); values above 1 witness entanglement. The two index sets
// must partition the qubits (BadPartition).
double realignment_norm(const CoherenceTensor& t, const std::vector<int>& left,
                        const std::vector<int>& right);

// Two-qubit state with purely classical correlations: its purity equals
// the product of the reduced purities even though the connected
// correlation tensor is nonzero.
CoherenceTensor classically_correlated_example();

struct SubsetPurity {
  std::vector<int> qubits;
  double purity;
};

struct BipartitionNorm {
  std::vector<int> left;
  std::vector<int> right;
  double norm;
};

struct AnalysisReport {
  int n = 0;
  double purity = 0.0;
  std::vector<double> bloch_radii;         // per qubit
  std::vector<SubsetPurity> reduced_purities;  // nonempty proper subsets
  std::vector<PptResult> ppt;              // per qubit
  bool index2_free = false;
  bool chain_ok = false;
  std::vector<BipartitionNorm> realignment;  // unordered bipartitions
};

// Full report for a density tensor; throws NotADensity when the input is
// not PSD within tol.
AnalysisReport analyze(const CoherenceTensor& t, double tol = kPsdTol);

}  // namespace stokes
