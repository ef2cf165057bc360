#pragma once

#include <span>
#include <vector>

#include "stokes/coherence.hpp"

namespace stokes {

// Convex combination of product states, each factor a single-qubit Bloch
// vector with affine component 1/sqrt 2.
struct MixtureTerm {
  double weight = 0.0;
  std::vector<BlochVector> factors;
};

struct Mixture {
  int n = 0;
  std::vector<MixtureTerm> terms;
};

// Tensor of the mixture: component at J is the weighted sum over terms of
// the product of factor components picked out by the digits of J.
// Weights must sum to 1 within 1e-12 (WeightNotNormalized).
CoherenceTensor compile(const Mixture& m);

struct Feasibility {
  bool feasible = true;
  double worst_radius = 0.0;
  int term = -1;   // offending term (argmax radius)
  int qubit = -1;  // offending factor within that term
};

// Every factor must have Bloch radius <= 1/sqrt 2 + 1e-12 and every weight
// must be nonnegative for the mixture to describe a physical state.
Feasibility feasibility(const Mixture& m);

// Drops the factors of the traced qubits from every term; weights are
// unchanged. Commutes with compile followed by partial_trace.
Mixture reduce(const Mixture& m, const std::vector<int>& traced);

// Six equally weighted two-qubit product terms, one pair per axis, with
// anti-aligned (or, for the prime variant, axis-2-flipped) Bloch vectors
// of length sqrt(3x/2). Compiles to the isotropic two-qubit state with
// diagonal correlations -x/2 (prime: +x/2, -x/2, +x/2). Requires x >= 0;
// all factors are physical exactly when x <= 1/3.
Mixture werner_mixture(double x, bool prime = false);

// Nine three-qubit product terms on axis 1 arranged so every 1- and
// 2-qubit correlation cancels and only the 3-body component x survives.
// Weight profile is fixed by w1 in (0, 1/8): pairs at w1, w1, 2*w1 and a
// final group of three at (1 - 8*w1)/3.
Mixture gadget_a(double x, double w1);

// Five three-qubit product terms with the same cancellation property and
// weight profile (w1, w2, w2, w4, w4), w1 + 2*w2 + 2*w4 = 1.
Mixture gadget_b(double x, double w1, double w2, double w4);

// 36 product terms: one nine-term cancellation gadget per nonzero 3-body
// component of the bound-entangled family, with the gadget's 2-body
// outputs tuned to reproduce the family's 2-body components instead of
// cancelling them. Empty weights means equal weights 1/36; otherwise the
// 36 weights must be positive, normalized, and constant within each
// gadget's pair structure. Compiles to the family tensor exactly.
Mixture upb_mixture_36(double x, std::span<const double> weights = {});

// Largest |x| for which every factor of the gadget is physical.
double gadget_a_x_bound(double w1);
double gadget_b_x_bound(double w1, double w2, double w4);

enum class GadgetId { GadgetA, GadgetB };

struct ScanGrid {
  double x_step = 1e-3;
  double x_max = 0.2;
  double w_step = 5e-4;
};

struct ScanResult {
  double best_x = 0.0;
  std::vector<double> weights;  // gadget A: {w1}; gadget B: {w1, w2, w4}
};

// Grid search for the widest feasible |x| interval over the gadget's
// weight grid. For each weight point the closed-form bound proposes the
// top x grid point and the built mixture confirms it. Ties in best_x
// resolve toward the lexicographically smallest weight vector. The
// parallel and serial variants return identical results.
ScanResult separability_scan(GadgetId id, const ScanGrid& grid = {});
ScanResult separability_scan_serial(GadgetId id, const ScanGrid& grid = {});

}  // namespace stokes
