#pragma once

#include <string>
#include <vector>

#include "stokes/coherence.hpp"

namespace stokes {

// A named state with closed-form spectrum and purity alongside its tensor.
struct FamilyPoint {
  std::string name;
  double x = 0.0;
  double y = 0.0;
  CoherenceTensor tensor;
  Spectrum spectrum;  // closed form, ascending
  double purity = 0.0;
};

// Maximally entangled two-qubit state (equal diagonal correlations up to
// the sign flip on axis 2). Pure, reduced states completely mixed.
FamilyPoint bell();

// Isotropic two-qubit state with diagonal correlations -x/2, x in [0, 1].
// Spectrum {(1-x)/4 (x3), (1+3x)/4}; separable exactly for x <= 1/3.
FamilyPoint werner(double x);

// Sign variant with diagonal correlations (+x/2, -x/2, +x/2); reaches the
// bell() state at x = 1.
FamilyPoint werner_prime(double x);

// Three-qubit state with a single 3-body component x on axis 1.
// Spectrum {1/8 +- x/(2 sqrt 2)} each four-fold; density for
// |x| <= 1/(2 sqrt 2). PPT on every qubit across the whole range.
FamilyPoint tripartite(double x);

// Three-qubit bound-entangled family: 16 components of magnitude x on
// axes 1/3, spectrum {1/8 +- sqrt 2 x} each four-fold, density for
// |x| <= 1/(8 sqrt 2). At the upper end it equals the normalized
// complement of the unextendible product basis projector.
FamilyPoint upb_family(double x);

// The four orthonormal product kets whose complement projector matches
// upb_family at its boundary.
std::vector<ComplexVector> upb_kets();

// Two-parameter three-qubit family with axis-2 components: x on two mixed
// 3-body terms, y on a ZZ-type 2-body term. Not range-checked; points
// outside the density cone are meaningful.
FamilyPoint npt_family(double x, double y);

// Closed-form spectrum of the partial transpose (first qubit) of
// npt_family; equals the npt_family spectrum with y negated.
Spectrum npt_pt_spectrum(double x, double y);

enum class RegionClass { NotADensity, Ppt, NptEntangled };

const char* region_class_name(RegionClass c);

struct RegionSample {
  double x = 0.0;
  double y = 0.0;
  double min_eig_rho = 0.0;
  double min_eig_pt = 0.0;
  RegionClass cls = RegionClass::NotADensity;
};

struct RegionGrid {
  int nx = 101;
  int ny = 101;
  double x_min = -0.4;
  double x_max = 0.4;
  double y_min = -0.4;
  double y_max = 0.4;
};

// Classifies every grid point of the npt_family plane by reconstructing
// the matrix and its partial transpose and running the eigensolver.
// Samples are row-major with x as the slow index; boundary points within
// tol of zero land on the non-entangled side. The parallel and serial
// variants return identical results.
std::vector<RegionSample> npt_region_map(const RegionGrid& grid, double tol = kPsdTol);
std::vector<RegionSample> npt_region_map_serial(const RegionGrid& grid, double tol = kPsdTol);

}  // namespace stokes
