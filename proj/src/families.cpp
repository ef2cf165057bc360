#include "stokes/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "stokes/analysis.hpp"

namespace stokes {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kRangeTol = 1e-12;

std::size_t flat2(int j, int k) { return static_cast<std::size_t>(j) * 4 + k; }
std::size_t flat3(int j, int k, int l) {
  return (static_cast<std::size_t>(j) * 4 + k) * 4 + l;
}

Spectrum ascending(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return {std::move(v)};
}

void check_range(double x, double lo, double hi, const std::string& name) {
  if (x < lo - kRangeTol || x > hi + kRangeTol)
    throw OutOfRange(name + ": parameter x must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
}

// Spectrum of 0.5*L00 + a*L11 + b*L22 + c*L33 (two-qubit diagonal
// correlations): the three products commute, with joint signs
// (+,-,+), (-,+,+), (+,+,-), (-,-,-).
std::vector<double> diagonal_correlation_spectrum(double a, double b, double c) {
  return {0.25 + 0.5 * (a - b + c), 0.25 + 0.5 * (-a + b + c), 0.25 + 0.5 * (a + b - c),
          0.25 + 0.5 * (-a - b - c)};
}

}  // namespace

FamilyPoint bell() {
  FamilyPoint f;
  f.name = "bell";
  f.tensor = CoherenceTensor(2);
  f.tensor[0] = 0.5;
  f.tensor[flat2(1, 1)] = 0.5;
  f.tensor[flat2(2, 2)] = -0.5;
  f.tensor[flat2(3, 3)] = 0.5;
  f.spectrum = ascending(diagonal_correlation_spectrum(0.5, -0.5, 0.5));
  f.purity = 1.0;
  return f;
}

FamilyPoint werner(double x) {
  check_range(x, 0.0, 1.0, "werner");
  FamilyPoint f;
  f.name = "werner";
  f.x = x;
  f.tensor = CoherenceTensor(2);
  f.tensor[0] = 0.5;
  f.tensor[flat2(1, 1)] = -0.5 * x;
  f.tensor[flat2(2, 2)] = -0.5 * x;
  f.tensor[flat2(3, 3)] = -0.5 * x;
  f.spectrum = ascending(diagonal_correlation_spectrum(-0.5 * x, -0.5 * x, -0.5 * x));
  f.purity = 0.25 + 0.75 * x * x;
  return f;
}

FamilyPoint werner_prime(double x) {
  check_range(x, 0.0, 1.0, "werner_prime");
  FamilyPoint f;
  f.name = "werner-prime";
  f.x = x;
  f.tensor = CoherenceTensor(2);
  f.tensor[0] = 0.5;
  f.tensor[flat2(1, 1)] = 0.5 * x;
  f.tensor[flat2(2, 2)] = -0.5 * x;
  f.tensor[flat2(3, 3)] = 0.5 * x;
  f.spectrum = ascending(diagonal_correlation_spectrum(0.5 * x, -0.5 * x, 0.5 * x));
  f.purity = 0.25 + 0.75 * x * x;
  return f;
}

FamilyPoint tripartite(double x) {
  const double bound = 1.0 / (2.0 * kSqrt2);
  check_range(x, -bound, bound, "tripartite");
  FamilyPoint f;
  f.name = "tripartite";
  f.x = x;
  f.tensor = CoherenceTensor(3);
  f.tensor[0] = 1.0 / (2.0 * kSqrt2);
  f.tensor[flat3(1, 1, 1)] = x;
  f.spectrum = ascending({0.125 - x / (2.0 * kSqrt2), 0.125 - x / (2.0 * kSqrt2),
                          0.125 - x / (2.0 * kSqrt2), 0.125 - x / (2.0 * kSqrt2),
                          0.125 + x / (2.0 * kSqrt2), 0.125 + x / (2.0 * kSqrt2),
                          0.125 + x / (2.0 * kSqrt2), 0.125 + x / (2.0 * kSqrt2)});
  f.purity = 0.125 + x * x;
  return f;
}

FamilyPoint upb_family(double x) {
  const double bound = 1.0 / (8.0 * kSqrt2);
  check_range(x, -bound, bound, "upb");
  FamilyPoint f;
  f.name = "upb";
  f.x = x;
  f.tensor = CoherenceTensor(3);
  f.tensor[0] = 1.0 / (2.0 * kSqrt2);
  for (auto [j, k, l] : {std::array{0, 3, 1}, std::array{0, 3, 3}, std::array{1, 0, 3},
                         std::array{1, 1, 1}, std::array{1, 3, 3}, std::array{3, 0, 3},
                         std::array{3, 1, 0}, std::array{3, 1, 3}, std::array{3, 3, 0},
                         std::array{3, 3, 1}})
    f.tensor[flat3(j, k, l)] = x;
  for (auto [j, k, l] : {std::array{0, 1, 1}, std::array{0, 1, 3}, std::array{1, 0, 1},
                         std::array{1, 1, 0}, std::array{1, 3, 0}, std::array{3, 0, 1}})
    f.tensor[flat3(j, k, l)] = -x;
  f.spectrum = ascending({0.125 - kSqrt2 * x, 0.125 - kSqrt2 * x, 0.125 - kSqrt2 * x,
                          0.125 - kSqrt2 * x, 0.125 + kSqrt2 * x, 0.125 + kSqrt2 * x,
                          0.125 + kSqrt2 * x, 0.125 + kSqrt2 * x});
  f.purity = 0.125 + 16.0 * x * x;
  return f;
}

std::vector<ComplexVector> upb_kets() {
  const double h = kInvSqrt2;        // 1/sqrt 2
  const double e = 1.0 / (2.0 * kSqrt2);  // 1/(2 sqrt 2)
  std::vector<ComplexVector> kets(4, ComplexVector(8, Complex(0.0, 0.0)));
  // |0 1 +>
  kets[0][2] = h;
  kets[0][3] = h;
  // |1 + 0>
  kets[1][4] = h;
  kets[1][6] = h;
  // |+ 0 1>
  kets[2][1] = h;
  kets[2][5] = h;
  // |- - ->: amplitude (-1)^{bit count} / (2 sqrt 2)
  for (int b = 0; b < 8; ++b)
    kets[3][b] = (std::popcount(static_cast<unsigned>(b)) % 2 == 0) ? e : -e;
  return kets;
}

FamilyPoint npt_family(double x, double y) {
  FamilyPoint f;
  f.name = "npt-abc";
  f.x = x;
  f.y = y;
  f.tensor = CoherenceTensor(3);
  f.tensor[0] = 1.0 / (2.0 * kSqrt2);
  f.tensor[flat3(1, 2, 2)] = x;
  f.tensor[flat3(2, 1, 2)] = x;
  f.tensor[flat3(3, 3, 0)] = y;
  const double u = 0.125 * (1.0 - 2.0 * kSqrt2 * y);
  const double vp = 0.125 * (1.0 + 2.0 * kSqrt2 * (y + 2.0 * x));
  const double vm = 0.125 * (1.0 + 2.0 * kSqrt2 * (y - 2.0 * x));
  f.spectrum = ascending({u, u, u, u, vp, vp, vm, vm});
  f.purity = 0.125 + 2.0 * x * x + y * y;
  return f;
}

Spectrum npt_pt_spectrum(double x, double y) {
  return npt_family(x, -y).spectrum;
}

const char* region_class_name(RegionClass c) {
  switch (c) {
    case RegionClass::NotADensity:
      return "not-a-density";
    case RegionClass::Ppt:
      return "PPT";
    case RegionClass::NptEntangled:
      return "NPT-entangled";
  }
  return "?";
}

namespace {

RegionSample classify_point(double x, double y, double tol) {
  const FamilyPoint f = npt_family(x, y);
  RegionSample s;
  s.x = x;
  s.y = y;
  s.min_eig_rho = hermitian_eigenvalues(tensor_to_density(f.tensor)).min();
  s.min_eig_pt =
      hermitian_eigenvalues(tensor_to_density(partial_transpose(f.tensor, 0))).min();
  if (s.min_eig_rho < -tol)
    s.cls = RegionClass::NotADensity;
  else if (s.min_eig_pt < -tol)
    s.cls = RegionClass::NptEntangled;
  else
    s.cls = RegionClass::Ppt;
  return s;
}

std::vector<RegionSample> region_impl(const RegionGrid& grid, double tol, bool parallel) {
  if (grid.nx < 1 || grid.ny < 1) throw EmptyGrid("npt_region_map: grid must be at least 1x1");
  const long total = static_cast<long>(grid.nx) * grid.ny;
  auto coord = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  };
  std::vector<RegionSample> samples(total);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      const int i = static_cast<int>(idx / grid.ny);
      const int j = static_cast<int>(idx % grid.ny);
      samples[idx] = classify_point(coord(grid.x_min, grid.x_max, grid.nx, i),
                                    coord(grid.y_min, grid.y_max, grid.ny, j), tol);
    }
  } else {
    for (long idx = 0; idx < total; ++idx) {
      const int i = static_cast<int>(idx / grid.ny);
      const int j = static_cast<int>(idx % grid.ny);
      samples[idx] = classify_point(coord(grid.x_min, grid.x_max, grid.nx, i),
                                    coord(grid.y_min, grid.y_max, grid.ny, j), tol);
    }
  }
  return samples;
}

}  // namespace

std::vector<RegionSample> npt_region_map(const RegionGrid& grid, double tol) {
  return region_impl(grid, tol, true);
}

std::vector<RegionSample> npt_region_map_serial(const RegionGrid& grid, double tol) {
  return region_impl(grid, tol, false);
}

}  // namespace stokes
