#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "stokes/analysis.hpp"
#include "stokes/coherence.hpp"
#include "stokes/errors.hpp"
#include "stokes/families.hpp"
#include "stokes/smallherm.hpp"

#include "test_support.hpp"

using namespace stokes;

namespace {

double spectrum_gap(const Spectrum& a, const std::vector<double>& expected_sorted) {
  REQUIRE(a.values.size() == expected_sorted.size());
  double gap = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    gap = std::max(gap, std::abs(a.values[i] - expected_sorted[i]));
  return gap;
}

// Largest |closed-form - eigensolver| over the sorted spectra.
double eigensolver_gap(const FamilyPoint& p) {
  const Spectrum direct = hermitian_eigenvalues(tensor_to_density(p.tensor));
  return spectrum_gap(direct, p.spectrum.values);
}

double roundtrip_gap(const CoherenceTensor& t) {
  const CoherenceTensor back = density_to_tensor(tensor_to_density(t));
  double gap = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) gap = std::max(gap, std::abs(t[i] - back[i]));
  return gap;
}

}  // namespace

TEST_CASE("bell state is pure with completely mixed margins") {
  const FamilyPoint p = bell();
  CHECK(p.tensor.qubits() == 2);
  CHECK(p.tensor.at({{0, 0}}) == (0.5));
  CHECK(p.tensor.at({{1, 1}}) == (0.5));
  CHECK(p.tensor.at({{2, 2}}) == (-0.5));
  CHECK(p.tensor.at({{3, 3}}) == (0.5));
  int nonzero = 0;
  for (std::size_t i = 0; i < p.tensor.size(); ++i)
    if (p.tensor[i] != 0.0) ++nonzero;
  CHECK(nonzero == 4);

  CHECK(p.purity == 1.0);
  CHECK(std::abs(purity(p.tensor) - 1.0) < 1e-15);
  CHECK(spectrum_gap(p.spectrum, {0.0, 0.0, 0.0, 1.0}) == 0.0);
  CHECK(eigensolver_gap(p) < 1e-10);

  for (int q : {0, 1}) {
    const CoherenceTensor red = partial_trace(p.tensor, {q});
    CHECK(std::abs(purity(red) - 0.5) < 1e-15);
  }
  CHECK_FALSE(trace_square_chain(p.tensor));
}

TEST_CASE("werner family matches its closed forms across the range") {
  for (int k = 0; k <= 10; ++k) {
    const double x = 0.1 * k;
    const FamilyPoint p = werner(x);
    CHECK(p.tensor.at({{0, 0}}) == (0.5));
    for (int j : {1, 2, 3})
      CHECK(p.tensor.at({{j, j}}) == (-x / 2));

    CHECK(std::abs(p.purity - (0.25 + 0.75 * x * x)) < 1e-15);
    CHECK(std::abs(purity(p.tensor) - p.purity) < 1e-15);

    std::vector<double> expect = {(1 - x) / 4, (1 - x) / 4, (1 - x) / 4, (1 + 3 * x) / 4};
    std::sort(expect.begin(), expect.end());
    CHECK(spectrum_gap(p.spectrum, expect) < 1e-15);
    CHECK(eigensolver_gap(p) < 1e-10);

    const PptResult pt = ppt_test(p.tensor, 0);
    CHECK(std::abs(pt.min_eigenvalue - (1 - 3 * x) / 4) < 1e-10);
    CHECK(pt.ppt == (x <= 1.0 / 3.0 + 1e-9));
  }
  CHECK_THROWS_AS(werner(-0.01), OutOfRange);
  CHECK_THROWS_AS(werner(1.01), OutOfRange);
}

TEST_CASE("werner prime is the sign-flipped variant and hits bell at x = 1") {
  for (int k = 0; k <= 10; ++k) {
    const double x = 0.1 * k;
    const FamilyPoint p = werner_prime(x);
    CHECK(p.tensor.at({{1, 1}}) == (x / 2));
    CHECK(p.tensor.at({{2, 2}}) == (-x / 2));
    CHECK(p.tensor.at({{3, 3}}) == (x / 2));

    // Local-unitary partner of werner(x): identical spectrum and purity.
    std::vector<double> expect = {(1 - x) / 4, (1 - x) / 4, (1 - x) / 4, (1 + 3 * x) / 4};
    std::sort(expect.begin(), expect.end());
    CHECK(spectrum_gap(p.spectrum, expect) < 1e-15);
    CHECK(eigensolver_gap(p) < 1e-10);
    CHECK(std::abs(p.purity - (0.25 + 0.75 * x * x)) < 1e-15);
  }

  const FamilyPoint prime1 = werner_prime(1.0);
  const FamilyPoint b = bell();
  for (std::size_t i = 0; i < prime1.tensor.size(); ++i)
    CHECK(prime1.tensor[i] == (b.tensor[i]));
  CHECK(max_abs_diff(tensor_to_density(prime1.tensor), tensor_to_density(b.tensor)) < 1e-15);

  CHECK_THROWS_AS(werner_prime(-0.2), OutOfRange);
  CHECK_THROWS_AS(werner_prime(1.2), OutOfRange);
}

TEST_CASE("tripartite single-component family stays PPT over its range") {
  const double x_max = 0.5 * kInvSqrt2;
  for (double x : {-x_max, -0.2, 0.0, 0.15, 0.3, x_max}) {
    const FamilyPoint p = tripartite(x);
    CHECK(p.tensor.qubits() == 3);
    CHECK(std::abs(p.tensor.at({{0, 0, 0}}) - 0.5 * kInvSqrt2) < 1e-15);
    CHECK(p.tensor.at({{1, 1, 1}}) == (x));
    int nonzero = 0;
    for (std::size_t i = 0; i < p.tensor.size(); ++i)
      if (p.tensor[i] != 0.0) ++nonzero;
    CHECK(nonzero == (x == 0.0 ? 1 : 2));

    CHECK(std::abs(p.purity - (0.125 + x * x)) < 1e-15);
    CHECK(std::abs(purity(p.tensor) - p.purity) < 1e-15);

    const double shift = x * 0.5 * kInvSqrt2;
    std::vector<double> expect;
    for (int i = 0; i < 4; ++i) expect.push_back(0.125 - shift);
    for (int i = 0; i < 4; ++i) expect.push_back(0.125 + shift);
    std::sort(expect.begin(), expect.end());
    CHECK(spectrum_gap(p.spectrum, expect) < 1e-15);
    CHECK(eigensolver_gap(p) < 1e-10);

    CHECK(index2_free(p.tensor));
    for (int q : {0, 1, 2}) CHECK(ppt_test(p.tensor, q).ppt);

    // All 1- and 2-qubit reductions are completely mixed.
    for (int q : {0, 1, 2}) {
      const CoherenceTensor one = partial_trace(p.tensor, {(q + 1) % 3, (q + 2) % 3});
      CHECK(std::abs(purity(one) - 0.5) < 1e-14);
      const CoherenceTensor two = partial_trace(p.tensor, {q});
      CHECK(std::abs(purity(two) - 0.25) < 1e-14);
    }
  }

  CHECK(std::abs(tripartite(x_max).spectrum.min()) < 1e-15);
  CHECK_THROWS_AS(tripartite(x_max + 1e-6), OutOfRange);
  CHECK_THROWS_AS(tripartite(-x_max - 1e-6), OutOfRange);
}

TEST_CASE("upb family: components, spectrum, and the boundary projector") {
  const double x0 = 1.0 / (8.0 * std::sqrt(2.0));

  const std::array<std::array<int, 3>, 10> plus = {{{0, 3, 1},
                                                    {0, 3, 3},
                                                    {1, 0, 3},
                                                    {1, 1, 1},
                                                    {1, 3, 3},
                                                    {3, 0, 3},
                                                    {3, 1, 0},
                                                    {3, 1, 3},
                                                    {3, 3, 0},
                                                    {3, 3, 1}}};
  const std::array<std::array<int, 3>, 6> minus = {
      {{0, 1, 1}, {0, 1, 3}, {1, 0, 1}, {1, 1, 0}, {1, 3, 0}, {3, 0, 1}}};

  for (double x : {-x0, -0.05, 0.0, 0.04, x0}) {
    const FamilyPoint p = upb_family(x);
    CHECK(std::abs(p.tensor.at({{0, 0, 0}}) - 0.5 * kInvSqrt2) < 1e-15);
    for (const auto& d : plus)
      CHECK(p.tensor.at({{d[0], d[1], d[2]}}) == (x));
    for (const auto& d : minus)
      CHECK(p.tensor.at({{d[0], d[1], d[2]}}) == (-x));
    int nonzero = 0;
    for (std::size_t i = 0; i < p.tensor.size(); ++i)
      if (p.tensor[i] != 0.0) ++nonzero;
    CHECK(nonzero == (x == 0.0 ? 1 : 17));

    CHECK(std::abs(p.purity - (0.125 + 16 * x * x)) < 1e-15);
    CHECK(std::abs(purity(p.tensor) - p.purity) < 1e-14);

    const double shift = std::sqrt(2.0) * x;
    std::vector<double> expect;
    for (int i = 0; i < 4; ++i) expect.push_back(0.125 - shift);
    for (int i = 0; i < 4; ++i) expect.push_back(0.125 + shift);
    std::sort(expect.begin(), expect.end());
    CHECK(spectrum_gap(p.spectrum, expect) < 1e-14);
    CHECK(eigensolver_gap(p) < 1e-10);

    CHECK(index2_free(p.tensor));
    for (int q : {0, 1, 2}) CHECK(ppt_test(p.tensor, q).ppt);
    CHECK(trace_square_chain(p.tensor, 1e-9));
  }

  // Boundary point: rank-4 projector complement, purity 1/4.
  const FamilyPoint edge = upb_family(x0);
  CHECK(std::abs(edge.purity - 0.25) < 1e-15);
  CHECK(std::abs(edge.spectrum.min()) < 1e-14);

  const auto kets = upb_kets();
  REQUIRE(kets.size() == 4);
  for (const auto& k : kets) REQUIRE(k.size() == 8);
  for (std::size_t a = 0; a < kets.size(); ++a)
    for (std::size_t b = 0; b < kets.size(); ++b) {
      Complex dot = 0.0;
      for (int i = 0; i < 8; ++i) dot += std::conj(kets[a][i]) * kets[b][i];
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
    }

  const ComplexMatrix proj = projector_from_kets(kets);
  CHECK(std::abs(proj.trace().real() - 4.0) < 1e-12);
  ComplexMatrix target = ComplexMatrix::identity(8) + (-1.0) * proj;
  target = 0.25 * target;
  CHECK(max_abs_diff(tensor_to_density(edge.tensor), target) < 1e-12);

  CHECK_THROWS_AS(upb_family(x0 + 1e-6), OutOfRange);
  CHECK_THROWS_AS(upb_family(-x0 - 1e-6), OutOfRange);
}

TEST_CASE("npt family closed forms agree with the eigensolver off-range too") {
  const FamilyPoint origin = npt_family(0.0, 0.0);
  CHECK(std::abs(origin.purity - 0.125) < 1e-15);
  for (double v : origin.spectrum.values) CHECK(std::abs(v - 0.125) < 1e-15);

  const std::vector<double> grid = {-0.4, -0.15, 0.0, 0.1, 0.25, 0.4};
  for (double x : grid)
    for (double y : grid) {
      const FamilyPoint p = npt_family(x, y);
      CHECK(std::abs(p.tensor.at({{0, 0, 0}}) - 0.5 * kInvSqrt2) < 1e-15);
      CHECK(p.tensor.at({{1, 2, 2}}) == (x));
      CHECK(p.tensor.at({{2, 1, 2}}) == (x));
      CHECK(p.tensor.at({{3, 3, 0}}) == (y));

      CHECK(std::abs(p.purity - (0.125 + 2 * x * x + y * y)) < 1e-14);
      CHECK(std::abs(purity(p.tensor) - p.purity) < 1e-14);
      CHECK(eigensolver_gap(p) < 1e-10);

      // PT spectrum: the closed form is the y -> -y image ...
      const Spectrum pt_closed = npt_pt_spectrum(x, y);
      CHECK(spectrum_gap(pt_closed, npt_family(x, -y).spectrum.values) < 1e-15);
      // ... and matches a direct partial transpose of the matrix.
      const CoherenceTensor pt = partial_transpose(p.tensor, 0);
      const Spectrum pt_direct = hermitian_eigenvalues(tensor_to_density(pt));
      CHECK(spectrum_gap(pt_direct, pt_closed.values) < 1e-10);
    }
}

TEST_CASE("npt region map classifies the parameter plane") {
  RegionGrid small;
  small.nx = 17;
  small.ny = 17;
  const auto samples = npt_region_map(small);
  REQUIRE(samples.size() == 17u * 17u);

  const double dx = (small.x_max - small.x_min) / (small.nx - 1);
  const double dy = (small.y_max - small.y_min) / (small.ny - 1);
  for (int i = 0; i < small.nx; ++i)
    for (int j = 0; j < small.ny; ++j) {
      const RegionSample& s = samples[static_cast<std::size_t>(i) * small.ny + j];
      CHECK(std::abs(s.x - (small.x_min + i * dx)) < 1e-12);
      CHECK(std::abs(s.y - (small.y_min + j * dy)) < 1e-12);

      CHECK(std::abs(s.min_eig_rho - npt_family(s.x, s.y).spectrum.min()) < 1e-10);
      CHECK(std::abs(s.min_eig_pt - npt_pt_spectrum(s.x, s.y).min()) < 1e-10);

      RegionClass expect = RegionClass::Ppt;
      if (s.min_eig_rho < -kPsdTol)
        expect = RegionClass::NotADensity;
      else if (s.min_eig_pt < -kPsdTol)
        expect = RegionClass::NptEntangled;
      CHECK(s.cls == expect);
    }

  auto at = [&](double x, double y) -> const RegionSample& {
    const int i = static_cast<int>(std::lround((x - small.x_min) / dx));
    const int j = static_cast<int>(std::lround((y - small.y_min) / dy));
    return samples[static_cast<std::size_t>(i) * small.ny + j];
  };
  // At y = 0 the state and its partial transpose share a spectrum, so a
  // negative eigenvalue there rules out density and NPT alike.
  CHECK(at(0.2, 0.0).cls == RegionClass::NotADensity);
  CHECK(at(0.05, 0.3).cls == RegionClass::NptEntangled);
  CHECK(at(0.05, 0.0).cls == RegionClass::Ppt);
  // The x = 0 line is symmetric under the y flip, so density implies PPT.
  CHECK(at(0.0, 0.35).cls == RegionClass::Ppt);
  CHECK(at(0.0, 0.0).cls == RegionClass::Ppt);

  CHECK(region_class_name(RegionClass::NotADensity) == std::string("not-a-density"));
  CHECK(region_class_name(RegionClass::Ppt) == std::string("PPT"));
  CHECK(region_class_name(RegionClass::NptEntangled) == std::string("NPT-entangled"));

  RegionGrid empty;
  empty.nx = 0;
  CHECK_THROWS_AS(npt_region_map(empty), EmptyGrid);
  RegionGrid empty_y;
  empty_y.ny = 0;
  CHECK_THROWS_AS(npt_region_map_serial(empty_y), EmptyGrid);
}

TEST_CASE("dropping any single npt term leaves a PPT region") {
  // Variants keep the unit-trace component plus two of the three terms.
  auto variant = [](int drop, double x, double y) {
    CoherenceTensor t(3);
    t.at({{0, 0, 0}}) = 0.5 * kInvSqrt2;
    if (drop != 0) t.at({{1, 2, 2}}) = x;
    if (drop != 1) t.at({{2, 1, 2}}) = x;
    if (drop != 2) t.at({{3, 3, 0}}) = y;
    return t;
  };

  for (int drop : {0, 1, 2})
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const double x = 0.1 * i;
        const double y = 0.1 * j;
        const CoherenceTensor t = variant(drop, x, y);
        if (!is_psd(tensor_to_density(t))) continue;
        for (int q : {0, 1, 2}) CHECK(ppt_test(t, q).ppt);
      }
}

TEST_CASE("family tensors round-trip through matrix form") {
  CHECK(roundtrip_gap(bell().tensor) < 1e-14);
  CHECK(roundtrip_gap(werner(0.37).tensor) < 1e-14);
  CHECK(roundtrip_gap(werner_prime(0.81).tensor) < 1e-14);
  CHECK(roundtrip_gap(tripartite(0.21).tensor) < 1e-14);
  CHECK(roundtrip_gap(upb_family(0.05).tensor) < 1e-14);
  CHECK(roundtrip_gap(npt_family(0.13, -0.22).tensor) < 1e-14);
}
