#include "doctest.h"

#include <vector>

#include "stokes/families.hpp"
#include "stokes/mixtures.hpp"

using namespace stokes;

TEST_CASE("region map: parallel output is bitwise identical to serial") {
  RegionGrid grid;
  grid.nx = 41;
  grid.ny = 37;
  const auto par = npt_region_map(grid);
  const auto ser = npt_region_map_serial(grid);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].x == ser[i].x);
    CHECK(par[i].y == ser[i].y);
    CHECK(par[i].min_eig_rho == ser[i].min_eig_rho);
    CHECK(par[i].min_eig_pt == ser[i].min_eig_pt);
    CHECK(par[i].cls == ser[i].cls);
  }
}

TEST_CASE("separability scan: parallel result is identical to serial") {
  SUBCASE("gadget A, default x grid") {
    ScanGrid grid;
    grid.w_step = 2e-3;
    const ScanResult par = separability_scan(GadgetId::GadgetA, grid);
    const ScanResult ser = separability_scan_serial(GadgetId::GadgetA, grid);
    CHECK(par.best_x == ser.best_x);
    REQUIRE(par.weights.size() == 1);
    REQUIRE(ser.weights.size() == 1);
    CHECK(par.weights[0] == ser.weights[0]);
  }

  SUBCASE("gadget B, coarse weight grid") {
    ScanGrid grid;
    grid.w_step = 1e-2;
    const ScanResult par = separability_scan(GadgetId::GadgetB, grid);
    const ScanResult ser = separability_scan_serial(GadgetId::GadgetB, grid);
    CHECK(par.best_x == ser.best_x);
    REQUIRE(par.weights.size() == 3);
    REQUIRE(ser.weights.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(par.weights[i] == ser.weights[i]);
  }
}
