// Timing harness for the two parallel kernels vs their serial references.
#include <chrono>
#include <cstdio>

#include "stokes/families.hpp"
#include "stokes/mixtures.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
  using namespace stokes;

  {
    RegionGrid grid;
    grid.nx = grid.ny = 301;
    auto t0 = Clock::now();
    const auto serial = npt_region_map_serial(grid);
    auto t1 = Clock::now();
    const auto parallel = npt_region_map(grid);
    auto t2 = Clock::now();
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].cls == parallel[i].cls &&
             serial[i].min_eig_rho == parallel[i].min_eig_rho &&
             serial[i].min_eig_pt == parallel[i].min_eig_pt;
    const double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("region 301x301      serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n",
                ts, tp, ts / tp, same ? "yes" : "NO");
  }

  {
    ScanGrid grid;
    grid.w_step = 2e-3;
    auto t0 = Clock::now();
    const ScanResult serial = separability_scan_serial(GadgetId::GadgetB, grid);
    auto t1 = Clock::now();
    const ScanResult parallel = separability_scan(GadgetId::GadgetB, grid);
    auto t2 = Clock::now();
    const bool same =
        serial.best_x == parallel.best_x && serial.weights == parallel.weights;
    const double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("scan gadget-b       serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n",
                ts, tp, ts / tp, same ? "yes" : "NO");
  }

  return 0;
}
