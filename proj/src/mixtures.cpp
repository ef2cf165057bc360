#include "stokes/mixtures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stokes {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kRadiusTol = 1e-12;

BlochVector axis_factor(int axis, double amp) {
  BlochVector b;
  b.c[0] = kInvSqrt2;
  b.c[axis] = amp;
  return b;
}

BlochVector mixed_factor() { return axis_factor(1, 0.0); }

void require_positive_weight(double w, const char* name) {
  if (!(w > 0.0)) throw BadWeight(std::string("weight ") + name + " must be positive");
}

struct GadgetTargets {
  int axes[3];    // per-qubit axis of the 3-body component
  double body3;   // 3-body target
  double bc;      // 2-body target on qubits (1,2)
  double ac;      // 2-body target on qubits (0,2)
  double ab;      // 2-body target on qubits (0,1)
};

// Nine product terms on the given per-qubit axes whose compile produces
// exactly the four requested components (plus the affine share): paired
// sign flips cancel all 1-body terms, and the amplitudes solve the three
// 2-body equations and the 3-body equation.
void append_nine_term_gadget(Mixture& m, const GadgetTargets& tgt, double w1, double w3,
                             double w5, double w7) {
  const int a = tgt.axes[0], b = tgt.axes[1], c = tgt.axes[2];

  const double amp7 = std::cbrt(tgt.body3 / w7);
  const double bc1 = (kSqrt2 * tgt.bc - w7 * amp7 * amp7) / (2.0 * w1);
  const double ac3 = (kSqrt2 * tgt.ac - w7 * amp7 * amp7) / (2.0 * w3);
  const double ab5 = (tgt.ab / kSqrt2 - w7 * amp7 * amp7) / w5;

  const double b1 = std::sqrt(std::abs(bc1));
  const double c1 = bc1 < 0.0 ? -b1 : b1;
  const double a3 = std::sqrt(std::abs(ac3));
  const double c3 = ac3 < 0.0 ? -a3 : a3;
  const double a5 = std::sqrt(std::abs(ab5));
  const double b5 = ab5 < 0.0 ? -a5 : a5;

  auto term = [&m](double w, BlochVector fa, BlochVector fb, BlochVector fc) {
    m.terms.push_back({w, {fa, fb, fc}});
  };
  term(w1, mixed_factor(), axis_factor(b, b1), axis_factor(c, c1));
  term(w1, mixed_factor(), axis_factor(b, -b1), axis_factor(c, -c1));
  term(w3, axis_factor(a, a3), mixed_factor(), axis_factor(c, c3));
  term(w3, axis_factor(a, -a3), mixed_factor(), axis_factor(c, -c3));
  term(w5, axis_factor(a, a5), axis_factor(b, b5), mixed_factor());
  term(w5, axis_factor(a, -a5), axis_factor(b, -b5), mixed_factor());
  term(w7, axis_factor(a, amp7), axis_factor(b, amp7), axis_factor(c, amp7));
  term(w7, axis_factor(a, -amp7), axis_factor(b, -amp7), mixed_factor());
  term(w7, mixed_factor(), mixed_factor(), axis_factor(c, -amp7));
}

// The four 3-body components of the bound-entangled family and the signs
// of their three 2-body reductions, all with magnitude x.
std::vector<GadgetTargets> upb_gadget_targets(double x) {
  return {
      {{1, 1, 1}, x, -x, -x, -x},
      {{1, 3, 3}, x, x, x, -x},
      {{3, 1, 3}, x, -x, x, x},
      {{3, 3, 1}, x, x, -x, x},
  };
}

}  // namespace

CoherenceTensor compile(const Mixture& m) {
  if (m.n < 1 || m.n > kMaxQubits)
    throw BadDimension("compile: qubit count out of 1.." + std::to_string(kMaxQubits));
  if (m.terms.empty()) throw BadWeight("compile: mixture has no terms");
  double wsum = 0.0;
  for (const auto& term : m.terms) {
    if (static_cast<int>(term.factors.size()) != m.n)
      throw DimensionMismatch("compile: term factor count differs from qubit count");
    wsum += term.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw WeightNotNormalized("compile: weights sum to " + std::to_string(wsum));

  CoherenceTensor t(m.n);
  for (const auto& term : m.terms) {
    for (std::size_t offset = 0; offset < t.size(); ++offset) {
      double prod = term.weight;
      std::size_t rest = offset;
      for (int k = m.n - 1; k >= 0; --k) {
        prod *= term.factors[k].c[rest & 3u];
        rest >>= 2;
      }
      t[offset] += prod;
    }
  }
  return t;
}

Feasibility feasibility(const Mixture& m) {
  Feasibility f;
  for (std::size_t p = 0; p < m.terms.size(); ++p) {
    if (m.terms[p].weight < -1e-14) {
      f.feasible = false;
      if (f.term < 0) f.term = static_cast<int>(p);
    }
    for (std::size_t q = 0; q < m.terms[p].factors.size(); ++q) {
      const double r = m.terms[p].factors[q].radius();
      if (r > f.worst_radius) {
        f.worst_radius = r;
        f.term = static_cast<int>(p);
        f.qubit = static_cast<int>(q);
      }
    }
  }
  if (f.worst_radius > kInvSqrt2 + kRadiusTol) f.feasible = false;
  return f;
}

Mixture reduce(const Mixture& m, const std::vector<int>& traced) {
  std::vector<int> tr = traced;
  std::sort(tr.begin(), tr.end());
  tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
  if (tr.empty() || static_cast<int>(tr.size()) >= m.n)
    throw BadSubset("reduce: traced set must be a nonempty proper subset");
  for (int q : tr)
    if (q < 0 || q >= m.n) throw BadSubset("reduce: qubit index out of range");

  Mixture r;
  r.n = m.n - static_cast<int>(tr.size());
  r.terms.reserve(m.terms.size());
  for (const auto& term : m.terms) {
    MixtureTerm nt;
    nt.weight = term.weight;
    for (int q = 0; q < m.n; ++q)
      if (!std::binary_search(tr.begin(), tr.end(), q)) nt.factors.push_back(term.factors[q]);
    r.terms.push_back(std::move(nt));
  }
  return r;
}

Mixture werner_mixture(double x, bool prime) {
  if (x < 0.0) throw NegativeParameter("werner_mixture: x must be nonnegative");
  const double amp = std::sqrt(1.5 * x);
  // Relative sign of the partner factor per axis.
  const int partner_sign[4] = {0, prime ? 1 : -1, -1, prime ? 1 : -1};

  Mixture m;
  m.n = 2;
  for (int p = 0; p < 6; ++p) {
    const int axis = p % 3 + 1;
    const double a = (p < 3 ? 1.0 : -1.0) * amp;
    m.terms.push_back({1.0 / 6.0, {axis_factor(axis, a), axis_factor(axis, partner_sign[axis] * a)}});
  }
  return m;
}

Mixture gadget_a(double x, double w1) {
  if (!(w1 > 0.0) || !(w1 < 0.125))
    throw BadWeight("gadget_a: w1 must lie strictly between 0 and 1/8");
  const double w7 = (1.0 - 8.0 * w1) / 3.0;

  Mixture m;
  m.n = 3;
  // 2-body targets are all zero: every correlation short of the 3-body
  // component cancels.
  append_nine_term_gadget(m, {{1, 1, 1}, x, 0.0, 0.0, 0.0}, w1, w1, 2.0 * w1, w7);
  return m;
}

Mixture gadget_b(double x, double w1, double w2, double w4) {
  require_positive_weight(w1, "w1");
  require_positive_weight(w2, "w2");
  require_positive_weight(w4, "w4");
  if (std::abs(w1 + 2.0 * w2 + 2.0 * w4 - 1.0) > 1e-12)
    throw BadWeight("gadget_b: w1 + 2*w2 + 2*w4 must equal 1");

  // Solve the cancellation equations: the doubled term 4/5 pair carries
  // the full 3-body component, term 1 absorbs the axis-C 1-body leak and
  // the anti-aligned pair 2/3 absorbs the AB correlation.
  const double g4 = std::cbrt(x / (2.0 * w4));
  const double g1 = -2.0 * w4 * g4 / w1;
  const double a2 = std::sqrt(std::cbrt(x * x * w4 / 4.0) / w2);

  Mixture m;
  m.n = 3;
  auto term = [&m](double w, BlochVector fa, BlochVector fb, BlochVector fc) {
    m.terms.push_back({w, {fa, fb, fc}});
  };
  term(w1, mixed_factor(), mixed_factor(), axis_factor(1, g1));
  term(w2, axis_factor(1, a2), axis_factor(1, -a2), mixed_factor());
  term(w2, axis_factor(1, -a2), axis_factor(1, a2), mixed_factor());
  term(w4, axis_factor(1, g4), axis_factor(1, g4), axis_factor(1, g4));
  term(w4, axis_factor(1, -g4), axis_factor(1, -g4), axis_factor(1, g4));
  return m;
}

Mixture upb_mixture_36(double x, std::span<const double> weights) {
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(36, 1.0 / 36.0);
  if (w.size() != 36) throw BadWeight("upb_mixture_36: expected 36 weights");
  double sum = 0.0;
  for (double v : w) {
    if (!(v > 0.0)) throw BadWeight("upb_mixture_36: weights must be positive");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw WeightNotNormalized("upb_mixture_36: weights sum to " + std::to_string(sum));
  for (int g = 0; g < 4; ++g) {
    const double* gw = w.data() + 9 * g;
    const bool paired = gw[0] == gw[1] && gw[2] == gw[3] && gw[4] == gw[5] &&
                        gw[6] == gw[7] && gw[7] == gw[8];
    if (!paired)
      throw BadWeight("upb_mixture_36: weights must be constant within each gadget pair group");
  }

  Mixture m;
  m.n = 3;
  const auto targets = upb_gadget_targets(x);
  for (int g = 0; g < 4; ++g) {
    const double* gw = w.data() + 9 * g;
    append_nine_term_gadget(m, targets[g], gw[0], gw[2], gw[4], gw[6]);
  }
  return m;
}

double gadget_a_x_bound(double w1) {
  if (!(w1 > 0.0) || !(w1 < 0.125))
    throw BadWeight("gadget_a_x_bound: w1 must lie strictly between 0 and 1/8");
  const double w7 = (1.0 - 8.0 * w1) / 3.0;
  return std::min(std::sqrt(w1 * w1 * w1 / w7), w7 / (2.0 * kSqrt2));
}

double gadget_b_x_bound(double w1, double w2, double w4) {
  require_positive_weight(w1, "w1");
  require_positive_weight(w2, "w2");
  require_positive_weight(w4, "w4");
  const double b1 = w1 * w1 * w1 / (8.0 * kSqrt2 * w4 * w4);
  const double b2 = std::sqrt(w2 * w2 * w2 / (2.0 * w4));
  const double b3 = w4 / kSqrt2;
  return std::min({b1, b2, b3});
}

namespace {

struct WeightPoint {
  std::vector<double> weights;
  double bound;
};

std::vector<WeightPoint> scan_weight_grid(GadgetId id, const ScanGrid& grid) {
  std::vector<WeightPoint> points;
  if (id == GadgetId::GadgetA) {
    for (long k = 1;; ++k) {
      const double w1 = static_cast<double>(k) * grid.w_step;
      if (w1 >= 0.125) break;
      points.push_back({{w1}, gadget_a_x_bound(w1)});
    }
  } else {
    for (long i = 1;; ++i) {
      const double w2 = static_cast<double>(i) * grid.w_step;
      if (w2 >= 0.5) break;
      for (long j = 1;; ++j) {
        const double w4 = static_cast<double>(j) * grid.w_step;
        const double w1 = 1.0 - 2.0 * w2 - 2.0 * w4;
        if (w1 <= 1e-12) break;
        points.push_back({{w1, w2, w4}, gadget_b_x_bound(w1, w2, w4)});
      }
    }
  }
  return points;
}

Mixture build_gadget(GadgetId id, double x, const std::vector<double>& w) {
  return id == GadgetId::GadgetA ? gadget_a(x, w[0]) : gadget_b(x, w[0], w[1], w[2]);
}

// Top feasible x grid index for one weight point: the closed-form bound
// proposes a candidate and the built mixture confirms it (stepping down
// if the boundary case disagrees).
long best_x_index(GadgetId id, const WeightPoint& p, const ScanGrid& grid) {
  const long k_max = static_cast<long>(std::floor(grid.x_max / grid.x_step + 1e-9));
  long k = static_cast<long>(std::floor(p.bound / grid.x_step + 1e-9));
  k = std::min(k, k_max);
  while (k > 0 && !feasibility(build_gadget(id, static_cast<double>(k) * grid.x_step, p.weights))
                       .feasible)
    --k;
  return k;
}

ScanResult scan_impl(GadgetId id, const ScanGrid& grid, bool parallel) {
  if (!(grid.x_step > 0.0) || !(grid.x_max > 0.0) || !(grid.w_step > 0.0))
    throw EmptyGrid("separability_scan: grid steps must be positive");
  const std::vector<WeightPoint> points = scan_weight_grid(id, grid);
  if (points.empty()) throw EmptyGrid("separability_scan: weight grid is empty");

  std::vector<long> best(points.size(), 0);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(points.size()); ++i)
      best[i] = best_x_index(id, points[i], grid);
  } else {
    for (long i = 0; i < static_cast<long>(points.size()); ++i)
      best[i] = best_x_index(id, points[i], grid);
  }

  // Deterministic merge in grid order; ties go to the lexicographically
  // smallest weight vector.
  std::size_t winner = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (best[i] > best[winner] ||
        (best[i] == best[winner] && points[i].weights < points[winner].weights))
      winner = i;
  }
  return {static_cast<double>(best[winner]) * grid.x_step, points[winner].weights};
}

}  // namespace

ScanResult separability_scan(GadgetId id, const ScanGrid& grid) {
  return scan_impl(id, grid, true);
}

ScanResult separability_scan_serial(GadgetId id, const ScanGrid& grid) {
  return scan_impl(id, grid, false);
}

}  // namespace stokes
