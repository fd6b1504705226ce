#include "curvelab/frobclass.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace curvelab {

Chart fnc_chart(const PlaneCurve& C) {
  for (Chart chart : {Chart::Z, Chart::Y, Chart::X}) {
    int v = int(chart);
    bool divides_all = true;
    for (auto& [m, c] : C.F().terms()) {
      (void)c;
      if (m.e[v] == 0) divides_all = false;
    }
    if (!divides_all) return chart;
  }
  throw InternalError("every coordinate line divides the curve equation");
}

bool fnc_test_in_chart(const PlaneCurve& C, Chart chart) {
  if (C.d() == 1) return true;
  const Field& F = C.field();
  uint64_t q = F.q();
  if (q > 60000) throw FieldTooLarge("q too large for the criterion exponent");
  MultiPoly f = dehomogenize(C.F(), chart);
  MultiPoly fx = hasse_derivative(f, 0, 1);
  MultiPoly fy = hasse_derivative(f, 1, 1);
  if (fx.is_zero() && fy.is_zero())
    throw InternalError("affine model with vanishing gradient");
  MultiPoly x = MultiPoly::variable(F, 2, 0);
  MultiPoly y = MultiPoly::variable(F, 2, 1);
  MultiPoly h = (mpow(x, int(q)) - x) * fx + (mpow(y, int(q)) - y) * fy;
  return divides(f, h, divisibility_var(f));
}

bool fnc_test(const PlaneCurve& C) {
  return fnc_test_in_chart(C, fnc_chart(C));
}

bool frobenius_tangency(const PlaneCurve& C, const ProjPoint& P) {
  TangentLine t = tangent_line(C, P);
  ProjPoint img = frobenius_point(P, C.field());
  const Field& f = *P.field;
  uint32_t v = 0;
  for (int i = 0; i < 3; ++i) v = f.add(v, f.mul(t.coeffs[i], img.c[i]));
  return v == 0;
}

Epsilon2Result epsilon2(const PlaneCurve& C, int samples, int k_max,
                        uint64_t seed) {
  const Field& base = C.field();
  std::mt19937 rng{uint32_t(seed)};
  // Levels whose plane fits under the cap.
  std::vector<int> levels;
  for (int k = 1; k <= k_max; ++k) {
    double bits = double(base.s()) * k * std::log2(double(base.p()));
    if (bits <= std::log2(double(field_cap())) + 1e-9) levels.push_back(k);
  }
  if (levels.empty()) throw FieldTooLarge("no usable sampling level");
  std::vector<int> values;
  int attempts_left = samples * 60;
  for (int i = 0; int(values.size()) < samples && attempts_left > 0; ++i) {
    // Mostly sample the deepest level (special points, which can only
    // overestimate, thin out there); every fourth sample cycles the lower
    // levels so small fields still contribute.
    int k = (i % 4 == 3) ? levels[(i / 4) % levels.size()] : levels.back();
    const Field& ext = level_field(base, k);
    const MultiPoly& Fk = C.lifted(k);
    MultiPoly f = dehomogenize(Fk, Chart::Z);
    bool got = false;
    while (!got && attempts_left-- > 0) {
      uint32_t x0 = uint32_t(rng() % ext.q());
      UPoly fy = f.partial_eval(0, x0).to_upoly(1);
      if (fy.deg() < 1) continue;
      auto roots = uroots(fy);
      if (roots.empty()) continue;
      uint32_t y0 = roots[rng() % roots.size()].first;
      ProjPoint P = make_point(ext, k, x0, y0, 1);
      if (!is_smooth_point(C, P)) continue;
      TangentLine t = tangent_line(C, P);
      int im = line_intersection_multiplicity(C, P, t.coeffs);
      if (im == kInfiniteIntersection) continue;
      values.push_back(im);
      got = true;
    }
  }
  if (values.empty())
    throw NotEnoughPoints("no smooth sample points found for epsilon2");
  Epsilon2Result out;
  out.value = *std::min_element(values.begin(), values.end());
  long long hits = std::count(values.begin(), values.end(), out.value);
  out.used_samples = int(values.size());
  out.confidence = double(hits) / double(values.size());
  return out;
}

FrobeniusVerdict frobenius_order(const PlaneCurve& C, int samples, int k_max,
                                 uint64_t seed) {
  FrobeniusVerdict v;
  v.seed = seed;
  v.chart_used = fnc_chart(C);
  v.degenerate = C.d() == 1;
  v.fnc = fnc_test_in_chart(C, v.chart_used);
  if (v.degenerate) {
    // A line has order sequence (0, 1): no second order to estimate.
    v.epsilon2 = 1;
    v.confidence = 1.0;
    v.nu = 1;
    return v;
  }
  Epsilon2Result e = epsilon2(C, samples, k_max, seed);
  v.epsilon2 = e.value;
  v.confidence = e.confidence;
  v.samples = e.used_samples;
  v.nu = v.fnc ? v.epsilon2 : 1;
  if (v.fnc) {
    int p = C.field().p();
    int t = v.epsilon2;
    while (t % p == 0) t /= p;
    v.nu_is_p_power = (t == 1);
  }
  return v;
}

}  // namespace curvelab
