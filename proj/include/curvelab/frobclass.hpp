#pragma once

#include <cstdint>

#include "curvelab/curve.hpp"

namespace curvelab {

struct FrobeniusVerdict {
  bool fnc = false;
  bool degenerate = false;  // d == 1: trivially nonclassical
  Chart chart_used = Chart::Z;
  int epsilon2 = 2;
  double confidence = 0.0;
  int nu = 1;
  bool nu_is_p_power = true;  // surfaced as a warning when false
  uint64_t seed = 0;
  int samples = 0;
};

// The divisibility criterion: in a chart whose line is not a component,
// f | (x^q - x) f_x + (y^q - y) f_y.
bool fnc_test(const PlaneCurve& C);
bool fnc_test_in_chart(const PlaneCurve& C, Chart chart);
// First chart (Z, Y, X) whose coordinate line does not divide F.
Chart fnc_chart(const PlaneCurve& C);

// Does the q-Frobenius image of the smooth point P lie on its tangent line?
bool frobenius_tangency(const PlaneCurve& C, const ProjPoint& P);

struct Epsilon2Result {
  int value = 2;
  double confidence = 0.0;
  int used_samples = 0;
};

// Sampled estimate of the generic tangent-line intersection multiplicity:
// min over sampled smooth points (levels cycling 1..k_max) of
// i(C.T_P; P). Deterministic for a fixed seed; single-threaded by design.
Epsilon2Result epsilon2(const PlaneCurve& C, int samples = 40, int k_max = 3,
                        uint64_t seed = 0);

FrobeniusVerdict frobenius_order(const PlaneCurve& C, int samples = 40,
                                 int k_max = 3, uint64_t seed = 0);

}  // namespace curvelab
