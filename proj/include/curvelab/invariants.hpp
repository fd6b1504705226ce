#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/frobclass.hpp"
#include "curvelab/resolve.hpp"

namespace curvelab {

struct GenusResult {
  long long g_star = 0;
  // Geometric genus; g_lo == g_hi when certified, otherwise the interval
  // allowed by the unexhausted polar Bezout budget.
  long long g_lo = 0;
  long long g_hi = 0;
  bool certified = false;

  // Exact genus; throws GenusUncertain when only an interval is known.
  long long g() const;
};

// (d-1)(d-2)/2 minus m(m-1)/2 over the GF(q)-rational singular points.
long long virtual_genus(int d, const std::vector<SingularPoint>& rational_singular);

// Per-orbit resolution data for one singular point of the closure.
struct SingularReport {
  SingularPoint sp;
  long long delta = 0;
  bool ordinary = false;
  // All tangent directions defined over the base field (only meaningful for
  // rational centers).
  bool tangents_rational = false;
  std::vector<BranchInfo> branches;
};

// g_hi from the found singular points; when `certified` is false the lower
// end absorbs the remaining polar Bezout budget d(d-1) - sum m(m-1).
GenusResult genus_from_closure(int d, const std::vector<SingularReport>& closure,
                               bool certified);

long long bound_hv(int d, long long q);
// floor((nu(2g-2) + (q+2)d)/2); requires the exact genus.
long long bound_sv(int d, long long g, long long q, int nu);
// d(q-d+2) + 2(g*-g) + sum m(m-2) over rational singular points.
long long bound_main(int d, long long q, const GenusResult& gr,
                     const std::vector<SingularReport>& closure);
// floor(q + 1 + 2g*sqrt(q)) / floor(1 + q + (d-1)(d-2)*sqrt(q)), exact
// integer square roots (sqrt(q) need not be an integer).
long long bound_hasse_weil_genus(long long q, long long g);
long long bound_hasse_weil_arith(long long q, int d);

struct Bounds {
  long long hv = 0;
  std::optional<long long> sv;     // absent when the genus is uncertain
  std::optional<long long> main;   // likewise
  std::optional<long long> hw_genus;
  long long hw_arith = 0;
};

struct Verdict {
  std::string id;
  bool evaluated = false;  // false: gated out (renders as holds = null)
  bool holds = true;
  bool equality = false;
  std::string notes;
};

struct AnalyzeOptions {
  int samples = 40;    // epsilon2 sample budget
  int k_max = 3;       // epsilon2 sampling depth
  uint64_t seed = 0;
  int workers = 1;
  int depth_cap = 32;
};

struct CurveReport {
  const Field* field = nullptr;
  int d = 0;
  std::string curve_text;
  Counts counts;
  long long Bq = 0;
  long long N1 = 0;
  GenusResult genus;
  FrobeniusVerdict frob;
  std::vector<SingularReport> singular;  // closure orbit representatives
  bool singular_certified = false;
  Bounds bounds;
  std::vector<Verdict> verdicts;
  // Branch summaries over the closure singular points.
  bool all_branches_linear = true;
  bool all_rational_branches_linear = true;
  bool all_rational_branches_tame = true;
};

// Evaluates the fixed claim registry (ineq0, lemma_Bq, main0, main1, cor0,
// cor1, small_d_sv, sv, proof_chain) against an assembled report.
std::vector<Verdict> verdicts(const CurveReport& r);

bool all_evaluated_hold(const std::vector<Verdict>& v);

// Full pipeline: counts, certified singular closure, resolution, Frobenius
// order, genus, bounds, verdicts.
CurveReport analyze(const PlaneCurve& C, const AnalyzeOptions& opts = {});

}  // namespace curvelab
