#include "curvelab/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace curvelab {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor(sqrt(n)) for n >= 0, exact.
long long isqrt(long long n) {
  if (n < 0) throw InternalError("isqrt of negative value");
  long long r = (long long)sqrtl((long double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

long long GenusResult::g() const {
  if (!certified) throw GenusUncertain("genus known only as an interval");
  return g_hi;
}

long long virtual_genus(int d, const std::vector<SingularPoint>& rational_singular) {
  long long g = (long long)(d - 1) * (d - 2) / 2;
  for (const auto& sp : rational_singular)
    g -= (long long)sp.mP * (sp.mP - 1) / 2;
  return g;
}

GenusResult genus_from_closure(int d, const std::vector<SingularReport>& closure,
                               bool certified) {
  GenusResult r;
  std::vector<SingularPoint> rational;
  long long g = (long long)(d - 1) * (d - 2) / 2;
  long long budget_used = 0;
  for (const auto& s : closure) {
    g -= (long long)s.sp.orbit_size * s.delta;
    budget_used += (long long)s.sp.orbit_size * s.sp.mP * (s.sp.mP - 1);
    if (s.sp.level == 1) rational.push_back(s.sp);
  }
  r.g_star = virtual_genus(d, rational);
  r.g_hi = g;
  r.certified = certified;
  if (certified) {
    r.g_lo = g;
  } else {
    long long budget = (long long)d * (d - 1) - budget_used;
    r.g_lo = std::max(0LL, g - floordiv(budget, 2));
  }
  return r;
}

long long bound_hv(int d, long long q) { return (long long)d * (q - d + 2); }

long long bound_sv(int d, long long g, long long q, int nu) {
  return floordiv(nu * (2 * g - 2) + (q + 2) * d, 2);
}

long long bound_main(int d, long long q, const GenusResult& gr,
                     const std::vector<SingularReport>& closure) {
  long long b = bound_hv(d, q) + 2 * (gr.g_star - gr.g());
  for (const auto& s : closure)
    if (s.sp.level == 1) b += (long long)s.sp.mP * (s.sp.mP - 2);
  return b;
}

long long bound_hasse_weil_genus(long long q, long long g) {
  // floor(2g*sqrt(q)) = isqrt(4g^2 q)
  return q + 1 + isqrt(4 * g * g * q);
}

long long bound_hasse_weil_arith(long long q, int d) {
  long long pa2 = (long long)(d - 1) * (d - 2);
  return 1 + q + isqrt(pa2 * pa2 * q);
}

std::vector<Verdict> verdicts(const CurveReport& r) {
  std::vector<Verdict> out;
  const long long q = r.field->q();
  const int d = r.d;
  const long long Mq = r.counts.Mq, MqS = r.counts.MqS, Bq = r.Bq, N1 = r.N1;
  const bool fnc = r.frob.fnc;
  const bool g_ok = r.genus.certified;
  const long long hv = bound_hv(d, q);

  bool smooth = r.singular.empty();
  long long sum_mP_rational = 0;  // over rational singular points
  bool all_rational = true, all_ordinary = true, all_tangents_rational = true;
  for (const auto& s : r.singular) {
    if (s.sp.level == 1) sum_mP_rational += s.sp.mP;
    if (s.sp.level != 1) all_rational = false;
    if (!s.ordinary) all_ordinary = false;
    if (!s.tangents_rational) all_tangents_rational = false;
  }
  const long long sum_mP = MqS + sum_mP_rational;  // over all of PG(2,q)

  auto add = [&out](const std::string& id) -> Verdict& {
    out.push_back(Verdict{id, false, true, false, ""});
    return out.back();
  };

  {
    Verdict& v = add("ineq0");
    v.evaluated = true;
    v.holds = MqS <= Mq && Mq <= Bq && MqS <= N1 && N1 <= Bq;
    v.equality = (MqS == Bq);
  }
  {
    Verdict& v = add("lemma_Bq");
    if (fnc && g_ok) {
      v.evaluated = true;
      long long tame_floor = (q - 1) * d - (2 * r.genus.g() - 2);
      v.holds = Bq >= tame_floor;
      v.equality = (Bq == tame_floor);
      if (!r.all_rational_branches_tame)
        v.notes = "equality condition not applicable (wild rational-centered branch)";
      else if (v.equality && !r.all_rational_branches_linear)
        v.notes = "equality with a nonlinear rational-centered branch";
    } else {
      v.notes = fnc ? "not evaluated: genus uncertain" : "not evaluated: curve is Frobenius classical";
    }
  }
  {
    Verdict& v = add("main0");
    if (fnc && g_ok && r.bounds.main) {
      v.evaluated = true;
      v.holds = MqS >= *r.bounds.main;
      v.equality = (MqS == *r.bounds.main);
      if (v.equality != r.all_branches_linear) {
        v.holds = false;
        v.notes = "FINDING: numeric equality disagrees with branch linearity";
      }
    } else {
      v.notes = fnc ? "not evaluated: genus uncertain" : "not evaluated: curve is Frobenius classical";
    }
  }
  {
    Verdict& v = add("main1");
    if (fnc) {
      v.evaluated = true;
      v.holds = Mq >= hv;
      v.equality = (Mq == hv);
      if (v.equality != smooth) {
        v.holds = false;
        v.notes = "FINDING: numeric equality disagrees with smoothness";
      }
    } else {
      v.notes = "not evaluated: curve is Frobenius classical";
    }
  }
  {
    Verdict& v = add("cor0");
    if (fnc && r.singular_certified && all_rational && all_ordinary &&
        all_tangents_rational) {
      v.evaluated = true;
      long long expect = hv;
      for (const auto& s : r.singular)
        expect += (long long)s.sp.mP * (s.sp.mP - 1);
      v.holds = (N1 == expect);
      v.equality = v.holds;
    } else if (!fnc) {
      v.notes = "not evaluated: curve is Frobenius classical";
    } else {
      v.notes = "not evaluated: hypotheses (ordinary rational singularities with rational tangents) not established";
    }
  }
  {
    Verdict& v = add("cor1");
    if (fnc && d > 1) {
      v.evaluated = true;
      long long dm1 = d - 1;
      v.holds = dm1 * dm1 >= q;
      v.equality = (dm1 * dm1 == q);
      if (v.equality) v.notes = "Hermitian candidate (d = sqrt(q) + 1)";
    } else {
      v.notes = fnc ? "not evaluated: degenerate line" : "not evaluated: curve is Frobenius classical";
    }
  }
  {
    Verdict& v = add("small_d_sv");
    if (d > 1 && (long long)d * d <= q && g_ok) {
      v.evaluated = true;
      long long b = bound_sv(d, r.genus.g(), q, 1);
      v.holds = N1 <= b;
      v.equality = (N1 == b);
    } else if (d <= 1 || (long long)d * d > q) {
      v.notes = "not evaluated: requires 1 < d <= sqrt(q)";
    } else {
      v.notes = "not evaluated: genus uncertain";
    }
  }
  {
    Verdict& v = add("sv");
    if (d > 1 && g_ok && r.bounds.sv) {
      v.evaluated = true;
      v.holds = N1 <= *r.bounds.sv;
      v.equality = (N1 == *r.bounds.sv);
    } else {
      v.notes = d > 1 ? "not evaluated: genus uncertain" : "not evaluated: degenerate line";
    }
  }
  {
    Verdict& v = add("proof_chain");
    if (g_ok && r.bounds.main) {
      v.evaluated = true;
      long long g = r.genus.g();
      bool identity = (MqS - *r.bounds.main) == (sum_mP - ((q - 1) * d - (2 * g - 2)));
      bool branch_part = (Bq == sum_mP) == r.all_rational_branches_linear;
      v.holds = identity && branch_part;
      v.equality = (Bq == sum_mP);
      if (!identity) v.notes = "FINDING: multiplicity-sum identity failed";
      else if (!branch_part)
        v.notes = "FINDING: B_q = sum m_P disagrees with rational-branch linearity";
    } else {
      v.notes = "not evaluated: genus uncertain";
    }
  }
  return out;
}

bool all_evaluated_hold(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (x.evaluated && !x.holds) return false;
  return true;
}

CurveReport analyze(const PlaneCurve& C, const AnalyzeOptions& opts) {
  CurveReport r;
  r.field = &C.field();
  r.d = C.d();
  r.curve_text = format_poly(C.F());
  r.counts = counts(C, opts.workers);

  SingularClosure sc = closure_singular_points(C);
  r.singular_certified = sc.certified;
  long long branches_rational_centers = 0;
  long long rational_branches = 0;
  for (const auto& sp : sc.points) {
    SingularReport s;
    s.sp = sp;
    s.delta = delta_invariant(resolve_point(C, sp.point, opts.depth_cap));
    TangentCone tc = tangent_cone(C, sp.point);
    s.ordinary = tc.ordinary;
    s.tangents_rational = sp.level == 1;
    for (const auto& dir : tc.directions)
      if (dir.level != 1) s.tangents_rational = false;
    s.branches = branches_at(C, sp.point, opts.depth_cap);
    for (const auto& b : s.branches) {
      if (!b.linear) r.all_branches_linear = false;
      if (sp.level == 1) {
        ++branches_rational_centers;
        if (!b.linear) r.all_rational_branches_linear = false;
        if (!b.tame) r.all_rational_branches_tame = false;
        if (b.rational) ++rational_branches;
      }
    }
    r.singular.push_back(std::move(s));
  }
  r.Bq = r.counts.MqS + branches_rational_centers;
  r.N1 = r.counts.MqS + rational_branches;

  r.genus = genus_from_closure(r.d, r.singular, sc.certified);
  r.frob = frobenius_order(C, opts.samples, opts.k_max, opts.seed);

  r.bounds.hv = bound_hv(r.d, r.field->q());
  r.bounds.hw_arith = bound_hasse_weil_arith(r.field->q(), r.d);
  if (r.genus.certified) {
    r.bounds.sv = bound_sv(r.d, r.genus.g(), r.field->q(), r.frob.nu);
    r.bounds.main = bound_main(r.d, r.field->q(), r.genus, r.singular);
    r.bounds.hw_genus = bound_hasse_weil_genus(r.field->q(), r.genus.g());
  }
  r.verdicts = verdicts(r);
  return r;
}

}  // namespace curvelab
