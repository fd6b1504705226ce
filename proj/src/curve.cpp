#include "curvelab/curve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

namespace curvelab {

namespace {

uint64_t plane_size(uint64_t Q) { return Q * Q + Q + 1; }

void check_plane_cap(uint64_t Q) {
  if (Q > field_cap() || plane_size(Q) > field_cap())
    throw FieldTooLarge("PG(2," + std::to_string(Q) +
                        ") exceeds the enumeration cap");
}

// Runs fn(i) for i in [0, n) across `workers` threads over disjoint blocks.
void parallel_for(uint64_t n, int workers, const std::function<void(uint64_t)>& fn) {
  if (workers <= 1 || n < 1024) {
    for (uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t block = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    uint64_t lo = w * block, hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Candidate point of PG(2,Q) by scan index, in the canonical order
// (0:0:1), (0:1:c), (1:b:c).
std::array<uint32_t, 3> plane_candidate(uint64_t i, uint64_t Q) {
  if (i == 0) return {0, 0, 1};
  if (i <= Q) return {0, 1, uint32_t(i - 1)};
  uint64_t j = i - Q - 1;
  return {1, uint32_t(j / Q), uint32_t(j % Q)};
}

}  // namespace

ProjPoint make_point(const Field& f, int level, uint32_t x, uint32_t y,
                     uint32_t z) {
  ProjPoint P{&f, level, {x, y, z}};
  for (auto c : P.c)
    if (c != 0) {
      if (c != 1) {
        uint32_t inv = f.inv(c);
        for (auto& v : P.c) v = f.mul(v, inv);
      }
      return P;
    }
  throw InternalError("projective point with all coordinates zero");
}

std::string format_point(const ProjPoint& P) {
  std::ostringstream os;
  os << '(' << format_element(P.field->el(P.c[0])) << " : "
     << format_element(P.field->el(P.c[1])) << " : "
     << format_element(P.field->el(P.c[2])) << ')';
  return os.str();
}

ProjPoint frobenius_point(const ProjPoint& P, const Field& base) {
  ProjPoint R = P;
  for (auto& c : R.c) c = P.field->frobenius(c, base.s());
  return R;  // normalization preserved: Frobenius fixes 0 and 1
}

int point_level(const ProjPoint& P, const Field& base) {
  ProjPoint R = P;
  for (int j = 1;; ++j) {
    R = frobenius_point(R, base);
    if (R == P) return j;
  }
}

PlaneCurve::PlaneCurve(MultiPoly F, bool assert_irreducible)
    : F_(std::move(F)), irreducible_(assert_irreducible) {
  if (F_.is_zero()) throw ZeroPolynomial("curve equation is zero");
  if (F_.arity() != 3 || !F_.is_homogeneous())
    throw NotHomogeneous("curve equation must be homogeneous in x,y,z");
  d_ = F_.degree();
  if (d_ < 1) throw ZeroPolynomial("curve equation must have degree >= 1");
  int p = field().p();
  bool pth = true;
  for (auto& [m, c] : F_.terms()) {
    (void)c;
    for (int v = 0; v < 3; ++v)
      if (m.e[v] % p != 0) pth = false;
  }
  // Over a perfect field all coefficients have p-th roots, so exponent
  // divisibility alone decides.
  if (pth) throw PthPower("curve equation is a p-th power");
  for (int v = 0; v < 3; ++v) partials_[v] = hasse_derivative(F_, v, 1);
  if (d_ > 1) {
    const char* names[3] = {"x", "y", "z"};
    for (int v = 0; v < 3; ++v) {
      bool divides_all = true;
      for (auto& [m, c] : F_.terms()) {
        (void)c;
        if (m.e[v] == 0) divides_all = false;
      }
      if (divides_all)
        warnings_.push_back(std::string("coordinate line ") + names[v] +
                            " = 0 divides the curve equation");
    }
  }
}

const Field& level_field(const Field& base, int level) {
  if (level == 1) return base;
  return build_field(base.p(), base.s() * level);
}

const MultiPoly& PlaneCurve::lifted(int level) const {
  auto it = lift_cache_.find(level);
  if (it == lift_cache_.end()) {
    const Field& ext = level_field(field(), level);
    std::array<MultiPoly, 4> arr;
    if (level == 1) {
      arr = {F_, partials_[0], partials_[1], partials_[2]};
    } else {
      const Embedding& e = embed(field(), ext);
      arr = {F_.map_field(e), partials_[0].map_field(e),
             partials_[1].map_field(e), partials_[2].map_field(e)};
    }
    it = lift_cache_.emplace(level, std::move(arr)).first;
  }
  return it->second[0];
}

const MultiPoly& PlaneCurve::lifted_partial(int var, int level) const {
  lifted(level);
  return lift_cache_.at(level)[var + 1];
}

std::vector<ProjPoint> points_over(const PlaneCurve& C, int k, int workers) {
  const Field& ext = level_field(C.field(), k);
  uint64_t Q = ext.q();
  check_plane_cap(Q);
  const MultiPoly& F = C.lifted(k);
  uint64_t n = plane_size(Q);
  std::vector<char> hit(n, 0);
  parallel_for(n, workers, [&](uint64_t i) {
    auto c = plane_candidate(i, Q);
    hit[i] = (evaluate(F, {c[0], c[1], c[2]}) == 0);
  });
  std::vector<ProjPoint> out;
  for (uint64_t i = 0; i < n; ++i)
    if (hit[i]) {
      auto c = plane_candidate(i, Q);
      out.push_back(ProjPoint{&ext, k, c});
    }
  return out;
}

bool on_curve(const PlaneCurve& C, const ProjPoint& P) {
  return evaluate(C.lifted(P.level), {P.c[0], P.c[1], P.c[2]}) == 0;
}

bool is_smooth_point(const PlaneCurve& C, const ProjPoint& P) {
  if (!on_curve(C, P)) throw PointNotOnCurve(format_point(P));
  for (int v = 0; v < 3; ++v)
    if (evaluate(C.lifted_partial(v, P.level), {P.c[0], P.c[1], P.c[2]}) != 0)
      return true;
  return false;
}

LocalModel local_model(const PlaneCurve& C, const ProjPoint& P) {
  if (!on_curve(C, P)) throw PointNotOnCurve(format_point(P));
  const Field& f = *P.field;
  Chart chart = P.c[2] != 0   ? Chart::Z
                : P.c[1] != 0 ? Chart::Y
                              : Chart::X;
  int ci = int(chart);
  uint32_t inv = f.inv(P.c[ci]);
  // Affine coordinates in the chart, in mpoly's (x,y) convention.
  std::array<uint32_t, 2> center;
  switch (chart) {
    case Chart::Z:
      center = {f.mul(P.c[0], inv), f.mul(P.c[1], inv)};
      break;
    case Chart::Y:
      center = {f.mul(P.c[0], inv), f.mul(P.c[2], inv)};
      break;
    case Chart::X:
      center = {f.mul(P.c[1], inv), f.mul(P.c[2], inv)};
      break;
  }
  MultiPoly aff = dehomogenize(C.lifted(P.level), chart);
  return LocalModel{chart, translate(aff, center[0], center[1]), center};
}

int multiplicity(const PlaneCurve& C, const ProjPoint& P) {
  LocalModel lm = local_model(C, P);
  int m = INT32_MAX;
  for (auto& [mono, c] : lm.f.terms()) {
    (void)c;
    m = std::min(m, mono.total_degree());
  }
  if (m == 0 || m == INT32_MAX)
    throw InternalError("local model does not vanish at its own center");
  return m;
}

TangentLine tangent_line(const PlaneCurve& C, const ProjPoint& P) {
  if (!on_curve(C, P)) throw PointNotOnCurve(format_point(P));
  const Field& f = *P.field;
  std::array<uint32_t, 3> L;
  for (int v = 0; v < 3; ++v)
    L[v] = evaluate(C.lifted_partial(v, P.level), {P.c[0], P.c[1], P.c[2]});
  if (L[0] == 0 && L[1] == 0 && L[2] == 0)
    throw SingularPointError(format_point(P));
  uint32_t inv = 0;
  for (auto c : L)
    if (c != 0) {
      inv = f.inv(c);
      break;
    }
  for (auto& c : L) c = f.mul(c, inv);
  uint32_t at = f.add(f.add(f.mul(L[0], P.c[0]), f.mul(L[1], P.c[1])),
                      f.mul(L[2], P.c[2]));
  if (at != 0) throw InternalError("tangent line misses its point");
  return TangentLine{L, &f, P.level};
}

TangentCone tangent_cone(const PlaneCurve& C, const ProjPoint& P) {
  LocalModel lm = local_model(C, P);
  int m = multiplicity(C, P);
  if (m < 2) throw NotSingular(format_point(P));
  const Field& f = *P.field;
  // Lowest form as a binary form B(u,v); directions u = r v from roots of
  // B(t,1), plus the vertical direction v = 0 when present.
  UPoly phi(f);
  {
    std::vector<uint32_t> cf(m + 1, 0);
    for (auto& [mono, c] : lm.f.terms())
      if (mono.total_degree() == m) cf[mono.e[0]] = c;
    phi = UPoly(f, std::move(cf));
  }
  TangentCone out;
  out.m = m;
  ExtRoots rr = ext_roots(phi);
  out.complete = rr.complete;
  int covered = 0;
  for (auto& r : rr.roots) {
    out.directions.push_back(TangentDirection{r.level, false, r.code, r.mult});
    covered += r.mult;
  }
  if (covered < m && phi.deg() < m) {
    // v^(m - deg phi) factor: the vertical tangent direction.
    out.directions.push_back(TangentDirection{1, true, 0, m - phi.deg()});
    covered += m - phi.deg();
  }
  out.ordinary = out.complete && covered == m &&
                 int(out.directions.size()) == m;
  return out;
}

int line_intersection_multiplicity(const PlaneCurve& C, const ProjPoint& P,
                                   const std::array<uint32_t, 3>& L) {
  const Field& f = *P.field;
  uint32_t at = f.add(f.add(f.mul(L[0], P.c[0]), f.mul(L[1], P.c[1])),
                      f.mul(L[2], P.c[2]));
  if (at != 0) throw LineMissesPoint(format_point(P));
  // Second point spanning the line with P.
  int i = 0;
  while (L[i] == 0) ++i;
  std::array<uint32_t, 3> Q{0, 0, 0};
  bool found = false;
  for (int j = 0; j < 3 && !found; ++j) {
    if (j == i) continue;
    std::array<uint32_t, 3> cand{0, 0, 0};
    cand[j] = 1;
    cand[i] = f.neg(f.div(L[j], L[i]));
    // proportional to P? cross product test
    bool prop = true;
    for (int a = 0; a < 3 && prop; ++a)
      for (int b = a + 1; b < 3 && prop; ++b)
        if (f.sub(f.mul(cand[a], P.c[b]), f.mul(cand[b], P.c[a])) != 0)
          prop = false;
    if (!prop) {
      Q = cand;
      found = true;
    }
  }
  if (!found) throw InternalError("degenerate line parametrization");
  // F(P + t Q) as a univariate in t.
  const MultiPoly& F = C.lifted(P.level);
  std::vector<MultiPoly> images;
  for (int v = 0; v < 3; ++v)
    images.push_back(MultiPoly::constant(f, 2, P.c[v]) +
                     MultiPoly::variable(f, 2, 0).scaled(Q[v]));
  UPoly restr = F.substitute(images).to_upoly(0);
  if (restr.is_zero()) return kInfiniteIntersection;
  int ord = 0;
  while (restr.coeff(ord) == 0) ++ord;
  if (ord == 0) throw InternalError("restriction nonzero at the base point");
  return ord;
}

Counts counts(const PlaneCurve& C, int workers) {
  Counts out;
  for (auto& P : points_over(C, 1, workers)) {
    ++out.Mq;
    if (is_smooth_point(C, P)) ++out.MqS;
  }
  return out;
}

std::vector<SingularPoint> singular_points_over(const PlaneCurve& C, int k_max,
                                                int workers) {
  std::vector<SingularPoint> out;
  const Field& base = C.field();
  for (int k = 1; k <= k_max; ++k) {
    const Field& ext = level_field(base, k);
    uint64_t Q = ext.q();
    check_plane_cap(Q);
    const MultiPoly& F = C.lifted(k);
    std::array<const MultiPoly*, 3> par = {&C.lifted_partial(0, k),
                                           &C.lifted_partial(1, k),
                                           &C.lifted_partial(2, k)};
    uint64_t n = plane_size(Q);
    std::vector<char> hit(n, 0);
    parallel_for(n, workers, [&](uint64_t i) {
      auto c = plane_candidate(i, Q);
      std::vector<uint32_t> pt{c[0], c[1], c[2]};
      if (evaluate(F, pt) != 0) return;
      for (auto* g : par)
        if (evaluate(*g, pt) != 0) return;
      hit[i] = 1;
    });
    std::set<std::array<uint32_t, 3>> seen;
    for (uint64_t i = 0; i < n; ++i) {
      if (!hit[i]) continue;
      auto c = plane_candidate(i, Q);
      ProjPoint P{&ext, k, c};
      if (point_level(P, base) != k) continue;  // reported at a lower level
      if (seen.count(P.c)) continue;
      ProjPoint R = P;
      for (int j = 0; j < k; ++j) {
        seen.insert(R.c);
        R = frobenius_point(R, base);
      }
      out.push_back(SingularPoint{P, k, k, multiplicity(C, P)});
    }
  }
  return out;
}

namespace {

// Sylvester resultant of f and g with respect to `var`, as a univariate in
// the other variable, computed by evaluation/interpolation over an extension
// large enough to supply degree-preserving sample points.
UPoly bivariate_resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  const Field& base = f.field();
  int other = 1 - var;
  int n = f.deg_var(var), m = g.deg_var(var);
  if (m == 0) {
    // Res(f, c) = c^n with c a polynomial in the other variable.
    UPoly c = g.to_upoly(other);
    UPoly r = UPoly::constant(base, 1);
    for (int i = 0; i < n; ++i) r = r * c;
    return r;
  }
  if (n == 0) {
    UPoly c = f.to_upoly(other);
    UPoly r = UPoly::constant(base, 1);
    for (int i = 0; i < m; ++i) r = r * c;
    return r;
  }
  int D = n * g.deg_var(other) + m * f.deg_var(other);
  UPoly lcf = f.leading_coeff_in(var).to_upoly(other);
  UPoly lcg = g.leading_coeff_in(var).to_upoly(other);
  uint64_t need = uint64_t(D) + 1 + lcf.deg() + lcg.deg();
  int K = 1;
  uint64_t Qk = base.q();
  while (Qk < need) {
    Qk *= base.q();
    ++K;
    if (Qk > field_cap())
      throw FieldTooLarge("resultant sample field exceeds the cap");
  }
  const Field& ext = level_field(base, K);
  MultiPoly fe = (K == 1) ? f : f.map_field(embed(base, ext));
  MultiPoly ge = (K == 1) ? g : g.map_field(embed(base, ext));
  UPoly lcfe = fe.leading_coeff_in(var).to_upoly(other);
  UPoly lcge = ge.leading_coeff_in(var).to_upoly(other);
  std::vector<uint32_t> xs, ys;
  for (uint32_t x0 = 0; x0 < ext.q() && int(xs.size()) <= D; ++x0) {
    if (lcfe.eval(x0) == 0 || lcge.eval(x0) == 0) continue;
    UPoly a = fe.partial_eval(other, x0).to_upoly(var);
    UPoly b = ge.partial_eval(other, x0).to_upoly(var);
    xs.push_back(x0);
    ys.push_back(uresultant(a, b));
  }
  if (int(xs.size()) <= D)
    throw InternalError("not enough degree-preserving resultant samples");
  UPoly R = uinterpolate(ext, xs, ys);
  if (K == 1) return R;
  const Embedding& e = embed(base, ext);
  std::vector<uint32_t> down(R.coeffs().size());
  for (size_t i = 0; i < down.size(); ++i) down[i] = e.preimage(R.coeff(int(i)));
  return UPoly(base, std::move(down));
}

// Verifies that the point is genuinely singular and records its Frobenius
// orbit representative (the coordinatewise-minimal orbit member, stored over
// its exact field of definition).
void record_singular_candidate(const PlaneCurve& C, const Field& ptfield,
                               int ptlevel, uint32_t x0, uint32_t y0,
                               uint32_t z0,
                               std::set<std::pair<int, std::array<uint32_t, 3>>>& seen,
                               std::vector<SingularPoint>& out) {
  const Field& base = C.field();
  ProjPoint P = make_point(ptfield, ptlevel, x0, y0, z0);
  std::vector<uint32_t> pt{P.c[0], P.c[1], P.c[2]};
  if (evaluate(C.lifted(ptlevel), pt) != 0) return;
  for (int v = 0; v < 3; ++v)
    if (evaluate(C.lifted_partial(v, ptlevel), pt) != 0) return;
  int lv = point_level(P, base);
  if (lv < ptlevel) {
    // Descend to the exact field of definition.
    const Field& down = level_field(base, lv);
    const Embedding& e = embed(down, ptfield);
    P = ProjPoint{&down, lv,
                  {e.preimage(P.c[0]), e.preimage(P.c[1]), e.preimage(P.c[2])}};
  }
  // Canonical orbit representative: coordinatewise minimum over the orbit.
  ProjPoint rep = P, cur = P;
  for (int j = 1; j < lv; ++j) {
    cur = frobenius_point(cur, base);
    if (cur.c < rep.c) rep = cur;
  }
  if (!seen.insert({lv, rep.c}).second) return;
  out.push_back(SingularPoint{rep, lv, lv, multiplicity(C, rep)});
}

}  // namespace

SingularClosure closure_singular_points(const PlaneCurve& C) {
  const Field& base = C.field();
  SingularClosure out;
  std::set<std::pair<int, std::array<uint32_t, 3>>> seen;
  bool certified = true;

  // --- Affine chart z = 1 ---
  MultiPoly f = dehomogenize(C.F(), Chart::Z);
  std::vector<MultiPoly> gens;
  for (int v = 0; v < 3; ++v) {
    const MultiPoly& g = C.partial(v);
    if (!g.is_zero()) gens.push_back(dehomogenize(g, Chart::Z));
  }
  // Eliminate the variable f actually involves.
  int inner = f.deg_var(1) >= 1 ? 1 : 0;
  int outer = 1 - inner;
  try {
    UPoly r(base);
    bool first = true;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      UPoly rg = bivariate_resultant(f, g, inner);
      r = first ? rg : ugcd(r, rg);
      first = false;
      if (!r.is_zero() && r.deg() == 0) break;
    }
    if (first || r.is_zero()) throw InternalError("degenerate singular-locus eliminant");
    ExtRoots xs = ext_roots(r);
    if (!xs.complete) certified = false;
    for (auto& xr : xs.roots) {
      const Field& ef = level_field(base, xr.level);
      const Embedding* be = xr.level == 1 ? nullptr : &embed(base, ef);
      auto lift2 = [&](const MultiPoly& a) {
        return xr.level == 1 ? a : a.map_field(*be);
      };
      UPoly gy = lift2(f).partial_eval(outer, xr.code).to_upoly(inner);
      if (gy.is_zero()) {
        certified = false;  // a coordinate line inside the curve
        continue;
      }
      for (auto& g : gens) {
        UPoly gg = lift2(g).partial_eval(outer, xr.code).to_upoly(inner);
        if (!gg.is_zero()) gy = ugcd(gy, gg);
      }
      if (gy.deg() < 1) continue;  // no common root above this coordinate
      ExtRoots yroots = ext_roots(gy);
      if (!yroots.complete) certified = false;
      for (auto& yr : yroots.roots) {
        int plevel = xr.level * yr.level;
        double bits =
            double(base.s()) * plevel * std::log2(double(base.p()));
        if (bits > std::log2(double(field_cap())) + 1e-9) {
          certified = false;
          continue;
        }
        const Field& pf = level_field(base, plevel);
        // yr.code already lives in pf (ext_roots of gy was relative to ef);
        // lift the outer coordinate alongside it.
        uint32_t oc = yr.level > 1 ? embed(ef, pf).map(xr.code) : xr.code;
        uint32_t ic = yr.code;
        uint32_t ax = inner == 0 ? ic : oc;
        uint32_t ay = inner == 1 ? ic : oc;
        record_singular_candidate(C, pf, plevel, ax, ay, 1, seen, out.points);
      }
    }
  } catch (const FieldTooLarge&) {
    certified = false;
  } catch (const InternalError&) {
    certified = false;
  }

  // --- Line at infinity z = 0 ---
  {
    // Points (1 : t : 0): all four conditions restricted to the line.
    bool any = false;
    UPoly r(base);
    bool allzero = true;
    auto restrict_line = [&](const MultiPoly& G) {
      UPoly u(base);
      std::vector<uint32_t> cf;
      for (auto& [mono, c] : G.terms()) {
        if (mono.e[2] != 0) continue;
        if (int(cf.size()) <= mono.e[1]) cf.resize(mono.e[1] + 1, 0);
        cf[mono.e[1]] = base.add(cf[mono.e[1]], c);
      }
      return UPoly(base, cf);
    };
    std::vector<UPoly> conds{restrict_line(C.F())};
    for (int v = 0; v < 3; ++v) conds.push_back(restrict_line(C.partial(v)));
    for (auto& u : conds) {
      if (u.is_zero()) continue;
      allzero = false;
      r = any ? ugcd(r, u) : u.monic();
      any = true;
    }
    if (allzero) {
      certified = false;
    } else if (r.deg() >= 1) {
      ExtRoots ts = ext_roots(r);
      if (!ts.complete) certified = false;
      for (auto& t : ts.roots) {
        const Field& pf = level_field(base, t.level);
        record_singular_candidate(C, pf, t.level, 1, t.code, 0, seen,
                                  out.points);
      }
    }
    // The remaining point (0 : 1 : 0).
    bool sing = evaluate(C.F(), {0, 1, 0}) == 0;
    for (int v = 0; v < 3 && sing; ++v)
      sing = evaluate(C.partial(v), {0, 1, 0}) == 0;
    if (sing) record_singular_candidate(C, base, 1, 0, 1, 0, seen, out.points);
  }

  std::sort(out.points.begin(), out.points.end(),
            [](const SingularPoint& a, const SingularPoint& b) {
              if (a.level != b.level) return a.level < b.level;
              return a.point.c < b.point.c;
            });
  out.certified = certified;
  for (auto& sp : out.points) out.max_level = std::max(out.max_level, sp.level);
  return out;
}

}  // namespace curvelab
