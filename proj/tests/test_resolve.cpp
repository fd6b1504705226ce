#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvelab/resolve.hpp"

using namespace curvelab;

namespace {

const char* kSexticForm =
    "x^4*y^2 + x^2*y^4 + x^4*y*z + x*y^4*z + x^4*z^2 + x^2*y^2*z^2 + y^4*z^2 "
    "+ x^2*z^4 + x*y*z^4 + y^2*z^4";

PlaneCurve sextic() {
  return PlaneCurve(parse_poly(kSexticForm, build_field(2, 2), 3), true);
}

PlaneCurve c2() {
  return PlaneCurve(
      parse_poly("x^13 + 2*y^13 + 2*y^9*z^4 + 2*y^3*z^10 + 2*y*z^12 + z^13",
                 build_field(3, 3), 3),
      true);
}

// f(x(t), y(t)) must vanish modulo t^trunc: truncated tails only contribute
// at orders >= trunc.
void check_param(const PlaneCurve& C, const BranchInfo& br) {
  const Field& F = *br.field;
  const MultiPoly* fc = nullptr;
  MultiPoly chart_poly = dehomogenize(
      br.level == 1 && &C.field() == &F
          ? C.F()
          : C.F().map_field(embed(C.field(), F)),
      br.chart);
  fc = &chart_poly;
  MultiPoly X(F, 2), Y(F, 2);
  for (size_t i = 0; i < br.param_x.size(); ++i) {
    Monomial m;
    m.e[0] = uint16_t(i);
    X.add_term(m, br.param_x[i]);
    Y.add_term(m, br.param_y[i]);
  }
  MultiPoly val = fc->substitute({X, Y});
  for (auto& [mono, c] : val.terms()) {
    (void)c;
    CHECK(mono.e[0] >= br.trunc);
  }
}

}  // namespace

TEST_CASE("node resolution: sextic at (0:0:1)") {
  PlaneCurve S = sextic();
  ProjPoint P = make_point(S.field(), 1, 0, 0, 1);
  InfinitelyNearTree t = resolve_point(S, P);
  CHECK(t.depth == 1);
  CHECK(t.root.m == 2);
  CHECK(t.root.children.size() == 2);
  CHECK(delta_invariant(t) == 1);

  auto brs = branches_at(S, P);
  REQUIRE(brs.size() == 2);
  int j1sum = 0;
  for (auto& b : brs) {
    CHECK(b.linear);
    CHECK(b.tame);
    CHECK(b.rational);
    j1sum += b.j1;
    check_param(S, b);
  }
  CHECK(j1sum == 2);
}

TEST_CASE("cusp") {
  const Field& f5 = build_field(5, 1);
  PlaneCurve cusp(parse_poly("y^2*z - x^3", f5, 3), true);
  ProjPoint P = make_point(f5, 1, 0, 0, 1);
  InfinitelyNearTree t = resolve_point(cusp, P);
  CHECK(t.depth == 2);
  CHECK(delta_invariant(t) == 1);
  auto brs = branches_at(cusp, P);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].j1 == 2);
  REQUIRE(brs[0].s.has_value());
  CHECK(*brs[0].s == 3);
  CHECK(!brs[0].linear);
  CHECK(brs[0].tame);  // p = 5 does not divide 2
  CHECK(brs[0].rational);
  check_param(cusp, brs[0]);

  // same cusp over GF(2): p | j1, wild
  const Field& f2 = build_field(2, 1);
  PlaneCurve cusp2(parse_poly("y^2*z + x^3", f2, 3), true);
  auto brs2 = branches_at(cusp2, make_point(f2, 1, 0, 0, 1));
  REQUIRE(brs2.size() == 1);
  CHECK(brs2[0].j1 == 2);
  CHECK(!brs2[0].tame);
  check_param(cusp2, brs2[0]);
}

TEST_CASE("tacnode") {
  const Field& f5 = build_field(5, 1);
  PlaneCurve tac(parse_poly("y^2*z^2 - x^4", f5, 3), false);
  ProjPoint P = make_point(f5, 1, 0, 0, 1);
  InfinitelyNearTree t = resolve_point(tac, P);
  CHECK(delta_invariant(t) == 2);
  auto brs = branches_at(tac, P);
  REQUIRE(brs.size() == 2);
  for (auto& b : brs) {
    CHECK(b.j1 == 1);
    CHECK(b.linear);
    check_param(tac, b);
  }
}

TEST_CASE("ordinary triple point") {
  const Field& f5 = build_field(5, 1);
  PlaneCurve tri(parse_poly("x^3*z + y^3*z + x^4", f5, 3), true);
  ProjPoint P = make_point(f5, 1, 0, 0, 1);
  InfinitelyNearTree t = resolve_point(tri, P);
  CHECK(t.depth == 1);
  CHECK(t.root.m == 3);
  CHECK(t.root.children.size() == 3);
  CHECK(delta_invariant(t) == 3);
  auto brs = branches_at(tri, P);
  REQUIRE(brs.size() == 3);
  int rational = 0, j1sum = 0;
  for (auto& b : brs) {
    CHECK(b.linear);
    CHECK(b.tame);
    j1sum += b.j1;
    if (b.rational) ++rational;
    check_param(tri, b);
  }
  CHECK(j1sum == 3);
  // t^3 = -1 has one root in GF(5) and a conjugate pair in GF(25)
  CHECK(rational == 1);
}

TEST_CASE("linear implies tame everywhere produced") {
  PlaneCurve S = sextic();
  for (auto& sp : singular_points_over(S, 1))
    for (auto& b : branches_at(S, sp.point)) {
      if (b.linear) CHECK(b.tame);
    }
}

TEST_CASE("smooth point: trivial tree") {
  const Field& f5 = build_field(5, 1);
  PlaneCurve conic(parse_poly("y*z - x^2", f5, 3), true);
  ProjPoint P = make_point(f5, 1, 0, 0, 1);
  InfinitelyNearTree t = resolve_point(conic, P);
  CHECK(t.depth == 0);
  CHECK(t.root.m == 1);
  CHECK(delta_invariant(t) == 0);
  auto brs = branches_at(conic, P);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].linear);
  CHECK(brs[0].rational);
  check_param(conic, brs[0]);
}

TEST_CASE("C2 singular orbit: delta 12, one branch of order 3") {
  PlaneCurve C = c2();
  SingularClosure sc = closure_singular_points(C);
  REQUIRE(sc.points.size() == 1);
  InfinitelyNearTree t = resolve_point(C, sc.points[0].point);
  CHECK(delta_invariant(t) == 12);
  auto brs = branches_at(C, sc.points[0].point);
  REQUIRE(brs.size() == 1);
  CHECK(brs[0].j1 == 3);
  CHECK(!brs[0].tame);       // p = 3 divides j1
  CHECK(!brs[0].rational);   // non-rational center
  check_param(C, brs[0]);
}

TEST_CASE("global branch counts") {
  PlaneCurve S = sextic();
  auto sing = singular_points_over(S, 1);
  Counts c = counts(S);
  GlobalBranchCounts gb = branch_counts(S, sing, c.MqS);
  CHECK(gb.Bq == c.MqS + 14);
  CHECK(gb.N1 == 14);

  // smooth curve: B_q = N1 = M_q
  const Field& f4 = build_field(2, 2);
  PlaneCurve fermat(parse_poly("x^3 + y^3 + z^3", f4, 3), true);
  Counts cf = counts(fermat);
  GlobalBranchCounts gf = branch_counts(fermat, {}, cf.MqS);
  CHECK(gf.Bq == cf.Mq);
  CHECK(gf.N1 == 9);
}

TEST_CASE("dot export") {
  const Field& f5 = build_field(5, 1);
  PlaneCurve cusp(parse_poly("y^2*z - x^3", f5, 3), true);
  std::string dot =
      to_dot(resolve_point(cusp, make_point(f5, 1, 0, 0, 1)), "cusp");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("m=2") != std::string::npos);
}
