#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/mpoly.hpp"

namespace curvelab {

// Point of PG(2, q^level), coordinates over build_field(p, s*level),
// normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  const Field* field = nullptr;
  int level = 1;
  std::array<uint32_t, 3> c{0, 0, 0};

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.field == b.field && a.c == b.c;
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.c < b.c;
  }
};

ProjPoint make_point(const Field& f, int level, uint32_t x, uint32_t y,
                     uint32_t z);
std::string format_point(const ProjPoint& P);

// The q-power Frobenius image (coordinatewise power by q of the base field).
ProjPoint frobenius_point(const ProjPoint& P, const Field& base);
// Minimal j >= 1 with Frob_q^j(P) = P; equals the degree of the point's
// field of definition over GF(q).
int point_level(const ProjPoint& P, const Field& base);

class PlaneCurve {
 public:
  PlaneCurve(MultiPoly F, bool assert_irreducible);

  const MultiPoly& F() const { return F_; }
  int d() const { return d_; }
  const Field& field() const { return F_.field(); }
  bool irreducible_asserted() const { return irreducible_; }
  // Partial derivative with respect to variable var (0=x, 1=y, 2=z).
  const MultiPoly& partial(int var) const { return partials_[var]; }
  // True when a coordinate line divides F (surfaced as a warning upstream).
  const std::vector<std::string>& warnings() const { return warnings_; }

  // F with coefficients pushed into GF(q^level); cached per level.
  const MultiPoly& lifted(int level) const;
  const MultiPoly& lifted_partial(int var, int level) const;

 private:
  MultiPoly F_;
  int d_;
  bool irreducible_;
  std::array<MultiPoly, 3> partials_;
  std::vector<std::string> warnings_;
  mutable std::map<int, std::array<MultiPoly, 4>> lift_cache_;
};

const Field& level_field(const Field& base, int level);

// All points of PG(2, q^k) on the curve, deterministic order
// (0:0:1), (0:1:c), (1:b:c) with c, then b increasing in code order.
std::vector<ProjPoint> points_over(const PlaneCurve& C, int k, int workers = 1);

bool on_curve(const PlaneCurve& C, const ProjPoint& P);
bool is_smooth_point(const PlaneCurve& C, const ProjPoint& P);

// Chart policy: z if P.z != 0, else y, else x. Returns the dehomogenized
// local polynomial translated so P sits at the affine origin, over the
// point's field.
struct LocalModel {
  Chart chart;
  MultiPoly f;  // arity 2, local coordinates centered at P
  std::array<uint32_t, 2> center;  // affine coordinates of P in the chart
};
LocalModel local_model(const PlaneCurve& C, const ProjPoint& P);

int multiplicity(const PlaneCurve& C, const ProjPoint& P);

struct TangentLine {
  std::array<uint32_t, 3> coeffs;  // aX+bY+cZ over the point's field
  const Field* field;
  int level;
};
TangentLine tangent_line(const PlaneCurve& C, const ProjPoint& P);

// One direction of the tangent cone in local chart coordinates: the linear
// form u - root * v (or v when vertical), defined over GF(q^{level*P.level}).
struct TangentDirection {
  int level;       // degree over the point's field
  bool vertical;   // direction v = 0 (local form is the coefficient of u)
  uint32_t root;   // for non-vertical: u = root * v
  int mult;
};
struct TangentCone {
  int m;  // multiplicity of the point
  std::vector<TangentDirection> directions;
  bool ordinary;  // m distinct directions
  bool complete;  // false if a direction lives beyond the field cap
};
TangentCone tangent_cone(const PlaneCurve& C, const ProjPoint& P);

constexpr int kInfiniteIntersection = -1;
// Vanishing order of F restricted to the line L at P; kInfiniteIntersection
// when L is a component. L is given over the point's field.
int line_intersection_multiplicity(const PlaneCurve& C, const ProjPoint& P,
                                   const std::array<uint32_t, 3>& L);

struct Counts {
  long long Mq = 0;
  long long MqS = 0;
};
Counts counts(const PlaneCurve& C, int workers = 1);

struct SingularPoint {
  ProjPoint point;  // orbit representative (first in scan order)
  int level;        // degree of the point over GF(q)
  int orbit_size;   // = level
  int mP;
};

// Scan-based search over PG(2, q^k) for k <= k_max (skipping points already
// seen at proper sub-levels). Deterministic order: by level, then scan order.
std::vector<SingularPoint> singular_points_over(const PlaneCurve& C, int k_max,
                                                int workers = 1);

// Certificate-driven complete list of singular points of the closure, one
// Frobenius orbit representative each. certified = true means the list is
// provably complete (univariate elimination bound on every candidate level).
struct SingularClosure {
  std::vector<SingularPoint> points;
  bool certified = false;
  int max_level = 0;  // largest level among found points
};
SingularClosure closure_singular_points(const PlaneCurve& C);

}  // namespace curvelab
