#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

// One infinitely near point in the blowup resolution of a singular point.
// Local data lives over `field`; the node was reached from its parent by the
// recorded step (chart A recenters y at t0 after (x,y) -> (x,xy); chart B is
// the vertical direction (x,y) -> (xy,y)).
struct ResolveNode {
  enum class Step { Root, ChartA, ChartB };
  int m = 1;
  const Field* field = nullptr;
  int level = 1;  // degree of field over the curve's base field
  MultiPoly f;    // strict transform, vanishing at the local origin
  Step step = Step::Root;
  uint32_t t0 = 0;
  // True for m = 1 nodes whose tangent is the exceptional line (these are
  // blown up further so every leaf is transverse).
  bool exceptional_tangent = false;
  std::vector<ResolveNode> children;

  bool is_leaf() const { return children.empty(); }
};

struct InfinitelyNearTree {
  ProjPoint center;
  Chart chart;
  ResolveNode root;
  int depth = 0;          // longest chain of blowups
  long long delta = 0;    // sum of m(m-1)/2 over all nodes
};

// Resolves the point by successive blowups until every strict-transform
// point is smooth and transverse to the exceptional line. Smooth points get
// the trivial one-node tree.
InfinitelyNearTree resolve_point(const PlaneCurve& C, const ProjPoint& P,
                                 int depth_cap = 32);

long long delta_invariant(const InfinitelyNearTree& t);

std::string to_dot(const InfinitelyNearTree& t, const std::string& name);

struct BranchInfo {
  ProjPoint center;
  Chart chart;              // affine chart of the parametrization
  int j1 = 1;               // branch order
  std::optional<int> s;     // second exponent (j1 <= s); absent when the
                            // second coordinate series vanishes to truncation
  bool linear = false;      // j1 == 1
  bool tame = false;        // p does not divide j1
  bool rational = false;    // fixed by the q-Frobenius
  const Field* field = nullptr;  // field of the series coefficients
  int level = 1;                 // its degree over the base field
  std::vector<uint32_t> param_x, param_y;  // truncated series, includes the
                                           // center as the constant term
  int trunc = 0;
};

std::vector<BranchInfo> branches_at(const PlaneCurve& C, const ProjPoint& P,
                                    int depth_cap = 32);

struct GlobalBranchCounts {
  long long Bq = 0;
  long long N1 = 0;
};

// B_q = M_q^S + sum of branch counts over rational singular points;
// N1 = M_q^S + sum of rational-branch counts over rational singular points.
GlobalBranchCounts branch_counts(const PlaneCurve& C,
                                 const std::vector<SingularPoint>& rational_singular,
                                 long long MqS, int depth_cap = 32);

}  // namespace curvelab
