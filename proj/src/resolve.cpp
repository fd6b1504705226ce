#include "curvelab/resolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace curvelab {

namespace {

int local_mult(const MultiPoly& f) {
  int m = INT32_MAX;
  for (auto& [mono, c] : f.terms()) {
    (void)c;
    m = std::min(m, mono.total_degree());
  }
  return m == INT32_MAX ? -1 : m;
}

// Lowest form coefficient a_{i,j} collector: phi_A(t) = f_m(1, t) and the
// chart-B indicator f_m(0, 1).
UPoly chart_a_poly(const MultiPoly& f, int m) {
  std::vector<uint32_t> cf(m + 1, 0);
  for (auto& [mono, c] : f.terms())
    if (mono.total_degree() == m) cf[mono.e[1]] = c;
  return UPoly(f.field(), std::move(cf));
}

// f(x, x*(y + t0)) / x^m over f's own field.
MultiPoly blow_chart_a(const MultiPoly& f, int m, uint32_t t0) {
  const Field& F = f.field();
  MultiPoly x = MultiPoly::variable(F, 2, 0);
  MultiPoly img_y = x * (MultiPoly::variable(F, 2, 1) +
                         MultiPoly::constant(F, 2, t0));
  MultiPoly sub = f.substitute({x, img_y});
  MultiPoly out(F, 2);
  for (auto& [mono, c] : sub.terms()) {
    if (mono.e[0] < m) throw InternalError("chart A transform not divisible");
    Monomial nm = mono;
    nm.e[0] = uint16_t(mono.e[0] - m);
    out.add_term(nm, c);
  }
  return out;
}

// f(x*y, y) / y^m.
MultiPoly blow_chart_b(const MultiPoly& f, int m) {
  const Field& F = f.field();
  MultiPoly y = MultiPoly::variable(F, 2, 1);
  MultiPoly sub = f.substitute({MultiPoly::variable(F, 2, 0) * y, y});
  MultiPoly out(F, 2);
  for (auto& [mono, c] : sub.terms()) {
    if (mono.e[1] < m) throw InternalError("chart B transform not divisible");
    Monomial nm = mono;
    nm.e[1] = uint16_t(mono.e[1] - m);
    out.add_term(nm, c);
  }
  return out;
}

// Does an m=1 germ have the given coordinate line as tangent?
bool tangent_is_line(const MultiPoly& f, int line_var) {
  // tangent = linear part; it equals {line_var = 0} iff the other variable
  // is absent from the linear part.
  Monomial other;
  other.e[1 - line_var] = 1;
  return f.coeff(other) == 0;
}

void expand(const PlaneCurve& C, ResolveNode& node, int depth, int depth_cap) {
  if (depth > depth_cap)
    throw ResolutionDepthExceeded("blowup depth cap exceeded");
  bool leaf = node.m == 1;
  if (leaf) {
    int exc_var = node.step == ResolveNode::Step::ChartB ? 1 : 0;
    node.exceptional_tangent =
        node.step != ResolveNode::Step::Root && tangent_is_line(node.f, exc_var);
    if (!node.exceptional_tangent) return;
  }
  const Field& F = *node.field;
  UPoly phi = chart_a_poly(node.f, node.m);
  ExtRoots roots = ext_roots(phi);
  if (!roots.complete)
    throw FieldTooLarge("blowup direction beyond the field cap");
  for (auto& r : roots.roots) {
    const Field& cf = r.level == 1 ? F : level_field(C.field(), node.level * r.level);
    MultiPoly fl = r.level == 1 ? node.f : node.f.map_field(embed(F, cf));
    ResolveNode child;
    child.field = &cf;
    child.level = node.level * r.level;
    child.step = ResolveNode::Step::ChartA;
    child.t0 = r.code;
    child.f = blow_chart_a(fl, node.m, r.code);
    child.m = local_mult(child.f);
    if (child.m <= 0) throw InternalError("blowup lost the exceptional point");
    node.children.push_back(std::move(child));
  }
  if (phi.deg() < node.m) {
    // vertical tangent direction: the chart-B origin
    ResolveNode child;
    child.field = &F;
    child.level = node.level;
    child.step = ResolveNode::Step::ChartB;
    child.f = blow_chart_b(node.f, node.m);
    child.m = local_mult(child.f);
    if (child.m <= 0) throw InternalError("blowup lost the exceptional point");
    node.children.push_back(std::move(child));
  }
  for (auto& ch : node.children) expand(C, ch, depth + 1, depth_cap);
}

int tree_depth(const ResolveNode& n) {
  int d = 0;
  for (auto& ch : n.children) d = std::max(d, 1 + tree_depth(ch));
  return d;
}

long long tree_delta(const ResolveNode& n) {
  long long d = (long long)n.m * (n.m - 1) / 2;
  for (auto& ch : n.children) d += tree_delta(ch);
  return d;
}

// ---- truncated power series over a Field ----

struct Series {
  const Field* f;
  std::vector<uint32_t> c;  // size = truncation length

  int order() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i]) return int(i);
    return -1;  // zero to truncation
  }
};

Series s_zero(const Field& f, size_t n) { return {&f, std::vector<uint32_t>(n, 0)}; }

Series s_add(const Series& a, const Series& b) {
  Series r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.f->add(a.c[i], b.c[i]);
  return r;
}

Series s_sub(const Series& a, const Series& b) {
  Series r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.f->sub(a.c[i], b.c[i]);
  return r;
}

Series s_mul(const Series& a, const Series& b) {
  Series r = s_zero(*a.f, a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j + i < b.c.size(); ++j) {
      if (!b.c[j]) continue;
      r.c[i + j] = a.f->add(r.c[i + j], a.f->mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

Series s_scale(const Series& a, uint32_t k) {
  Series r = a;
  for (auto& v : r.c) v = a.f->mul(v, k);
  return r;
}

// Multiplicative inverse; requires a unit constant term.
Series s_inv(const Series& a) {
  if (a.c[0] == 0) throw DivisionByZero("series with zero constant term");
  Series r = s_zero(*a.f, a.c.size());
  uint32_t i0 = a.f->inv(a.c[0]);
  r.c[0] = i0;
  for (size_t k = 1; k < a.c.size(); ++k) {
    uint32_t acc = 0;
    for (size_t i = 1; i <= k; ++i)
      acc = a.f->add(acc, a.f->mul(a.c[i], r.c[k - i]));
    r.c[k] = a.f->neg(a.f->mul(i0, acc));
  }
  return r;
}

Series s_eval(const MultiPoly& g, const Series& X, const Series& Y) {
  const Field& f = *X.f;
  size_t n = X.c.size();
  int dx = std::max(g.deg_var(0), 0), dy = std::max(g.deg_var(1), 0);
  std::vector<Series> px(dx + 1, s_zero(f, n)), py(dy + 1, s_zero(f, n));
  px[0].c[0] = 1;
  py[0].c[0] = 1;
  for (int i = 1; i <= dx; ++i) px[i] = s_mul(px[i - 1], X);
  for (int j = 1; j <= dy; ++j) py[j] = s_mul(py[j - 1], Y);
  Series acc = s_zero(f, n);
  for (auto& [mono, c] : g.terms())
    acc = s_add(acc, s_scale(s_mul(px[mono.e[0]], py[mono.e[1]]), c));
  return acc;
}

// Solves g(x, y) = 0 for the coordinate indexed by solve_var as a series in
// the other coordinate (the parameter t), by Newton iteration; requires a
// unit partial derivative at the origin.
Series newton_solve(const MultiPoly& g, int solve_var, size_t n) {
  const Field& f = g.field();
  MultiPoly gprime = hasse_derivative(g, solve_var, 1);
  Series T = s_zero(f, n);
  if (n > 1) T.c[1] = 1;
  Series Y = s_zero(f, n);
  int iters = 2;
  for (size_t reach = 1; reach < n; reach *= 2) ++iters;
  for (int it = 0; it < iters; ++it) {
    const Series& X = T;
    Series gv = solve_var == 1 ? s_eval(g, X, Y) : s_eval(g, Y, X);
    Series gd = solve_var == 1 ? s_eval(gprime, X, Y) : s_eval(gprime, Y, X);
    Y = s_sub(Y, s_mul(gv, s_inv(gd)));
  }
  return Y;
}

struct LeafPath {
  std::vector<const ResolveNode*> nodes;  // root..leaf
};

void collect_leaves(const ResolveNode& n, std::vector<const ResolveNode*>& path,
                    std::vector<LeafPath>& out) {
  path.push_back(&n);
  if (n.is_leaf()) {
    out.push_back(LeafPath{path});
  } else {
    for (auto& ch : n.children) collect_leaves(ch, path, out);
  }
  path.pop_back();
}

}  // namespace

InfinitelyNearTree resolve_point(const PlaneCurve& C, const ProjPoint& P,
                                 int depth_cap) {
  LocalModel lm = local_model(C, P);
  InfinitelyNearTree t;
  t.center = P;
  t.chart = lm.chart;
  t.root.field = P.field;
  t.root.level = P.level;
  t.root.f = lm.f;
  t.root.m = local_mult(lm.f);
  if (t.root.m <= 0)
    throw InternalError("local model does not vanish at its center");
  expand(C, t.root, 0, depth_cap);
  t.depth = tree_depth(t.root);
  t.delta = tree_delta(t.root);
  return t;
}

long long delta_invariant(const InfinitelyNearTree& t) { return t.delta; }

namespace {
void dot_node(std::ostringstream& os, const ResolveNode& n, int& counter,
              int parent) {
  int id = counter++;
  os << "  n" << id << " [label=\"m=" << n.m << " level=" << n.level << "\"];\n";
  if (parent >= 0) {
    const char* lbl = n.step == ResolveNode::Step::ChartA ? "A" : "B";
    os << "  n" << parent << " -> n" << id << " [label=\"" << lbl << "\"];\n";
  }
  for (auto& ch : n.children) dot_node(os, ch, counter, id);
}
}  // namespace

std::string to_dot(const InfinitelyNearTree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  int counter = 0;
  dot_node(os, t.root, counter, -1);
  os << "}\n";
  return os.str();
}

std::vector<BranchInfo> branches_at(const PlaneCurve& C, const ProjPoint& P,
                                    int depth_cap) {
  InfinitelyNearTree tree = resolve_point(C, P, depth_cap);
  const Field& base = C.field();
  LocalModel lm = local_model(C, P);
  std::vector<LeafPath> leaves;
  {
    std::vector<const ResolveNode*> path;
    collect_leaves(tree.root, path, leaves);
  }
  std::vector<BranchInfo> out;
  size_t trunc = std::max<size_t>(size_t(2 * C.d()), 16);
  for (auto& leaf : leaves) {
    const ResolveNode* L = leaf.nodes.back();
    BranchInfo br;
    br.center = P;
    br.chart = tree.chart;
    br.field = L->field;
    br.level = L->level;
    br.rational = (P.level == 1);
    for (size_t i = 1; i < leaf.nodes.size(); ++i) {
      const ResolveNode* n = leaf.nodes[i];
      if (n->step == ResolveNode::Step::ChartA && n->t0 != 0 &&
          min_level(base, *n->field, n->t0) != 1)
        br.rational = false;
    }
    size_t n = trunc;
    while (true) {
      const Field& F = *L->field;
      // Parametrize the smooth transverse leaf germ.
      Monomial my, mx;
      my.e[1] = 1;
      mx.e[0] = 1;
      int solve_var = L->f.coeff(my) != 0 ? 1 : 0;
      Series solved = newton_solve(L->f, solve_var, n);
      Series T = s_zero(F, n);
      if (n > 1) T.c[1] = 1;
      Series X = solve_var == 1 ? T : solved;
      Series Y = solve_var == 1 ? solved : T;
      // Compose the blowup substitutions from the leaf back to the root.
      for (size_t i = leaf.nodes.size(); i-- > 1;) {
        const ResolveNode* node = leaf.nodes[i];
        // Series currently live over the leaf field; the recentering root
        // needs lifting into it.
        if (node->step == ResolveNode::Step::ChartA) {
          uint32_t t0 = node->t0;
          if (node->field != L->field) t0 = embed(*node->field, F).map(t0);
          Series t0s = s_zero(F, n);
          t0s.c[0] = t0;
          Y = s_mul(X, s_add(Y, t0s));
        } else {
          X = s_mul(X, Y);
        }
      }
      int ox = X.order(), oy = Y.order();
      if (ox < 0 && oy < 0)
        throw InternalError("branch parametrization is identically constant");
      int j1 = (ox < 0) ? oy : (oy < 0 ? ox : std::min(ox, oy));
      bool s_unknown = (ox < 0 || oy < 0);
      // A vanishing coordinate series is exact for line germs; otherwise it
      // may just start beyond the truncation, so extend and retry.
      if (s_unknown && n < 4096 && L->f.degree() > 1) {
        n *= 2;  // a coordinate series may just start beyond the truncation
        continue;
      }
      br.j1 = j1;
      if (!s_unknown) br.s = std::max(ox, oy);
      br.trunc = int(n);
      // Attach the center (in chart-affine coordinates, lifted to the leaf
      // field when the path climbed extensions).
      uint32_t ca = lm.center[0], cb = lm.center[1];
      if (P.field != L->field) {
        const Embedding& e = embed(*P.field, F);
        ca = e.map(ca);
        cb = e.map(cb);
      }
      X.c[0] = F.add(X.c[0], ca);
      Y.c[0] = F.add(Y.c[0], cb);
      br.param_x = X.c;
      br.param_y = Y.c;
      break;
    }
    br.linear = br.j1 == 1;
    br.tame = br.j1 % base.p() != 0;
    out.push_back(std::move(br));
  }
  return out;
}

GlobalBranchCounts branch_counts(const PlaneCurve& C,
                                 const std::vector<SingularPoint>& rational_singular,
                                 long long MqS, int depth_cap) {
  GlobalBranchCounts out;
  out.Bq = MqS;
  out.N1 = MqS;
  for (auto& sp : rational_singular) {
    if (sp.level != 1) continue;
    auto brs = branches_at(C, sp.point, depth_cap);
    out.Bq += (long long)brs.size();
    for (auto& b : brs)
      if (b.rational) ++out.N1;
  }
  return out;
}

}  // namespace curvelab
