#include "curvelab/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace curvelab {

namespace {
const Field& same_field(const UPoly& a, const UPoly& b) {
  if (&a.field() != &b.field())
    throw FieldMismatch("univariate operands over different fields");
  return a.field();
}
}  // namespace

uint32_t UPoly::eval(uint32_t x0) const {
  const Field& f = *field_;
  uint32_t v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = f.add(f.mul(v, x0), c_[i]);
  return v;
}

UPoly UPoly::derivative() const {
  const Field& f = *field_;
  std::vector<uint32_t> d;
  if (c_.size() > 1) {
    d.resize(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
      uint32_t k = f.from_int(long(i) % f.p());
      d[i - 1] = f.mul(c_[i], k);
    }
  }
  return UPoly(f, std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lc()));
}

UPoly UPoly::scaled(uint32_t k) const {
  const Field& f = *field_;
  std::vector<uint32_t> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = f.mul(c_[i], k);
  return UPoly(f, std::move(d));
}

UPoly UPoly::shifted(int n) const {
  if (is_zero()) return *this;
  std::vector<uint32_t> d(c_.size() + n, 0);
  std::copy(c_.begin(), c_.end(), d.begin() + n);
  return UPoly(*field_, std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const Field& f = same_field(a, b);
  std::vector<uint32_t> d(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < d.size(); ++i) d[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
  return UPoly(f, std::move(d));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  const Field& f = same_field(a, b);
  std::vector<uint32_t> d(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < d.size(); ++i) d[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
  return UPoly(f, std::move(d));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  const Field& f = same_field(a, b);
  if (a.is_zero() || b.is_zero()) return UPoly(f);
  std::vector<uint32_t> d(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      d[i + j] = f.add(d[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return UPoly(f, std::move(d));
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
  const Field& f = same_field(a, b);
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  std::vector<uint32_t> r(a.coeffs());
  int db = b.deg();
  uint32_t lcinv = f.inv(b.lc());
  if (int(r.size()) - 1 < db) return {UPoly(f), UPoly(f, std::move(r))};
  std::vector<uint32_t> q(r.size() - db, 0);
  for (int i = int(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    uint32_t c = f.mul(r[i], lcinv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeff(j)));
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly umod(const UPoly& a, const UPoly& b) { return udivrem(a, b).second; }

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly upowmod(UPoly base, uint64_t e, const UPoly& m) {
  const Field& f = base.field();
  UPoly r = UPoly::constant(f, 1);
  base = umod(base, m);
  while (e > 0) {
    if (e & 1) r = umod(r * base, m);
    base = umod(base * base, m);
    e >>= 1;
  }
  return r;
}

UPoly ufrobpow(const UPoly& m, uint64_t Q, int k) {
  const Field& f = m.field();
  UPoly r = UPoly::x(f);
  for (int i = 0; i < k; ++i) r = upowmod(std::move(r), Q, m);
  return r;
}

UPoly squarefree_part(const UPoly& a) {
  const Field& f = a.field();
  if (a.deg() <= 0) return a.monic();
  UPoly d = a.derivative();
  if (d.is_zero()) {
    // a = g(x^p); take the p-th root coefficientwise and recurse
    int p = f.p();
    std::vector<uint32_t> g((a.deg() / p) + 1, 0);
    for (int i = 0; i <= a.deg(); i += p)
      g[i / p] = f.frobenius(a.coeff(i), long(f.s()) - 1);
    return squarefree_part(UPoly(f, std::move(g)));
  }
  UPoly g = ugcd(a, d);
  if (g.deg() == 0) return a.monic();
  UPoly sf = udivrem(a, g).first;
  // g can still hide factors whose multiplicity is divisible by p
  UPoly rest = squarefree_part(g);
  UPoly shared = ugcd(sf, rest);
  UPoly extra = udivrem(rest, shared).first;
  return (sf * extra).monic();
}

std::vector<std::pair<int, UPoly>> distinct_degree_split(const UPoly& a,
                                                         uint64_t Q) {
  const Field& f = a.field();
  std::vector<std::pair<int, UPoly>> out;
  UPoly rem = a.monic();
  if (rem.deg() <= 0) return out;
  UPoly h = UPoly::x(f);
  int d = 0;
  while (rem.deg() > 0 && 2 * (d + 1) <= rem.deg()) {
    ++d;
    h = upowmod(std::move(h), Q, rem);
    UPoly g = ugcd(h - UPoly::x(f), rem);
    if (g.deg() > 0) {
      out.emplace_back(d, g);
      rem = udivrem(rem, g).first;
      h = umod(h, rem);
    }
  }
  if (rem.deg() > 0) out.emplace_back(rem.deg(), rem);
  return out;
}

std::vector<std::pair<uint32_t, int>> uroots(const UPoly& a) {
  const Field& f = a.field();
  std::vector<std::pair<uint32_t, int>> out;
  if (a.deg() < 1) return out;
  UPoly cur = a;
  for (uint32_t i = 0; i < f.q() && cur.deg() >= 1; ++i) {
    uint32_t x0 = f.enum_code(i);
    if (cur.eval(x0) != 0) continue;
    UPoly lin(f, {f.neg(x0), 1});
    int mult = 0;
    while (true) {
      auto [q, r] = udivrem(cur, lin);
      if (!r.is_zero()) break;
      cur = std::move(q);
      ++mult;
    }
    out.emplace_back(x0, mult);
  }
  return out;
}

uint32_t uresultant(UPoly a, UPoly b) {
  const Field& f = same_field(a, b);
  if (a.is_zero() || b.is_zero()) return 0;
  uint32_t res = 1;
  bool negate = false;
  while (b.deg() > 0) {
    int da = a.deg(), db = b.deg();
    UPoly rem = umod(a, b);
    if (rem.is_zero()) return 0;
    int dr = rem.deg();
    if ((da & 1) && (db & 1)) negate = !negate;
    res = f.mul(res, f.pow(b.lc(), da - dr));
    a = std::move(b);
    b = std::move(rem);
  }
  res = f.mul(res, f.pow(b.coeff(0), a.deg()));
  return negate ? f.neg(res) : res;
}

UPoly uinterpolate(const Field& f, const std::vector<uint32_t>& xs,
                   const std::vector<uint32_t>& ys) {
  UPoly acc(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    UPoly li = UPoly::constant(f, 1);
    uint32_t denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * UPoly(f, {f.neg(xs[j]), 1});
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    acc = acc + li.scaled(f.mul(ys[i], f.inv(denom)));
  }
  return acc;
}

UPoly umap(const UPoly& a, const Embedding& e) {
  std::vector<uint32_t> d(a.coeffs().size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = e.map(a.coeff(int(i)));
  return UPoly(*e.target, std::move(d));
}

ExtRoots ext_roots(const UPoly& a, int max_level) {
  ExtRoots out;
  if (a.is_zero() || a.deg() == 0) return out;
  const Field& base = a.field();
  UPoly sf = squarefree_part(a);
  auto dd = distinct_degree_split(sf, base.q());
  for (auto& [e, prod] : dd) {
    if (max_level >= 0 && e > max_level) {
      out.complete = false;
      continue;
    }
    // Roots of the degree-e part have degree exactly e over the base field.
    double bits = double(base.s()) * e * std::log2(double(base.p()));
    if (bits > std::log2(double(field_cap())) + 1e-9) {
      out.complete = false;
      continue;
    }
    const Field& ext = (e == 1) ? base : build_field(base.p(), base.s() * e);
    UPoly lifted = (e == 1) ? a : umap(a, embed(base, ext));
    UPoly plift = (e == 1) ? prod : umap(prod, embed(base, ext));
    for (auto& [code, mult] : uroots(plift)) {
      (void)mult;  // prod is squarefree; read multiplicity off the original
      int m = 0;
      UPoly rest = lifted;
      UPoly lin(ext, {ext.neg(code), 1});
      while (true) {
        auto [q, r] = udivrem(rest, lin);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++m;
      }
      out.roots.push_back({e, code, m});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const ExtRoot& x, const ExtRoot& y) {
              return std::tie(x.level, x.code) < std::tie(y.level, y.code);
            });
  return out;
}

}  // namespace curvelab
