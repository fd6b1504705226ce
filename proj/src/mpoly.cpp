#include "curvelab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace curvelab {

namespace {
void check_compat(const MultiPoly& a, const MultiPoly& b) {
  if (&a.field() != &b.field())
    throw FieldMismatch("polynomials over different fields");
  if (a.arity() != b.arity())
    throw ArityMismatch("polynomials of different arity");
}
const char kVarNames[3] = {'x', 'y', 'z'};
}  // namespace

MultiPoly::MultiPoly(const Field& f, int arity) : field_(&f), arity_(arity) {
  if (arity != 2 && arity != 3) throw ArityMismatch("arity must be 2 or 3");
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int MultiPoly::deg_var(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

uint32_t MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Monomial& m, uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const Field& f, int arity, uint32_t c) {
  MultiPoly r(f, arity);
  r.add_term(Monomial{}, c);
  return r;
}

MultiPoly MultiPoly::variable(const Field& f, int arity, int var) {
  if (var < 0 || var >= arity) throw ArityMismatch("variable index out of range");
  MultiPoly r(f, arity);
  Monomial m;
  m.e[var] = 1;
  r.add_term(m, 1);
  return r;
}

MultiPoly MultiPoly::scaled(uint32_t c) const {
  MultiPoly r(*field_, arity_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_->mul(v, c));
  return r;
}

MultiPoly MultiPoly::map_field(const Embedding& e) const {
  if (e.source != field_) throw FieldMismatch("embedding source mismatch");
  MultiPoly r(*e.target, arity_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, e.map(v));
  return r;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(*field_, arity_);
  if (k < 0) return r;
  for (const auto& [m, v] : terms_) {
    if (int(m.e[var]) != k) continue;
    Monomial n = m;
    n.e[var] = 0;
    r.terms_.emplace(n, v);
  }
  return r;
}

MultiPoly MultiPoly::partial_eval(int var, uint32_t value) const {
  MultiPoly r(*field_, arity_);
  for (const auto& [m, v] : terms_) {
    Monomial n = m;
    n.e[var] = 0;
    r.add_term(n, field_->mul(v, field_->pow(value, m.e[var])));
  }
  return r;
}

UPoly MultiPoly::to_upoly(int var) const {
  std::vector<uint32_t> c(size_t(deg_var(var) + 1), 0);
  for (const auto& [m, v] : terms_) {
    for (int i = 0; i < arity_; ++i)
      if (i != var && m.e[i] != 0)
        throw VariableAbsent("polynomial is not univariate in the given variable");
    c[m.e[var]] = v;
  }
  return UPoly(*field_, std::move(c));
}

MultiPoly MultiPoly::from_upoly(const UPoly& u, int arity, int var) {
  MultiPoly r(u.field(), arity);
  for (int i = 0; i <= u.deg(); ++i) {
    if (u.coeff(i) == 0) continue;
    Monomial m;
    m.e[var] = uint16_t(i);
    r.terms_.emplace(m, u.coeff(i));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (int(images.size()) != arity_)
    throw ArityMismatch("substitute needs one image per variable");
  const Field& f = *field_;
  int out_arity = images[0].arity();
  // cache powers of each image
  std::vector<std::vector<MultiPoly>> pows(arity_);
  for (int v = 0; v < arity_; ++v) {
    pows[v].push_back(MultiPoly::constant(f, out_arity, 1));
    int dv = deg_var(v);
    for (int e = 1; e <= dv; ++e) pows[v].push_back(pows[v].back() * images[v]);
  }
  MultiPoly r(f, out_arity);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(f, out_arity, c);
    for (int v = 0; v < arity_; ++v)
      if (m.e[v] != 0) t = t * pows[v][m.e[v]];
    r = r + t;
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_compat(a, b);
  MultiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.field(), a.arity());
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, a.field().neg(c));
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compat(a, b);
  const Field& f = a.field();
  MultiPoly r(f, a.arity());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < 3; ++i) m.e[i] = uint16_t(ma.e[i] + mb.e[i]);
      r.add_term(m, f.mul(ca, cb));
    }
  }
  return r;
}

MultiPoly mpow(const MultiPoly& a, int n) {
  if (n < 0) throw Error("negative polynomial power");
  MultiPoly r = MultiPoly::constant(a.field(), a.arity(), 1);
  MultiPoly base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

uint32_t evaluate(const MultiPoly& f, const std::vector<uint32_t>& pt,
                  const Embedding* emb) {
  if (int(pt.size()) != f.arity())
    throw ArityMismatch("point arity does not match polynomial");
  const Field& tf = emb ? *emb->target : f.field();
  if (emb && emb->source != &f.field())
    throw FieldMismatch("embedding does not start at the coefficient field");
  uint32_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    uint32_t t = emb ? emb->map(c) : c;
    for (int v = 0; v < f.arity(); ++v)
      if (m.e[v] != 0) t = tf.mul(t, tf.pow(pt[v], m.e[v]));
    acc = tf.add(acc, t);
  }
  return acc;
}

int binomial_mod_p(long long n, long long k, int p) {
  if (k < 0 || k > n) return 0;
  auto inv_mod = [p](long long a) {
    long long r = 1, b = a % p, e = p - 2;  // Fermat
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  long long r = 1;
  while (n > 0 || k > 0) {
    long long nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    for (long long i = 1; i <= kd; ++i)
      r = r % p * ((nd - i + 1) % p) % p * inv_mod(i) % p;
    n /= p;
    k /= p;
  }
  return int(r % p);
}

MultiPoly hasse_derivative(const MultiPoly& f, int var, int k) {
  if (k < 0) throw Error("negative Hasse order");
  if (k == 0) return f;
  const Field& fld = f.field();
  MultiPoly r(fld, f.arity());
  for (const auto& [m, c] : f.terms()) {
    if (int(m.e[var]) < k) continue;
    int b = binomial_mod_p(m.e[var], k, fld.p());
    if (b == 0) continue;
    Monomial n = m;
    n.e[var] = uint16_t(m.e[var] - k);
    r.add_term(n, fld.mul(c, fld.from_int(b)));
  }
  return r;
}

MultiPoly translate(const MultiPoly& f, uint32_t a, uint32_t b) {
  if (f.arity() != 2) throw ArityMismatch("translate expects arity 2");
  const Field& fld = f.field();
  std::vector<MultiPoly> images = {
      MultiPoly::variable(fld, 2, 0) + MultiPoly::constant(fld, 2, a),
      MultiPoly::variable(fld, 2, 1) + MultiPoly::constant(fld, 2, b)};
  return f.substitute(images);
}

MultiPoly homogenize(const MultiPoly& f, int d) {
  if (f.arity() != 2) throw ArityMismatch("homogenize expects arity 2");
  if (d < f.degree()) throw DegreeTooSmall("homogenization degree below deg f");
  MultiPoly r(f.field(), 3);
  for (const auto& [m, c] : f.terms()) {
    Monomial n;
    n.e[0] = m.e[0];
    n.e[1] = m.e[1];
    n.e[2] = uint16_t(d - m.e[0] - m.e[1]);
    r.add_term(n, c);
  }
  return r;
}

MultiPoly dehomogenize(const MultiPoly& F, Chart chart) {
  if (F.arity() != 3) throw ArityMismatch("dehomogenize expects arity 3");
  if (!F.is_homogeneous()) throw NotHomogeneous("input is not homogeneous");
  int cv = int(chart);
  int keep[2];
  int k = 0;
  for (int v = 0; v < 3; ++v)
    if (v != cv) keep[k++] = v;
  MultiPoly r(F.field(), 2);
  for (const auto& [m, c] : F.terms()) {
    Monomial n;
    n.e[0] = m.e[keep[0]];
    n.e[1] = m.e[keep[1]];
    r.add_term(n, c);
  }
  return r;
}

PseudoDivision pseudo_divrem(const MultiPoly& h, const MultiPoly& f, int var) {
  check_compat(h, f);
  if (f.is_zero()) throw ZeroDivisor("pseudo-division by zero");
  int df = f.deg_var(var);
  if (df < 1) throw VariableAbsent("divisor has no positive degree in variable");
  const Field& fld = f.field();
  MultiPoly lc = f.leading_coeff_in(var);
  PseudoDivision out{MultiPoly::zero(fld, f.arity()), h, 0};
  while (!out.remainder.is_zero() && out.remainder.deg_var(var) >= df) {
    int dr = out.remainder.deg_var(var);
    MultiPoly lr = out.remainder.coeff_of(var, dr);
    MultiPoly shift = MultiPoly::zero(fld, f.arity());
    for (const auto& [m, c] : lr.terms()) {
      Monomial n = m;
      n.e[var] = uint16_t(dr - df);
      shift.add_term(n, c);
    }
    out.remainder = lc * out.remainder - shift * f;
    out.quotient = lc * out.quotient + shift;
    out.power += 1;
    if (!out.remainder.is_zero() && out.remainder.deg_var(var) >= dr)
      throw InternalError("pseudo-division failed to reduce degree");
  }
  return out;
}

bool divides(const MultiPoly& f, const MultiPoly& h, int var) {
  if (h.is_zero()) return true;
  return pseudo_divrem(h, f, var).remainder.is_zero();
}

int divisibility_var(const MultiPoly& f) {
  int best = -1, bestdeg = 0;
  for (int v = 0; v < f.arity(); ++v) {
    int d = f.deg_var(v);
    if (d > bestdeg) {
      bestdeg = d;
      best = v;
    }
  }
  if (best < 0) throw VariableAbsent("constant polynomial in divisibility test");
  return best;
}

// --- parsing ---

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Field& f, int arity)
      : t_(text), f_(f), arity_(arity) {}

  MultiPoly parse() {
    skip();
    MultiPoly acc(f_, arity_);
    bool neg = accept('-');
    acc = acc + signed_term(neg);
    skip();
    while (pos_ < t_.size()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc = acc + signed_term(c == '-');
        skip();
      } else {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
    }
    return acc;
  }

 private:
  MultiPoly signed_term(bool neg) {
    MultiPoly t = term();
    return neg ? -t : t;
  }

  MultiPoly term() {
    skip();
    if (pos_ >= t_.size()) throw SyntaxError("expected term", pos_);
    char c = peek();
    uint32_t coeff = 1;
    bool have_coeff = false;
    if (isdigit(c) || c == 'g' || c == '[') {
      coeff = coefficient();
      have_coeff = true;
      skip();
      if (!accept('*')) {
        MultiPoly r(f_, arity_);
        r.add_term(Monomial{}, coeff);
        return r;
      }
      skip();
    }
    Monomial m = monom();
    MultiPoly r(f_, arity_);
    r.add_term(m, coeff);
    (void)have_coeff;
    return r;
  }

  Monomial monom() {
    Monomial m;
    bool any = false;
    while (true) {
      skip();
      char c = peek();
      int var = -1;
      if (c == 'x') var = 0;
      else if (c == 'y') var = 1;
      else if (c == 'z') var = 2;
      if (var < 0) break;
      if (var >= arity_)
        throw SyntaxError(std::string("variable '") + c +
                              "' not allowed at this arity",
                          pos_);
      ++pos_;
      int e = 1;
      skip();
      if (accept('^')) e = int(uint_lit());
      m.e[var] = uint16_t(m.e[var] + e);
      any = true;
      skip();
      if (!accept('*')) break;
    }
    if (!any) throw SyntaxError("expected monomial", pos_);
    return m;
  }

  uint32_t coefficient() {
    skip();
    char c = peek();
    if (c == 'g') {
      ++pos_;
      long long k = 1;
      skip();
      if (accept('^')) k = long(uint_lit());
      if (f_.s() == 1)
        throw SyntaxError("'g' coefficients need an extension field", pos_);
      uint32_t g = f_.from_digits({0, 1});
      return f_.pow(g, k);
    }
    if (c == '[') {
      ++pos_;
      std::vector<int> d;
      while (true) {
        skip();
        d.push_back(int(uint_lit() % uint64_t(f_.p())));
        skip();
        if (accept(',')) continue;
        if (accept(']')) break;
        throw SyntaxError("expected ',' or ']' in coefficient", pos_);
      }
      if (int(d.size()) > f_.s())
        throw SyntaxError("too many coefficients for field", pos_);
      return f_.from_digits(d);
    }
    if (isdigit(c)) return f_.from_int(long(uint_lit() % uint64_t(f_.p())));
    throw SyntaxError("bad coefficient", pos_);
  }

  uint64_t uint_lit() {
    skip();
    if (pos_ >= t_.size() || !isdigit(peek()))
      throw SyntaxError("expected unsigned integer", pos_);
    uint64_t v = 0;
    while (pos_ < t_.size() && isdigit(peek())) v = v * 10 + (t_[pos_++] - '0');
    return v;
  }

  void skip() {
    while (pos_ < t_.size() && isspace(t_[pos_])) ++pos_;
  }
  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& t_;
  const Field& f_;
  int arity_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const Field& f, int arity) {
  return Parser(text, f, arity).parse();
}

std::string format_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // graded-lex descending
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool has_vars = m.total_degree() > 0;
    if (c != 1 || !has_vars) {
      os << format_element(f.field().el(c));
      if (has_vars) os << '*';
    }
    bool fv = true;
    for (int v = 0; v < 3; ++v) {
      if (m.e[v] == 0) continue;
      if (!fv) os << '*';
      fv = false;
      os << kVarNames[v];
      if (m.e[v] > 1) os << '^' << m.e[v];
    }
  }
  return os.str();
}

}  // namespace curvelab
