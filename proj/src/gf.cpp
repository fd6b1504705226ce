#include "curvelab/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace curvelab {

uint64_t field_cap() {
  static uint64_t cap = [] {
    if (const char* env = std::getenv("CURVELAB_CAP")) {
      uint64_t v = std::strtoull(env, nullptr, 10);
      if (v > 0) return v;
    }
    return uint64_t(1) << 20;
  }();
  return cap;
}

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- minimal univariate arithmetic over GF(p) for the modulus search ---
using PfPoly = std::vector<int>;  // coeff of x^i at index i, trimmed

void pf_trim(PfPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PfPoly pf_mod(PfPoly a, const PfPoly& f, int p) {
  // f monic
  while (a.size() >= f.size() && !a.empty()) {
    int c = a.back();
    size_t shift = a.size() - f.size();
    if (c != 0) {
      for (size_t i = 0; i < f.size(); ++i) {
        int v = a[shift + i] - c * f[i];
        a[shift + i] = ((v % p) + p) % p;
      }
    }
    a.pop_back();
    pf_trim(a);
  }
  return a;
}

PfPoly pf_mulmod(const PfPoly& a, const PfPoly& b, const PfPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  PfPoly t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  pf_trim(t);
  return pf_mod(std::move(t), f, p);
}

PfPoly pf_powmod(PfPoly base, long long e, const PfPoly& f, int p) {
  PfPoly r = {1};
  while (e > 0) {
    if (e & 1) r = pf_mulmod(r, base, f, p);
    base = pf_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PfPoly pf_gcd(PfPoly a, PfPoly b, int p) {
  while (!b.empty()) {
    // make b monic for pf_mod
    int lc = b.back();
    if (lc != 1) {
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (t * lc % p == 1) { inv = t; break; }
      for (int& c : b) c = c * inv % p;
    }
    PfPoly r = pf_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool pf_has_root(const PfPoly& f, int p) {
  for (int x = 0; x < p; ++x) {
    long long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

bool pf_irreducible(const PfPoly& f, int p) {
  int s = int(f.size()) - 1;
  if (s <= 0) return false;
  if (pf_has_root(f, p)) return false;
  if (s <= 3) return true;
  // No irreducible factor of degree i <= s/2: gcd(x^(p^i) - x, f) = 1.
  PfPoly r = {0, 1};  // x
  for (int i = 1; i <= s / 2; ++i) {
    r = pf_powmod(std::move(r), p, f, p);
    PfPoly diff = r;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    pf_trim(diff);
    PfPoly g = pf_gcd(f, std::move(diff), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<int> canonical_modulus(int p, int s) {
  if (s == 1) return {0, 1};  // x; residue arithmetic
  uint64_t count = 1;
  for (int i = 0; i < s; ++i) count *= uint64_t(p);
  for (uint64_t code = 0; code < count; ++code) {
    PfPoly f(s + 1, 0);
    uint64_t c = code;
    for (int i = 0; i < s; ++i) {
      f[i] = int(c % p);
      c /= p;
    }
    f[s] = 1;
    if (pf_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible modulus found");  // unreachable
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(int p, int s, std::vector<int> modulus)
    : p_(p), s_(s), modulus_(std::move(modulus)) {
  ppow_.resize(s_ + 1);
  ppow_[0] = 1;
  for (int i = 1; i <= s_; ++i) ppow_[i] = ppow_[i - 1] * uint32_t(p_);
  q_ = ppow_[s_];

  // generator: smallest code with multiplicative order q-1
  auto pow_slow = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_polybasis(r, a);
      a = mul_polybasis(a, a);
      e >>= 1;
    }
    return r;
  };
  uint64_t m = q_ - 1;
  auto primes = prime_factors(static_cast<long long>(m));
  for (uint32_t cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (long long r : primes)
      if (pow_slow(cand, m / uint64_t(r)) == 1) { ok = false; break; }
    if (ok) { gen_ = cand; break; }
  }

  exp_.resize(m > 0 ? m : 1);
  log_.assign(q_, 0);
  uint32_t acc = 1;
  for (uint64_t k = 0; k < m; ++k) {
    exp_[k] = acc;
    log_[acc] = uint32_t(k);
    acc = mul_polybasis(acc, gen_);
  }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0;
  for (int i = 0; i < s_; ++i) {
    uint32_t da = (a / ppow_[i]) % uint32_t(p_);
    uint32_t db = (b / ppow_[i]) % uint32_t(p_);
    uint32_t d = da + db;
    if (d >= uint32_t(p_)) d -= uint32_t(p_);
    r += d * ppow_[i];
  }
  return r;
}

uint32_t Field::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0;
  for (int i = 0; i < s_; ++i) {
    uint32_t d = (a / ppow_[i]) % uint32_t(p_);
    if (d != 0) d = uint32_t(p_) - d;
    r += d * ppow_[i];
  }
  return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t e = uint64_t(log_[a]) + uint64_t(log_[b]);
  uint64_t m = q_ - 1;
  if (e >= m) e -= m;
  return exp_[e];
}

uint32_t Field::mul_polybasis(uint32_t a, uint32_t b) const {
  // digit convolution followed by reduction by the modulus
  int n = 2 * s_ - 1;
  int t[64] = {0};
  for (int i = 0; i < s_; ++i) {
    uint32_t da = (a / ppow_[i]) % uint32_t(p_);
    if (da == 0) continue;
    for (int j = 0; j < s_; ++j) {
      uint32_t db = (b / ppow_[j]) % uint32_t(p_);
      t[i + j] = int((t[i + j] + da * db) % uint32_t(p_));
    }
  }
  for (int i = n - 1; i >= s_; --i) {
    int c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (int j = 0; j < s_; ++j) {
      int v = t[i - s_ + j] - c * modulus_[j];
      t[i - s_ + j] = ((v % p_) + p_) % p_;
    }
  }
  uint32_t r = 0;
  for (int i = 0; i < s_; ++i) r += uint32_t(t[i]) * ppow_[i];
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  uint64_t m = q_ - 1;
  return exp_[(m - log_[a]) % m];
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, long long n) const {
  if (a == 0) {
    if (n > 0) return 0;
    if (n == 0) return 1;
    throw DivisionByZero("zero to a negative power");
  }
  long long m = static_cast<long long>(q_) - 1;
  long long e = ((n % m) + m) % m;
  return exp_[(uint64_t(log_[a]) * uint64_t(e)) % uint64_t(m)];
}

uint32_t Field::frobenius(uint32_t a, long long r) const {
  if (a == 0) return 0;
  uint64_t m = q_ - 1;
  uint64_t f = 1 % m;
  for (long long i = 0; i < r; ++i) f = (f * uint64_t(p_)) % m;
  return exp_[(uint64_t(log_[a]) * f) % m];
}

uint32_t Field::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return uint32_t(r);
}

uint32_t Field::dlog(uint32_t a) const {
  if (a == 0) throw DivisionByZero("dlog of zero");
  return log_[a];
}

uint32_t Field::enum_code(uint32_t i) const { return i; }

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (uint32_t i = 0; i < q_; ++i) out.push_back(el(enum_code(i)));
  return out;
}

std::vector<int> Field::digits(uint32_t code) const {
  std::vector<int> d(s_);
  for (int i = 0; i < s_; ++i) d[i] = int((code / ppow_[i]) % uint32_t(p_));
  return d;
}

uint32_t Field::from_digits(const std::vector<int>& d) const {
  uint32_t code = 0;
  for (int i = 0; i < s_ && i < int(d.size()); ++i)
    code += uint32_t(((d[i] % p_) + p_) % p_) * ppow_[i];
  return code;
}

const Field& build_field(int p, int s) {
  if (!is_prime(p))
    throw NonPrimeCharacteristic("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw Error("extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < s; ++i) {
    q *= uint64_t(p);
    if (q > field_cap())
      throw FieldTooLarge("p^s exceeds cap " + std::to_string(field_cap()));
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, s);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto f = std::unique_ptr<Field>(new Field(p, s, canonical_modulus(p, s)));
    it = cache.emplace(key, std::move(f)).first;
  }
  return *it->second;
}

// --- FieldElement operators ---

namespace {
const Field& same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field == nullptr || a.field != b.field)
    throw FieldMismatch("operands belong to different fields");
  return *a.field;
}
}  // namespace

std::vector<int> FieldElement::coeffs() const { return field->digits(code); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = same_field(a, b);
  return f.el(f.add(a.code, b.code));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = same_field(a, b);
  return f.el(f.sub(a.code, b.code));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = same_field(a, b);
  return f.el(f.mul(a.code, b.code));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = same_field(a, b);
  return f.el(f.div(a.code, b.code));
}
FieldElement operator-(const FieldElement& a) {
  return a.field->el(a.field->neg(a.code));
}

// --- Embedding ---

Embedding::Embedding(const Field& src, const Field& tgt)
    : source(&src), target(&tgt) {
  if (src.p() != tgt.p() || tgt.s() % src.s() != 0)
    throw NotAnExtension("GF(" + std::to_string(src.p()) + "^" +
                         std::to_string(src.s()) + ") does not embed in GF(" +
                         std::to_string(tgt.p()) + "^" +
                         std::to_string(tgt.s()) + ")");
  if (src.s() == 1) {
    image_of_generator = 0;  // root of the conventional modulus x
    gen_pows_ = {1};
  } else {
    const auto& mod = src.modulus();
    uint32_t root = 0;
    bool found = false;
    for (uint32_t i = 0; i < tgt.q(); ++i) {
      uint32_t t = tgt.enum_code(i);
      uint32_t v = 0;
      for (int k = int(mod.size()); k-- > 0;)
        v = tgt.add(tgt.mul(v, t), tgt.from_int(mod[k]));
      if (v == 0) {
        root = t;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no root of source modulus in target");
    image_of_generator = root;
    gen_pows_.resize(src.s());
    gen_pows_[0] = 1;
    for (int i = 1; i < src.s(); ++i)
      gen_pows_[i] = tgt.mul(gen_pows_[i - 1], root);
  }
  pre_.reserve(src.q());
  for (uint32_t c = 0; c < src.q(); ++c) pre_.emplace_back(map(c), c);
  std::sort(pre_.begin(), pre_.end());
}

uint32_t Embedding::map(uint32_t src_code) const {
  if (source->s() == 1) return target->from_int(src_code);
  uint32_t acc = 0;
  auto d = source->digits(src_code);
  for (int i = 0; i < source->s(); ++i) {
    if (d[i] == 0) continue;
    acc = target->add(acc, target->mul(target->from_int(d[i]), gen_pows_[i]));
  }
  return acc;
}

FieldElement Embedding::map(const FieldElement& e) const {
  if (e.field != source) throw FieldMismatch("element not in embedding source");
  return target->el(map(e.code));
}

bool Embedding::in_image(uint32_t tgt_code) const {
  auto it = std::lower_bound(pre_.begin(), pre_.end(),
                             std::make_pair(tgt_code, uint32_t(0)));
  return it != pre_.end() && it->first == tgt_code;
}

uint32_t Embedding::preimage(uint32_t tgt_code) const {
  auto it = std::lower_bound(pre_.begin(), pre_.end(),
                             std::make_pair(tgt_code, uint32_t(0)));
  if (it == pre_.end() || it->first != tgt_code)
    throw InternalError("element has no preimage under embedding");
  return it->second;
}

const Embedding& embed(const Field& src, const Field& tgt) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>,
                  std::unique_ptr<Embedding>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&src, &tgt);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto e = std::unique_ptr<Embedding>(new Embedding(src, tgt));
    it = cache.emplace(key, std::move(e)).first;
  }
  return *it->second;
}

int min_level(const Field& base, const Field& ext, uint32_t code) {
  if (ext.p() != base.p() || ext.s() % base.s() != 0)
    throw NotAnExtension("min_level: not an extension");
  int k = ext.s() / base.s();
  for (int r = 1; r <= k; ++r) {
    if (k % r != 0) continue;
    if (ext.frobenius(code, static_cast<long long>(base.s()) * r) == code) return r;
  }
  return k;
}

// --- element text format ---

std::string format_element(const FieldElement& e, bool dlog_form) {
  const Field& f = *e.field;
  if (f.s() == 1) return std::to_string(e.code);
  if (dlog_form) {
    if (e.code == 0) return "0";
    // g is the class of x; fall through to coefficient form when x is not
    // primitive and e lies outside its cyclic span.
    uint32_t g = f.from_digits({0, 1});
    uint32_t pw = 1;
    for (uint32_t k = 0; k < f.q() - 1; ++k) {
      if (pw == e.code) return "g^" + std::to_string(k);
      pw = f.mul(pw, g);
      if (pw == 1) break;
    }
  }
  std::ostringstream os;
  os << '[';
  auto d = f.digits(e.code);
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ']';
  return os.str();
}

FieldElement parse_element(const std::string& text, const Field& f) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && isspace(text[i])) ++i; };
  skip();
  if (i >= text.size()) throw SyntaxError("empty element", i);
  if (text[i] == '[') {
    ++i;
    std::vector<int> d;
    while (true) {
      skip();
      size_t start = i;
      long long v = 0;
      while (i < text.size() && isdigit(text[i])) v = v * 10 + (text[i++] - '0');
      if (i == start) throw SyntaxError("expected digit in coefficient list", i);
      d.push_back(int(v % f.p()));
      skip();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      throw SyntaxError("expected ',' or ']'", i);
    }
    if (int(d.size()) > f.s())
      throw SyntaxError("too many coefficients for this field", i);
    return f.el(f.from_digits(d));
  }
  if (text[i] == 'g') {
    ++i;
    long long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      k = 0;
      while (i < text.size() && isdigit(text[i])) k = k * 10 + (text[i++] - '0');
      if (i == start) throw SyntaxError("expected exponent after '^'", i);
    }
    if (f.s() == 1) throw SyntaxError("'g' form needs an extension field", i);
    uint32_t g = f.from_digits({0, 1});  // class of x
    return f.el(f.pow(g, k));
  }
  size_t start = i;
  long long v = 0;
  while (i < text.size() && isdigit(text[i])) v = v * 10 + (text[i++] - '0');
  if (i == start) throw SyntaxError("unrecognized element syntax", i);
  return f.el(f.from_int(v));
}

}  // namespace curvelab
