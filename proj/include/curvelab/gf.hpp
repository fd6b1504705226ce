#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvelab/errors.hpp"

namespace curvelab {

// Enumeration / field-size cap, overridable via CURVELAB_CAP.
uint64_t field_cap();

class Field;

// Element of GF(p^s) in polynomial basis. The code packs the coefficient
// vector (c0,...,c_{s-1}) as sum c_i * p^i.
struct FieldElement {
  const Field* field = nullptr;
  uint32_t code = 0;

  FieldElement() = default;
  FieldElement(const Field* f, uint32_t c) : field(f), code(c) {}

  bool is_zero() const { return code == 0; }
  std::vector<int> coeffs() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field == b.field && a.code == b.code;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

// A concrete model of GF(p^s). Immutable after construction; obtained from
// build_field (which canonicalizes the modulus and caches instances).
class Field {
 public:
  int p() const { return p_; }
  int s() const { return s_; }
  uint32_t q() const { return q_; }
  // Monic modulus, modulus()[i] = coefficient of x^i, length s+1.
  // For s == 1 this is x (residue arithmetic convention).
  const std::vector<int>& modulus() const { return modulus_; }

  // Arithmetic on packed codes.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, long long n) const;
  // a^(p^r)
  uint32_t frobenius(uint32_t a, long long r) const;
  // Lift of an integer into the prime subfield.
  uint32_t from_int(long long n) const;

  // Reference multiplication straight from the polynomial-basis model;
  // the table-driven mul() must agree with it bit for bit.
  uint32_t mul_polybasis(uint32_t a, uint32_t b) const;

  // i-th element in lexicographic order of coefficient sequences
  // (c0 compared first).
  uint32_t enum_code(uint32_t i) const;
  std::vector<FieldElement> enumerate() const;

  // First element (in enumeration order) generating the multiplicative group.
  uint32_t generator() const { return gen_; }
  // Discrete log base generator(); a must be nonzero.
  uint32_t dlog(uint32_t a) const;

  std::vector<int> digits(uint32_t code) const;
  uint32_t from_digits(const std::vector<int>& d) const;

  FieldElement el(uint32_t code) const { return FieldElement(this, code); }
  FieldElement zero() const { return el(0); }
  FieldElement one() const { return el(1); }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend const Field& build_field(int p, int s);
  Field(int p, int s, std::vector<int> modulus);

  int p_;
  int s_;
  uint32_t q_;
  std::vector<int> modulus_;
  std::vector<uint32_t> ppow_;  // p^i for i <= s
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;  // exp_[k] = gen^k, k in [0, q-1)
  std::vector<uint32_t> log_;  // log_[code] for nonzero code
};

// Canonical field: lexicographically smallest monic irreducible modulus.
// Cached; the returned reference stays valid for the process lifetime.
const Field& build_field(int p, int s);

// Ring embedding GF(p^s) -> GF(p^{s*k}) sending the source generator class
// to the first root of the source modulus in target enumeration order.
class Embedding {
 public:
  const Field* source;
  const Field* target;
  uint32_t image_of_generator;

  uint32_t map(uint32_t src_code) const;
  FieldElement map(const FieldElement& e) const;
  bool in_image(uint32_t tgt_code) const;
  // Throws InternalError if the code is not in the image.
  uint32_t preimage(uint32_t tgt_code) const;

 private:
  friend const Embedding& embed(const Field& src, const Field& tgt);
  Embedding(const Field& src, const Field& tgt);
  std::vector<uint32_t> gen_pows_;
  std::vector<std::pair<uint32_t, uint32_t>> pre_;  // sorted (image, code)
};

// Cached; throws NotAnExtension unless same p and src.s | tgt.s.
const Embedding& embed(const Field& src, const Field& tgt);

// Minimal r >= 1 such that a is fixed by the p^(s*r)-power map, i.e. the
// degree of GF(p^s)(a) over GF(p^s); field is GF(p^(s*k)) and the result
// divides k.
int min_level(const Field& base, const Field& ext, uint32_t code);

// Element text formats: decimal for prime fields; coefficient form
// "[c0,c1,...]" (default) or discrete-log form "g^k" for extensions.
std::string format_element(const FieldElement& e, bool dlog_form = false);
FieldElement parse_element(const std::string& text, const Field& f);

}  // namespace curvelab
