#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "curvelab/gf.hpp"

namespace curvelab {

// Dense univariate polynomial over a Field, coefficient codes indexed by
// degree, always trimmed. Internal workhorse for root scans, tangent-cone
// factoring and the singular-locus certificate.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Field& f) : field_(&f) {}
  UPoly(const Field& f, std::vector<uint32_t> coeffs)
      : field_(&f), c_(std::move(coeffs)) {
    trim();
  }

  const Field& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return int(c_.size()) - 1; }  // -1 for zero
  uint32_t coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : 0;
  }
  uint32_t lc() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static UPoly x(const Field& f) { return UPoly(f, {0, 1}); }
  static UPoly constant(const Field& f, uint32_t c) { return UPoly(f, {c}); }

  uint32_t eval(uint32_t x0) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  UPoly scaled(uint32_t k) const;
  UPoly shifted(int n) const;  // * x^n

 private:
  const Field* field_ = nullptr;
  std::vector<uint32_t> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b);
UPoly umod(const UPoly& a, const UPoly& b);
// Monic gcd (zero if both inputs are zero).
UPoly ugcd(UPoly a, UPoly b);
// base^e mod m
UPoly upowmod(UPoly base, uint64_t e, const UPoly& m);
// x^(Q^k) mod m via repeated Q-powering, Q = field size of a subfield order.
UPoly ufrobpow(const UPoly& m, uint64_t Q, int k);

// Largest squarefree divisor (handles vanishing derivative via p-th roots).
UPoly squarefree_part(const UPoly& a);

// Distinct-degree split of a squarefree monic polynomial with respect to the
// subfield of size Q (Q a power of the characteristic, field of a contains
// it). Returns (degree, product of irreducible factors of that degree).
std::vector<std::pair<int, UPoly>> distinct_degree_split(const UPoly& a,
                                                         uint64_t Q);

// All roots in the coefficient field, each with multiplicity, in increasing
// code order.
std::vector<std::pair<uint32_t, int>> uroots(const UPoly& a);

// Resultant of a and b.
uint32_t uresultant(UPoly a, UPoly b);

// Lagrange interpolation through distinct xs.
UPoly uinterpolate(const Field& f, const std::vector<uint32_t>& xs,
                   const std::vector<uint32_t>& ys);

// Coefficientwise image under an embedding (source poly -> target poly).
UPoly umap(const UPoly& a, const Embedding& e);

// A root living in GF(q^level); level is exact (the degree of the root over
// the coefficient field) and code refers to build_field(p, s*level).
struct ExtRoot {
  int level;
  uint32_t code;
  int mult;
};

struct ExtRoots {
  std::vector<ExtRoot> roots;  // sorted by (level, code)
  // False when roots beyond max_level (or beyond the field cap) were cut off.
  bool complete = true;
};

// All roots of a over the algebraic closure, up to extension degree max_level
// (-1: unbounded, i.e. full splitting).
ExtRoots ext_roots(const UPoly& a, int max_level = -1);

}  // namespace curvelab
