#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvelab/gf.hpp"
#include "curvelab/upoly.hpp"

namespace curvelab {

// Exponent vector for up to 3 variables (x, y, z).
struct Monomial {
  std::array<uint16_t, 3> e{0, 0, 0};

  int total_degree() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

// Graded lexicographic order (x > y > z), ascending.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    return a.e < b.e;
  }
};

enum class Chart { X = 0, Y = 1, Z = 2 };

// Sparse exact multivariate polynomial over a Field, arity 2 (x,y) or
// 3 (x,y,z). Values are immutable in spirit: all operations return new
// polynomials.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Field& f, int arity);

  const Field& field() const { return *field_; }
  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 stands for the degree of the zero polynomial.
  int degree() const;
  int deg_var(int var) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, uint32_t, MonoLess>& terms() const {
    return terms_;
  }
  bool is_homogeneous() const;

  uint32_t coeff(const Monomial& m) const;
  uint32_t constant_term() const { return coeff(Monomial{}); }
  // Adds c * x^e in place (normalizing away zeros); used by builders.
  void add_term(const Monomial& m, uint32_t c);

  static MultiPoly zero(const Field& f, int arity) { return {f, arity}; }
  static MultiPoly constant(const Field& f, int arity, uint32_t c);
  static MultiPoly variable(const Field& f, int arity, int var);

  MultiPoly scaled(uint32_t c) const;
  MultiPoly map_field(const Embedding& e) const;

  // Coefficient of var^k, as a polynomial of the same arity.
  MultiPoly coeff_of(int var, int k) const;
  MultiPoly leading_coeff_in(int var) const { return coeff_of(var, deg_var(var)); }
  // Substitute var := value, keeping arity.
  MultiPoly partial_eval(int var, uint32_t value) const;
  // View as univariate in var; all other variables must be absent.
  UPoly to_upoly(int var) const;
  static MultiPoly from_upoly(const UPoly& u, int arity, int var);

  // Substitute each variable by the given polynomial (images.size() == arity,
  // all of the result arity).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_ = nullptr;
  int arity_ = 0;
  std::map<Monomial, uint32_t, MonoLess> terms_;
};

MultiPoly mpow(const MultiPoly& a, int n);

// Exact value; coefficients pass through emb when the point lives in an
// extension of the coefficient field.
uint32_t evaluate(const MultiPoly& f, const std::vector<uint32_t>& pt,
                  const Embedding* emb = nullptr);

// k-th Hasse derivative with respect to var.
MultiPoly hasse_derivative(const MultiPoly& f, int var, int k);

// C(n, k) mod p by Lucas' theorem.
int binomial_mod_p(long long n, long long k, int p);

// f(x + a, y + b); arity 2.
MultiPoly translate(const MultiPoly& f, uint32_t a, uint32_t b);

// Projective closure of degree d and its chart restrictions. Dehomogenizing
// in chart Z keeps (x,y); chart Y maps (x,z) to (x,y); chart X maps (y,z)
// to (x,y).
MultiPoly homogenize(const MultiPoly& f, int d);
MultiPoly dehomogenize(const MultiPoly& F, Chart chart);

struct PseudoDivision {
  MultiPoly quotient;
  MultiPoly remainder;
  int power = 0;  // lc^power * h == quotient * f + remainder
};

PseudoDivision pseudo_divrem(const MultiPoly& h, const MultiPoly& f, int var);

// Exact divisibility f | h in the polynomial ring; sound when f is
// irreducible (caller-asserted) since f cannot divide the leading
// coefficient used to clear denominators.
bool divides(const MultiPoly& f, const MultiPoly& h, int var);
// Variable in which f has maximal positive degree (ties broken toward x).
int divisibility_var(const MultiPoly& f);

MultiPoly parse_poly(const std::string& text, const Field& f, int arity);
std::string format_poly(const MultiPoly& f);

}  // namespace curvelab
