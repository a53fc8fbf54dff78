#pragma once

// Small dense polynomial kit over Q used by the Fermat singular-point
// search: univariate arithmetic and gcd, bivariate resultants via
// fraction-free elimination, arithmetic modulo a squarefree modulus with
// dynamic splitting, and a complex root finder for witness reporting.

#include <complex>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::poly {

// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) : c_{std::move(c)} { normalize(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static Poly x();
  static Poly constant(const Rat& v) { return Poly(v); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Field division: q, r with *this = q * d + r, deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly exact_div(const Poly& d) const;  // throws if remainder nonzero

  Poly derivative() const;
  Poly monic() const;
  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

Poly gcd(Poly a, Poly b);           // monic gcd
Poly squarefree_part(const Poly& p);

// All complex roots by the Durand-Kerner iteration; degree cap ~ 64.
std::vector<std::complex<double>> complex_roots(const Poly& p);

// Bivariate polynomial as a polynomial in the "outer" variable w whose
// coefficients are Polys in the inner variable v.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> w_coeffs) : c_(std::move(w_coeffs)) {
    normalize();
  }

  int degree_w() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Poly& coeff_w(int i) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;

  Poly eval_w(const Poly& w_value) const;  // substitute a Poly in v for w

 private:
  void normalize();
  std::vector<Poly> c_;
};

// Resultant of f and g with respect to w: determinant of the Sylvester
// matrix over Q[v], by fraction-free Bareiss elimination.
Poly resultant_w(const BiPoly& f, const BiPoly& g);

// ---------------------------------------------------------------------------
// Arithmetic modulo a squarefree modulus with dynamic splitting: when an
// inversion meets a zero divisor the discovered factor is reported so the
// caller can branch over both factors instead of factoring up front.
// ---------------------------------------------------------------------------

struct SplitNeeded {
  Poly factor;  // proper divisor of the modulus
};

// Inverse of a modulo m; throws SplitNeeded when gcd(a, m) is proper.
Poly invert_mod(const Poly& a, const Poly& m);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
Poly reduce_mod(const Poly& a, const Poly& m);

// Polynomials in w with coefficients in Q[v]/(m).
using KPoly = std::vector<Poly>;

KPoly kpoly_from(const BiPoly& f, const Poly& m);
void kpoly_normalize(KPoly& f, const Poly& m);
int kpoly_degree(const KPoly& f);
// Monic gcd in (Q[v]/(m))[w]; throws SplitNeeded on zero divisors.
KPoly kpoly_gcd(KPoly a, KPoly b, const Poly& m);
// Remove every occurrence of the given root factor (w - root) from f.
KPoly kpoly_strip_root(KPoly f, const Poly& root, const Poly& m);

}  // namespace fsl::poly
