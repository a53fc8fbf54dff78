#pragma once

// Quadratic asymptotic bound machinery: smallest prime above a threshold,
// Sylow subgroup shapes of symmetric groups, and the resulting upper bound
// for symmetric actions on rationally connected varieties.

#include <cstdint>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::bounds {

// Deterministic Miller-Rabin; the witness set is valid below 3.3e24.
bool is_prime(const Int& n);

// Least prime strictly greater than x; x capped at 1e12.
Int smallest_prime_above(const Int& x);

struct SylowFactor {
  int i = 0;      // iterated wreath depth: W_p(i) is Sylow in Sym(p^i)
  long count = 0; // base-p digit of k at position i
  bool nonabelian = false;  // true exactly when i >= 2
};

struct SylowShape {
  Int p;
  long k = 0;
  std::vector<SylowFactor> factors;  // positions with nonzero digit, i >= 1

  // nu_p of the subgroup order: sum count_i * (p^i - 1)/(p - 1)
  Int p_adic_valuation() const;
};

SylowShape sylow_structure(long k, const Int& p);

// nu_p(k!) by Legendre's formula.
Int legendre_valuation(long k, const Int& p);

// Certified upper bound on the largest k with Sym(k) acting faithfully on an
// n-dimensional rationally connected variety: p(n+1) - 1 for the smallest
// prime p > n+1. An upper bound, not the value itself.
Int jordan_quadratic_bound(long n);

// jordan_quadratic_bound(n) / (n+1)^2 as an exact rational.
Rat asymptotic_ratio(long n);

enum class Ternary { True, False, Indeterminate };

// Whether ratio < 1 + 1/(5000 ln^2(n+1)), decided with outward-rounded
// interval bounds for the logarithm. Indeterminate when the interval
// straddles the threshold.
Ternary ratio_below_dusart_envelope(long n);

}  // namespace fsl::bounds
