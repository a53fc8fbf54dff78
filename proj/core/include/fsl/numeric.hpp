#pragma once

// Exact arithmetic primitives shared across the library. All counting and
// dimension arithmetic uses arbitrary-precision integers (k! overflows 64
// bits already at k = 21).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsl {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an enumeration or closure exceeds its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numeric decision falls inside the ambiguity band of its
// tolerance and must not be guessed.
class IndeterminateError : public std::runtime_error {
 public:
  explicit IndeterminateError(const std::string& what)
      : std::runtime_error(what) {}
};

inline Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Floor of the integer square root; exact for any nonnegative input.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow2(unsigned e) {
  Int r = 1;
  r <<= e;
  return r;
}

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return n.get_si();
}

}  // namespace fsl
