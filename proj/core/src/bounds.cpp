#include "fsl/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fsl::bounds {

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
  Int x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

// Sorted first primes; deterministic for n < 3.317e24 (Sorenson-Webster).
constexpr long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (long w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (long w : kWitnesses)
    if (miller_rabin_witness(n, Int(w), d, s)) return false;
  return true;
}

Int smallest_prime_above(const Int& x) {
  if (x < 1) throw std::invalid_argument("smallest_prime_above: x >= 1");
  if (x > Int("1000000000000"))
    throw std::invalid_argument("smallest_prime_above: x <= 1e12");
  Int c = x + 1;
  while (!is_prime(c)) ++c;
  return c;
}

Int SylowShape::p_adic_valuation() const {
  Int total = 0;
  for (const auto& f : factors) {
    // (p^i - 1) / (p - 1)
    Int pi;
    mpz_pow_ui(pi.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(f.i));
    total += f.count * ((pi - 1) / (p - 1));
  }
  return total;
}

SylowShape sylow_structure(long k, const Int& p) {
  if (k < 1) throw std::invalid_argument("sylow_structure: k >= 1");
  if (!is_prime(p)) throw std::invalid_argument("sylow_structure: p prime");
  SylowShape shape;
  shape.p = p;
  shape.k = k;
  Int rest = k;
  int i = 0;
  while (rest > 0) {
    Int digit = rest % p;
    rest /= p;
    if (i >= 1 && digit > 0)
      shape.factors.push_back(
          SylowFactor{i, to_long(digit), i >= 2});
    ++i;
  }
  return shape;
}

Int legendre_valuation(long k, const Int& p) {
  Int total = 0;
  Int q = p;
  while (q <= k) {
    total += Int(k) / q;
    q *= p;
  }
  return total;
}

Int jordan_quadratic_bound(long n) {
  if (n < 1) throw std::invalid_argument("jordan_quadratic_bound: n >= 1");
  return smallest_prime_above(Int(n) + 1) * (n + 1) - 1;
}

Rat asymptotic_ratio(long n) {
  Rat r(jordan_quadratic_bound(n), Int(n + 1) * (n + 1));
  r.canonicalize();
  return r;
}

Ternary ratio_below_dusart_envelope(long n) {
  if (n < 1) throw std::invalid_argument("ratio_below_dusart_envelope: n");
  const Rat ratio = asymptotic_ratio(n);
  const double r = ratio.get_d();
  // Outward interval for ln(n+1): double log has < 1 ulp error; inflate by
  // a generous relative margin.
  const double ln = std::log(static_cast<double>(n + 1));
  const double lo = ln * (1 - 1e-12);
  const double hi = ln * (1 + 1e-12);
  const double env_lo = 1.0 + 1.0 / (5000.0 * hi * hi) * (1 - 1e-9);
  const double env_hi = 1.0 + 1.0 / (5000.0 * lo * lo) * (1 + 1e-9);
  // ratio is exact; compare against both envelope ends with a slack for the
  // rational-to-double conversion.
  const double eps = std::abs(r) * 1e-14;
  if (r + eps < env_lo) return Ternary::True;
  if (r - eps > env_hi) return Ternary::False;
  return Ternary::Indeterminate;
}

}  // namespace fsl::bounds
