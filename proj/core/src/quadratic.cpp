#include "fsl/quadratic.hpp"

#include <cmath>

namespace fsl::spinmolien {

QuadScalar QuadScalar::inverse() const {
  Rat n = norm();
  if (n == 0) throw std::domain_error("QuadScalar: inverse of zero");
  // 1/(a + b r) = (a - b r)/(a^2 - 2 b^2)
  return QuadScalar(a_ / n, -b_ / n);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
  return x * y.inverse();
}

std::string QuadScalar::str() const {
  if (b_ == 0) return a_.get_str();
  return a_.get_str() + "+" + b_.get_str() + "*r2";
}

double QuadScalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

namespace {
inline size_t mix(size_t h, size_t v) {
  // splitmix-style combine
  v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ v;
}
inline size_t hash_mpz(const mpz_class& z, size_t seed) {
  size_t h = mix(seed, static_cast<size_t>(mpz_sgn(z.get_mpz_t())));
  const size_t n = mpz_size(z.get_mpz_t());
  for (size_t i = 0; i < n; ++i)
    h = mix(h, static_cast<size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  return h;
}
}  // namespace

size_t hash_value(const QuadScalar& q, size_t seed) {
  size_t h = hash_mpz(q.rational_part().get_num(), seed);
  h = hash_mpz(q.rational_part().get_den(), h);
  h = hash_mpz(q.radical_part().get_num(), h);
  h = hash_mpz(q.radical_part().get_den(), h);
  return h;
}

}  // namespace fsl::spinmolien
