#include "fsl/poly.hpp"

#include "doctest.h"

using namespace fsl;
using namespace fsl::poly;

namespace {
Poly from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}
}  // namespace

TEST_CASE("poly arithmetic and division") {
  Poly f = from_ints({-1, 0, 1});     // x^2 - 1
  Poly g = from_ints({1, 1});         // x + 1
  auto [q, r] = f.divmod(g);
  CHECK(q == from_ints({-1, 1}));
  CHECK(r.is_zero());
  CHECK(f.exact_div(g) == q);
  CHECK((q * g) == f);
  CHECK(f.eval(Rat(3)) == 8);
  CHECK(f.derivative() == from_ints({0, 2}));
}

TEST_CASE("poly gcd and squarefree part") {
  Poly f = from_ints({-1, 0, 1});  // (x-1)(x+1)
  Poly g = from_ints({1, 2, 1});   // (x+1)^2
  CHECK(gcd(f, g) == from_ints({1, 1}));
  CHECK(squarefree_part(g) == from_ints({1, 1}));
  CHECK(gcd(Poly(), f) == f.monic());
}

TEST_CASE("complex roots of small polynomials") {
  // x^2 + 1 -> +-i
  auto roots = complex_roots(from_ints({1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - std::complex<double>(0, -1)) < 1e-9);
  CHECK(std::abs(roots[1] - std::complex<double>(0, 1)) < 1e-9);
  // x^2 + x + 1 -> primitive cube roots of unity
  for (const auto& z : complex_roots(from_ints({1, 1, 1})))
    CHECK(std::abs(z * z * z - 1.0) < 1e-9);
}

TEST_CASE("bivariate resultant eliminates the outer variable") {
  // f = w - v, g = w^2 - 2 : res = v^2 - 2
  BiPoly f({from_ints({0, -1}), from_ints({1})});
  BiPoly g({from_ints({-2}), Poly(), from_ints({1})});
  Poly res = resultant_w(f, g);
  CHECK(squarefree_part(res) == from_ints({-2, 0, 1}).monic());

  // common root forces a vanishing resultant: f = w - v, g = w^2 - v^2
  BiPoly g2({from_ints({0, 0, -1}), Poly(), from_ints({1})});
  Poly res2 = resultant_w(f, g2);
  CHECK(res2.is_zero());
}

TEST_CASE("modular inverse with dynamic splitting") {
  Poly m = from_ints({-1, 0, 1});  // x^2 - 1, reducible
  Poly a = from_ints({1, 1});      // x + 1, zero divisor
  CHECK_THROWS_AS(invert_mod(a, m), SplitNeeded);
  Poly b = from_ints({2, 1});  // x + 2, invertible mod x^2 - 1
  Poly binv = invert_mod(b, m);
  CHECK(mul_mod(b, binv, m) == Poly(Rat(1)));
}

TEST_CASE("gcd over an extension branch") {
  // modulus v^2 + v + 1; gcd of (w - v) and (w^3 - 1) should be w - v
  Poly m = from_ints({1, 1, 1});
  BiPoly f({from_ints({0, -1}), from_ints({1})});
  BiPoly g({from_ints({-1}), Poly(), Poly(), from_ints({1})});
  KPoly kf = kpoly_from(f, m);
  KPoly kg = kpoly_from(g, m);
  KPoly h = kpoly_gcd(kf, kg, m);
  CHECK(kpoly_degree(h) == 1);
  // stripping the root w = v kills it
  KPoly stripped = kpoly_strip_root(h, Poly::x(), m);
  CHECK(kpoly_degree(stripped) <= 0);
}
