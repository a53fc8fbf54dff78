#include "fsl/spin_group.hpp"

#include <algorithm>

#include "doctest.h"

using namespace fsl;
using namespace fsl::spinmolien;

namespace {

ExactMatrix conjugated(const ExactMatrix& h, const ExactMatrix& g) {
  ExactMatrix hinv = ExactMatrix::solve(h, ExactMatrix::identity(h.dim()));
  return h * g * hinv;
}

long element_order(const ExactMatrix& g, long cap = 5000) {
  ExactMatrix p = g;
  for (long n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p * g;
  }
  return -1;
}

}  // namespace

TEST_CASE("clifford generators: dimensions and rationality") {
  for (int k = 4; k <= 9; ++k) {
    auto gens = clifford_even_generators(k);
    CHECK(static_cast<int>(gens.size()) == k - 2);
    for (const auto& g : gens) {
      CHECK(g.dim() == clifford_model_dim(k));
      // products of two reflections are rational; only the k = 8 chirality
      // basis mixes in the radical
      if (k != 8) CHECK(g.all_rational());
    }
  }
  CHECK(clifford_model_dim(8) == 8);
  CHECK(clifford_model_dim(9) == 8);
  CHECK_THROWS_AS(clifford_even_generators(3), std::invalid_argument);
  CHECK_THROWS_AS(clifford_even_generators(10), std::invalid_argument);
}

TEST_CASE("generator orders divide the double cover order") {
  for (int k : {5, 8, 9}) {
    Int order = factorial(static_cast<unsigned>(k));
    for (const auto& g : clifford_even_generators(k)) {
      long o = element_order(g);
      REQUIRE(o > 0);
      CHECK(order % o == 0);
    }
  }
}

TEST_CASE("closure: Lagrange check |2.Alt(k)| = k! for k = 4..7") {
  for (int k = 4; k <= 7; ++k) {
    FiniteMatrixGroup g = close_group(clifford_even_generators(k), 20000);
    CHECK(g.order() == static_cast<size_t>(factorial(static_cast<unsigned>(k)).get_ui()));
    // central element -I present and central
    ExactMatrix minus =
        ExactMatrix::identity(g.dim).scaled(QuadScalar(Rat(-1)));
    CHECK(g.contains(minus));
    for (size_t i = 0; i < g.elements.size(); i += std::max<size_t>(1, g.order() / 7))
      CHECK(g.elements[i] * minus == minus * g.elements[i]);
  }
}

TEST_CASE("closure idempotence and explosion guard") {
  FiniteMatrixGroup g = close_group(clifford_even_generators(5), 1000);
  CHECK(g.order() == 120);
  FiniteMatrixGroup again = close_group(g.elements, 1000);
  CHECK(again.order() == g.order());
  CHECK_THROWS_AS(close_group(clifford_even_generators(6), 100), ExplosionError);
  CHECK(close_group({ExactMatrix::identity(3)}, 10).order() == 1);
}

TEST_CASE("closure is invariant under conjugation of the generators") {
  auto gens = clifford_even_generators(5);
  ExactMatrix h = ExactMatrix::identity(gens.front().dim());
  h.at(0, 1) = QuadScalar(Rat(1), Rat(1));  // shear with radical part
  h.at(2, 3) = QuadScalar(Rat(-2, 3));
  std::vector<ExactMatrix> conj;
  for (const auto& g : gens) conj.push_back(conjugated(h, g));
  CHECK(close_group(conj, 1000).order() == 120);
}

TEST_CASE("permutation representations") {
  ExactMatrix id4 = permutation_rep({0, 1, 2, 3}, PermRepMode::Natural);
  CHECK(id4.is_identity());
  // transposition (0 1) in Sym(3), standard restriction has trace 0
  ExactMatrix t = permutation_rep({1, 0, 2}, PermRepMode::Standard);
  CHECK(t.dim() == 2);
  CHECK(t.trace() == QuadScalar(0));
  // standard images of Sym(4) close to a group of order 24
  std::vector<int> p = {0, 1, 2, 3};
  std::vector<ExactMatrix> gens;
  gens.push_back(permutation_rep({1, 0, 2, 3}, PermRepMode::Standard));
  gens.push_back(permutation_rep({1, 2, 3, 0}, PermRepMode::Standard));
  CHECK(close_group(gens, 100).order() == 24);
  CHECK_THROWS_AS(permutation_rep({0, 0, 1}, PermRepMode::Natural),
                  std::invalid_argument);
}
