#include "fsl/wci.hpp"

#include <algorithm>

#include "doctest.h"

using namespace fsl;
using namespace fsl::wci;

TEST_CASE("well-formed weighted projective spaces") {
  CHECK(well_formed_space({1, 1, 1, 1}));
  CHECK(well_formed_space({1, 1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(!well_formed_space({2, 2, 3}));
  CHECK(!well_formed_space({2, 2}));
}

TEST_CASE("linear cone surrogate") {
  WciCandidate a{{1, 1, 1, 1, 1, 1, 1, 1}, {2, 3}};
  CHECK(linear_cone_free(a));
  WciCandidate b{{1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 3}};
  CHECK(!linear_cone_free(b));
  WciCandidate c{{1, 1, 1, 1, 1, 1, 1, 1, 1, 2}, {1, 2, 3, 4}};
  CHECK(!linear_cone_free(c));
}

TEST_CASE("adjunction, classification, index") {
  WciCandidate x123{{1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 3}};
  CHECK(canonical_degree(x123) == -2);
  CHECK(classify(x123) == VarietyClass::Fano);
  CHECK(fano_index(x123) == 2);

  WciCandidate x124{{1, 1, 1, 1, 1, 1, 1}, {1, 2, 4}};
  CHECK(canonical_degree(x124) == 0);
  CHECK(classify(x124) == VarietyClass::CalabiYau);
  CHECK_THROWS_AS(fano_index(x124), std::domain_error);

  WciCandidate cubic{{1, 1, 1}, {3}};
  CHECK(classify(cubic) == VarietyClass::CalabiYau);

  WciCandidate gt{{1, 1, 1}, {5}};
  CHECK(classify(gt) == VarietyClass::GeneralType);
}

TEST_CASE("degree/weight inequality systems") {
  WciCandidate a{{1, 1, 1, 1, 1, 1, 1}, {2, 3}};
  IfReport ra = if_inequalities(a);
  CHECK(ra.part1);
  CHECK(!ra.part2.has_value());

  WciCandidate b{{1, 1, 1, 2}, {2}};
  IfReport rb = if_inequalities(b);
  CHECK(!rb.part1);

  // m >= dim + 1 engages part 2
  WciCandidate c{{1, 1, 1, 1, 1}, {2, 2, 3}};
  IfReport rc = if_inequalities(c);
  CHECK(rc.part2.has_value());
}

TEST_CASE("codimension bound") {
  WciCandidate a{{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2}};
  CHECK(codim_bound(a, Kind::Fano));
  WciCandidate b{{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2}};
  CHECK(!codim_bound(b, Kind::Fano));
  CHECK(codim_bound(b, Kind::CalabiYau));
  WciCandidate c{{1, 1, 1, 1}, {2, 2}};
  CHECK(!codim_bound(c, Kind::Fano));
}

TEST_CASE("bound functions: pinned table and formula/scan agreement") {
  const int fano[] = {4, 5, 7, 8, 9};
  const int cy[] = {4, 6, 7, 8, 10};
  for (int n = 1; n <= 5; ++n) {
    CHECK(c_fano(n) == fano[n - 1]);
    CHECK(c_cy(n) == cy[n - 1]);
  }
  CHECK(max_k_degree_condition(4, true) == 8);
  CHECK(max_k_degree_condition(5, false) == 10);
  CHECK(max_k_degree_condition(1, true) == 4);
  for (long n = 1; n <= 500; ++n) {
    CHECK(max_k_degree_condition(n, true) == c_fano(n));
    CHECK(max_k_degree_condition(n, false) == c_cy(n));
  }
}

TEST_CASE("bound functions: spread and monotonicity") {
  for (long n = 1; n <= 10000; ++n) {
    int diff = c_cy(n) - c_fano(n);
    CHECK(diff >= 0);
    CHECK(diff <= 1);
    if (n >= 2) {
      CHECK(c_fano(n - 1) < c_fano(n));
      CHECK(c_cy(n - 1) < c_fano(n));
    }
  }
}

TEST_CASE("lemma arithmetic helpers") {
  CHECK(sigma_degree_lower_bound(1, 1) == 2);
  CHECK(sigma_degree_lower_bound(3, 1) == 9);
  CHECK(sigma_degree_lower_bound(2, 3) == 15);
  CHECK(vandermonde_degree(8, 1) == 28);
  CHECK(vandermonde_degree(2, 1) == 1);
  CHECK(vandermonde_degree(9, 2) == 72);
  CHECK(total_degree_lower_bound(4, 8, {}, 1) == 5);
  CHECK(total_degree_lower_bound(5, 9, {2}, 1) == 7);
  CHECK(total_degree_lower_bound(1, 4, {}, 1) == 2);
  CHECK(index_upper_bound(4, 8) == 2);
  CHECK(index_upper_bound(3, 7) == 1);
  CHECK(index_upper_bound(2, 5) == 2);
}

TEST_CASE("maximal example family") {
  auto [c4, s4] = maximal_example(4);
  CHECK(c4.ambient_dim() == 7);
  CHECK(c4.degrees == std::vector<long>{1, 2, 3});
  CHECK(s4.k == 8);

  auto [c5, s5] = maximal_example(5);
  CHECK(c5.ambient_dim() == 8);
  CHECK(c5.degrees == std::vector<long>{1, 2, 3});
  CHECK(s5.k == 9);

  auto [c1, s1] = maximal_example(1);
  CHECK(c1.ambient_dim() == 3);
  CHECK(c1.degrees == std::vector<long>{1, 2});
  CHECK(s1.k == 4);

  for (int n = 1; n <= 40; ++n) {
    auto [cand, shape] = maximal_example(n);
    CHECK(classify(cand) == VarietyClass::Fano);
    CHECK(shape.k == c_fano(n));
  }
  for (int n = 2; n <= 30; ++n) {
    auto [cand, shape] = maximal_example(n);
    CHECK(fano_index(cand) == index_upper_bound(n, c_fano(n)));
  }
}

TEST_CASE("shape search certifies bounds at small dimension") {
  SearchOutcome f4 = search_max_symmetric(4, Kind::Fano);
  CHECK(f4.max_feasible_k == 8);
  CHECK(!f4.witnesses.empty());
  bool has_plain = false;
  for (const auto& w : f4.witnesses) {
    if (w.shape.extra_weights.empty()) {
      has_plain = true;
      CHECK(w.ambient == "P^6");
    }
    CHECK(w.shape.b == 1);
  }
  CHECK(has_plain);

  SearchOutcome f5 = search_max_symmetric(5, Kind::Fano);
  CHECK(f5.max_feasible_k == 9);
  bool has_23 = false;
  for (const auto& w : f5.witnesses)
    if (w.degrees == std::vector<long>{2, 3} && w.shape.extra_weights.empty())
      has_23 = true;
  CHECK(has_23);

  SearchOutcome cy4 = search_max_symmetric(4, Kind::CalabiYau);
  CHECK(cy4.max_feasible_k == 8);
  // the reduced Calabi-Yau shapes of P^6: degrees (2,5) and (3,4)
  bool has_25 = false, has_34 = false;
  for (const auto& w : cy4.witnesses) {
    if (w.degrees == std::vector<long>{2, 5}) has_25 = true;
    if (w.degrees == std::vector<long>{3, 4}) has_34 = true;
  }
  CHECK(has_25);
  CHECK(has_34);

  CHECK_THROWS_AS(search_max_symmetric(3, Kind::Fano), std::invalid_argument);
  CHECK_THROWS_AS(search_max_symmetric(13, Kind::Fano), std::invalid_argument);
}
