#include "fsl/toric.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using namespace fsl;
using namespace fsl::toric;

TEST_CASE("smith normal form: pinned examples") {
  {
    IntMatrix a = {{Int(1), Int(0), Int(0)},
                   {Int(0), Int(1), Int(0)},
                   {Int(0), Int(0), Int(1)}};
    SnfResult s = smith_normal_form(a);
    CHECK(s.d == a);
  }
  {
    IntMatrix a = {{Int(2), Int(0)}, {Int(0), Int(3)}};
    SnfResult s = smith_normal_form(a);
    CHECK(s.d[0][0] == 1);
    CHECK(s.d[1][1] == 6);
    CHECK(matmul(matmul(s.u, a), s.v) == s.d);
  }
  {
    IntMatrix a = {{Int(0), Int(0), Int(0)}, {Int(0), Int(0), Int(0)}};
    SnfResult s = smith_normal_form(a);
    for (const auto& row : s.d)
      for (const auto& x : row) CHECK(x == 0);
    CHECK(det(s.u) != 0);
    CHECK(det(s.v) != 0);
  }
}

TEST_CASE("smith normal form: randomized UAV = D with unimodular U, V") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 6), val(-20, 20);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a(static_cast<size_t>(dim(rng)),
                std::vector<Int>(static_cast<size_t>(dim(rng))));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    SnfResult s = smith_normal_form(a);
    CHECK(matmul(matmul(s.u, a), s.v) == s.d);
    Int du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("fan validation") {
  CHECK(!projective_space_fan(2).validate());
  CHECK(!projective_space_fan(4).validate());
  CHECK(!hirzebruch_fan(1).validate());
  CHECK(!weighted_p112_fan().validate());
  FanData bad = projective_space_fan(2);
  bad.max_cones.pop_back();  // ridge no longer shared by two cones
  CHECK(bad.validate().has_value());
  FanData imprimitive = projective_space_fan(2);
  imprimitive.rays[0] = {Int(2), Int(0)};
  CHECK(imprimitive.validate().has_value());
}

TEST_CASE("class groups of the corpus") {
  ClassGroupDescriptor p2 = class_group(projective_space_fan(2));
  CHECK(p2.free_rank == 1);
  CHECK(p2.torsion.empty());

  ClassGroupDescriptor p1p1 = class_group(
      product_fan(projective_space_fan(1), projective_space_fan(1)));
  CHECK(p1p1.free_rank == 2);
  CHECK(p1p1.torsion.empty());

  ClassGroupDescriptor p112 = class_group(weighted_p112_fan());
  CHECK(p112.free_rank == 1);
  CHECK(p112.torsion.empty());

  for (int n = 1; n <= 5; ++n) {
    ClassGroupDescriptor cg = class_group(projective_space_fan(n));
    CHECK(cg.free_rank == 1);
  }
}

TEST_CASE("ray partitions") {
  RayPartition p2 = ray_partition(projective_space_fan(2));
  REQUIRE(p2.sizes == std::vector<int>{3});

  RayPartition p1p1 = ray_partition(
      product_fan(projective_space_fan(1), projective_space_fan(1)));
  CHECK(p1p1.sizes == std::vector<int>{2, 2});

  RayPartition p2p2 = ray_partition(
      product_fan(projective_space_fan(2), projective_space_fan(2)));
  CHECK(p2p2.sizes == std::vector<int>{3, 3});

  RayPartition f1 = ray_partition(hirzebruch_fan(1));
  CHECK(f1.sizes == std::vector<int>{2, 1, 1});

  // block count at least d - n
  for (int n = 1; n <= 4; ++n) {
    FanData fan = projective_space_fan(n);
    RayPartition part = ray_partition(fan);
    CHECK(static_cast<int>(part.blocks.size()) >= fan.ray_count() - fan.rank);
  }
}

TEST_CASE("partition size bound and product detection") {
  PartitionBoundReport p4 = partition_bound_check(projective_space_fan(4));
  CHECK(p4.sum_ok);
  CHECK(p4.equality);
  REQUIRE(p4.product_decomposition.has_value());
  CHECK(*p4.product_decomposition == std::vector<int>{5});

  PartitionBoundReport p2p2 = partition_bound_check(
      product_fan(projective_space_fan(2), projective_space_fan(2)));
  CHECK(p2p2.equality);
  REQUIRE(p2p2.product_decomposition.has_value());
  CHECK(*p2p2.product_decomposition == std::vector<int>{3, 3});

  PartitionBoundReport f1 = partition_bound_check(hirzebruch_fan(1));
  CHECK(f1.sum_ok);
  CHECK(!f1.equality);

  PartitionBoundReport p112 = partition_bound_check(weighted_p112_fan());
  CHECK(p112.sum_ok);

  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      PartitionBoundReport rep = partition_bound_check(
          product_fan(projective_space_fan(a), projective_space_fan(b)));
      REQUIRE(rep.product_decomposition.has_value());
      std::vector<int> want = {a + 1, b + 1};
      std::sort(want.begin(), want.end(), std::greater<int>());
      CHECK(*rep.product_decomposition == want);
    }
}

TEST_CASE("torsion in the class group is compared exactly") {
  // plane quotient by a third root of unity: Cl = Z + Z/3
  FanData fan;
  fan.rank = 2;
  fan.rays = {{Int(3), Int(-2)}, {Int(0), Int(1)}, {Int(-3), Int(1)}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  REQUIRE(!fan.validate());
  ClassGroupDescriptor cg = class_group(fan);
  CHECK(cg.free_rank == 1);
  REQUIRE(cg.torsion.size() == 1);
  CHECK(cg.torsion[0] == 3);
  // the three ray classes differ in the torsion coordinate
  RayPartition part = ray_partition(fan);
  CHECK(part.sizes == std::vector<int>{1, 1, 1});
  PartitionBoundReport rep = partition_bound_check(fan);
  CHECK(rep.sum_ok);
  CHECK(!rep.equality);
}

TEST_CASE("toric bound values") {
  CHECK(toric_symmetry_bound(1) == 4);
  CHECK(toric_symmetry_bound(2) == 5);
  CHECK(toric_symmetry_bound(3) == 6);
  CHECK(toric_symmetry_bound(4) == 6);
  CHECK(toric_symmetry_bound(10) == 12);
}

TEST_CASE("ray file round trip") {
  std::istringstream in(
      "2 4\n"
      "1 0\n"
      "0 1\n"
      "-1 1\n"
      "0 -1\n"
      "1 2\n"
      "2 3\n"
      "3 4\n"
      "4 1\n");
  FanData fan = parse_ray_file(in);
  CHECK(fan.rank == 2);
  CHECK(fan.ray_count() == 4);
  CHECK(!fan.validate());
  ClassGroupDescriptor cg = class_group(fan);
  CHECK(cg.free_rank == 2);

  std::istringstream trunc("2 3\n1 0\n0 1\n");
  CHECK_THROWS_AS(parse_ray_file(trunc), std::invalid_argument);
  std::istringstream badidx("1 2\n1\n-1\n1\n5\n");
  CHECK_THROWS_AS(parse_ray_file(badidx), std::invalid_argument);
}
