#pragma once

// Class groups and ray partitions of complete simplicial fans: Smith normal
// form of the divisor sequence, grouping of rays by divisor class, the
// partition-size bounds, and product-of-projective-spaces detection.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::toric {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major

struct SnfResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal with d_i | d_{i+1}
  IntMatrix v;  // cols x cols, unimodular
};

// U A V = D with nonnegative diagonal invariant factors.
SnfResult smith_normal_form(const IntMatrix& a);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
Int det(const IntMatrix& a);

struct FanData {
  int rank = 0;                        // n
  std::vector<std::vector<Int>> rays;  // d primitive vectors in Z^n
  std::vector<std::vector<int>> max_cones;  // 0-based ray index sets

  int ray_count() const { return static_cast<int>(rays.size()); }

  // Validates primitivity, simpliciality, the pseudo-manifold completeness
  // proxy (every ridge in exactly two max cones, connected adjacency), and
  // that the rays span Q^n. Returns an error message, or nullopt when valid.
  std::optional<std::string> validate() const;
};

struct ClassGroupDescriptor {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
};

// Cokernel of M -> Z^{Delta(1)}, m |-> (<m, n_rho>)_rho, via SNF.
ClassGroupDescriptor class_group(const FanData& fan);

struct RayPartition {
  std::vector<std::vector<int>> blocks;  // ray indices, same divisor class
  std::vector<int> sizes;                // descending
};

RayPartition ray_partition(const FanData& fan);

struct PartitionBoundReport {
  bool sum_ok = false;    // sum (d_i - 1) <= n
  bool equality = false;  // sum (d_i - 1) == n
  std::optional<std::vector<int>> product_decomposition;  // factor sizes d_i
};

// Checks the partition-size bound; on equality, verifies that the fan is a
// product of projective-space fans and reports the factor sizes.
PartitionBoundReport partition_bound_check(const FanData& fan);

// Sharp toric bound: n+3 for n <= 3, n+2 for n >= 4.
int toric_symmetry_bound(int n);

// Plain-text ray format: first line "n d", then d rays (n integers each),
// then one line per max cone of 1-based ray indices.
FanData parse_ray_file(std::istream& in);
FanData load_ray_file(const std::string& path);

// Builders for the standard test corpus.
FanData projective_space_fan(int n);
FanData product_fan(const FanData& a, const FanData& b);
FanData hirzebruch_fan(int a);
FanData weighted_p112_fan();

}  // namespace fsl::toric
