#pragma once

// Dimension tables and character-degree spectra for the symmetric and
// alternating groups and their covering groups.

#include <cstdint>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::grouprep {

// Weakly decreasing positive parts summing to k. Indexes the irreducible
// representations of Sym(k).
struct Partition {
  std::vector<int> parts;

  int sum() const;
  bool valid() const;
  Partition conjugate() const;
  bool operator==(const Partition&) const = default;
};

enum class Family { Sym, Alt, SchurSym, DoubleAlt, TripleAlt, SixAlt };

// A group family tag plus rank k. TripleAlt/SixAlt exist only for k in {6,7}.
struct GroupSpec {
  Family family;
  int k;

  bool valid() const;
};

struct DegreeSpectrum {
  // (dimension, multiplicity), dimensions strictly increasing.
  std::vector<std::pair<Int, int>> entries;
};

// All partitions of k in lexicographically decreasing order of part vectors.
// Throws std::invalid_argument for k < 1 or k > max_k.
std::vector<Partition> partitions(int k, int max_k = 40);

// Number of standard Young tableaux of shape lambda: k! / prod(hook lengths).
// The division is exact; a remainder indicates corrupted input.
Int hook_dimension(const Partition& lambda);

// Irreducible dimensions of Sym(k) that are <= bound, with multiplicities.
DegreeSpectrum sym_degree_spectrum(int k, const Int& bound);

// Degree of the smallest faithful representation of the named group.
// Small-k exceptional cells are a literal table; closed forms cover k large.
Int min_faithful_degree(const GroupSpec& g);

enum class SchurMultiplier { Trivial, Z2, Z6 };

SchurMultiplier schur_multiplier(Family family, int k);
const char* schur_multiplier_name(SchurMultiplier m);

// Largest k such that Sym(k) embeds in PGL_{n+1}(C), i.e. Sym(k) or its
// Schur cover has a faithful representation of degree at most n+1.
int largest_symmetric_on_projective_space(int n);

}  // namespace fsl::grouprep
