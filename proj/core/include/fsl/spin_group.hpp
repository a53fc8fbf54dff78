#pragma once

// Exact matrix model of the double cover of the alternating group inside
// the even Clifford algebra of the permutation representation, plus generic
// breadth-first closure of finite matrix groups.

#include <vector>

#include "fsl/exact_matrix.hpp"

namespace fsl::spinmolien {

class ExplosionError : public std::runtime_error {
 public:
  explicit ExplosionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Generators of the spin double cover of Alt(k), 4 <= k <= 9.
//
// Each transposition (i, i+1) of Sym(k) acts on C^k as the reflection in
// u_i = (e_i - e_{i+1})/sqrt(2); its Clifford lift is the matrix
// R_i = (G_i - G_{i+1})/sqrt(2) for anticommuting gamma matrices G_a with
// a fixed common square. The returned generators are the even products
// M_i = R_i * R_{k-1}, i = 1..k-2, which are rational and generate the full
// preimage of Alt(k), of order k!.
//
// For k in {4, 8, 9} the all-ones vector has length in Q(sqrt 2), so the
// spinor space splits by an exact chirality projector and the generators are
// returned in the basic spin dimension 2^floor((k-2)/2) (4 for k = 4); the
// k = 8 chirality basis carries sqrt(2) entries.
// For k in {5, 6, 7} the minimal spin representation is quaternionic or
// complex and admits no model over a real field; the generators act on the
// doubled (8-dimensional) spinor space instead.
std::vector<ExactMatrix> clifford_even_generators(int k);

// Matrix size used by clifford_even_generators for this k.
int clifford_model_dim(int k);

struct FiniteMatrixGroup {
  int dim = 0;
  std::vector<ExactMatrix> generators;
  std::vector<ExactMatrix> elements;  // breadth-first discovery order

  size_t order() const { return elements.size(); }
  bool contains(const ExactMatrix& m) const;
};

// Breadth-first closure under multiplication. Throws ExplosionError as soon
// as the element count would exceed max_order.
FiniteMatrixGroup close_group(const std::vector<ExactMatrix>& generators,
                              size_t max_order = 1u << 20);

enum class PermRepMode { Natural, Standard };

// Permutation matrix of perm (image vector, 0-based), or its restriction to
// the sum-zero subspace in the basis e_i - e_{i+1}.
ExactMatrix permutation_rep(const std::vector<int>& perm, PermRepMode mode);

}  // namespace fsl::spinmolien
