#pragma once

// Power-sum (Fermat) complete intersections: the closed-form smoothness
// criterion for degrees (1..m), the generalized-Vandermonde rank of value
// patterns, and a stratified singular-point search over the affine cone.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::fermat {

// X = {p_{d_1} = ... = p_{d_m} = 0} in P^N with p_d = sum_i x_i^d.
struct FermatCI {
  int ambient = 0;             // N
  std::vector<long> degrees;   // d_1 < ... < d_m

  int codim() const { return static_cast<int>(degrees.size()); }
  bool valid() const;
};

// Coordinate multiset of a point on the affine cone, up to scaling: r
// pairwise-distinct nonzero values with multiplicities, plus a zero block.
struct ValuePattern {
  std::vector<std::complex<double>> values;
  std::vector<Rat> exact_values;  // parallel to values when all rational
  std::vector<int> multiplicities;
  int zero_multiplicity = 0;

  bool is_exact() const { return !exact_values.empty(); }
};

enum class VerdictStatus { SmoothByLemma, SmoothNoWitness, SingularWitness };
enum class CertKind { Exact, NumericResidual };

struct SmoothnessVerdict {
  VerdictStatus status = VerdictStatus::SmoothNoWitness;
  std::optional<ValuePattern> witness;
  CertKind certification = CertKind::Exact;
  double tolerance = 0.0;          // meaningful for NumericResidual
  double witness_residual = 0.0;   // max |p_d| at the witness, numeric view
};

struct SearchOptions {
  double residual_tol = 1e-9;
  double rank_tol = 1e-8;
  int max_codim = 4;
  int max_ambient = 12;
  bool skip_lemma = false;  // force the stratified search even when the
                            // closed-form criterion applies
};

// True iff degrees are exactly (1, 2, ..., m) with m <= N-1; such an
// intersection is smooth and irreducible in every characteristic-zero model.
bool lemma_smooth_applies(const FermatCI& ci);

// Rank of the matrix whose columns are (v^e)_{e in exponents} over the
// distinct values, plus the 0^e column (0^0 = 1) when zero_multiplicity > 0.
int gv_rank(const std::vector<long>& exponents, const std::vector<Rat>& values,
            int zero_multiplicity);

// Numeric variant with pivot tolerance; throws IndeterminateError when a
// pivot magnitude falls within a decade of the tolerance.
int gv_rank(const std::vector<long>& exponents,
            const std::vector<std::complex<double>>& values,
            int zero_multiplicity, double tol = 1e-8);

// Stratified search for a singular point of the punctured affine cone.
SmoothnessVerdict singular_point_search(const FermatCI& ci,
                                        const SearchOptions& opt = {});

struct VerdictRow {
  int ambient;
  std::vector<long> degrees;
  SmoothnessVerdict verdict;
};

// The named example battery: smooth/singular status of the low-degree
// Fermat complete intersections appearing in the bound-sharpness analysis.
std::vector<VerdictRow> verdict_suite(const SearchOptions& opt = {});

const char* verdict_name(VerdictStatus s);

}  // namespace fsl::fermat
