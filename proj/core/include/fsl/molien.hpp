#pragma once

// Molien series of finite matrix groups and greedy extraction of invariant
// ring generator degrees from the resulting Hilbert function.

#include <vector>

#include "fsl/spin_group.hpp"

namespace fsl::spinmolien {

struct TruncatedSeries {
  int cap = 0;
  std::vector<Rat> coeffs;  // c_0 .. c_cap

  const Rat& at(int d) const { return coeffs.at(static_cast<size_t>(d)); }
  std::vector<Int> integer_coeffs() const;  // throws if any c_d non-integer
};

// Coefficient of t^d is (1/|G|) sum_g [t^d] 1/det(I - t g), computed exactly.
// Aborts (logic_error) if any coefficient comes out non-integer or negative;
// that signals an arithmetic bug, never something to round away.
// threads = 0 means use FSL_THREADS or the hardware count.
TruncatedSeries molien_series(const FiniteMatrixGroup& g, int cap,
                              int threads = 0);

struct GeneratorDegrees {
  std::vector<std::pair<int, int>> degrees;  // (degree, count)
  int reliable_up_to = 0;  // last degree with nonnegative residual
};

// Greedy extraction: repeatedly subtract the Hilbert series of the free
// graded algebra on the generators found so far. Exact only below the first
// relation degree; a negative residual stops extraction and caps the marker.
GeneratorDegrees generator_degrees(const TruncatedSeries& series, int cap);

// Series of the free graded algebra with the given generator degrees,
// truncated at cap. Used both by the extraction and as a test oracle.
TruncatedSeries free_algebra_series(const std::vector<std::pair<int, int>>& degrees,
                                    int cap);

}  // namespace fsl::spinmolien
