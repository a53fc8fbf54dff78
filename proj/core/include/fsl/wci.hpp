#pragma once

// Weight/degree combinatorics of weighted complete intersections: adjunction
// and classification, the degree inequalities, the sharp bound functions for
// Fano and Calabi-Yau symmetric actions, and the exhaustive shape search
// certifying the bound together with the admissible ambient spaces.

#include <optional>
#include <string>
#include <vector>

#include "fsl/numeric.hpp"

namespace fsl::wci {

enum class Kind { Fano, CalabiYau };
enum class VarietyClass { Fano, CalabiYau, GeneralType };

// X_{d_1..d_m} in P(a_0..a_N); weights and degrees kept sorted ascending.
struct WciCandidate {
  std::vector<long> weights;  // a_0 <= ... <= a_N, N >= 1
  std::vector<long> degrees;  // d_1 <= ... <= d_m, 1 <= m <= N

  int ambient_dim() const { return static_cast<int>(weights.size()) - 1; }
  int codim() const { return static_cast<int>(degrees.size()); }
  int dim() const { return ambient_dim() - codim(); }
  long weight_sum() const;
  long degree_sum() const;
  bool valid() const;
};

// k - 1 permuted variables of common weight b plus the leftover weights.
struct SymmetricShape {
  int k = 0;
  long b = 1;
  std::vector<long> extra_weights;
};

struct SearchWitness {
  int k = 0;
  SymmetricShape shape;
  std::vector<long> degrees;
  std::string ambient;  // e.g. "P^6" or "P(1^7,4)"
};

struct SearchOutcome {
  int n = 0;
  Kind kind = Kind::Fano;
  int max_feasible_k = 0;
  std::vector<SearchWitness> witnesses;      // all survivors at max k
  std::vector<std::string> ambient_shapes;   // distinct ambients at max k
  long degree_cap = 0;                       // enumeration cap actually used
  bool upper_bound_only = true;  // necessary conditions; sharpness is
                                 // certified separately by explicit examples
};

bool well_formed_space(const std::vector<long>& weights);

// Combinatorial surrogate for "no defining equation has a linear term":
// no degree coincides with any weight.
bool linear_cone_free(const WciCandidate& c);

long canonical_degree(const WciCandidate& c);  // sum(d) - sum(a)
VarietyClass classify(const WciCandidate& c);
long fano_index(const WciCandidate& c);  // requires classify == Fano

struct IfReport {
  bool part1 = false;
  std::optional<bool> part2;  // engaged only when m >= dim + 1
};

// The two degree/weight inequality systems for quasismooth complete
// intersections without linear terms.
IfReport if_inequalities(const WciCandidate& c);

bool codim_bound(const WciCandidate& c, Kind kind);

// Sharp bound functions; exact integer evaluation via integer square root.
int c_fano(long n);
int c_cy(long n);

// Largest k >= n+2 with (k-n-1)(k-n)/2 < k (strict) or <= k (non-strict),
// found by direct scan. Agrees with c_fano / c_cy.
int max_k_degree_condition(long n, bool strict);

// ((alpha+1)(alpha+2)/2 - 1) * b
long sigma_degree_lower_bound(int alpha, long b);

long vandermonde_degree(int k, long b);  // k(k-1)/2 * b

// sum(extra weights) + ((k-n-1)(k-n)/2 - 1) * b
long total_degree_lower_bound(int n, int k, const std::vector<long>& extras,
                              long b);

// k - (k-n)(k-n-1)/2
long index_upper_bound(int n, int k);

// The power-sum complete intersection of degrees 1..m in P^{n+m} with
// m = c_fano(n) - n - 1, presented as a candidate plus its symmetric shape.
std::pair<WciCandidate, SymmetricShape> maximal_example(int n);

// Exhaustive search over symmetric shapes by descending k; certifies the
// upper bound and lists the surviving ambient spaces at the maximal k.
SearchOutcome search_max_symmetric(int n, Kind kind);

}  // namespace fsl::wci
