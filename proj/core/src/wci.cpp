#include "fsl/wci.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fsl::wci {

long WciCandidate::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0L);
}

long WciCandidate::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0L);
}

bool WciCandidate::valid() const {
  if (weights.size() < 2 || degrees.empty()) return false;
  if (degrees.size() > weights.size() - 1) return false;
  if (dim() < 1) return false;
  if (!std::is_sorted(weights.begin(), weights.end())) return false;
  if (!std::is_sorted(degrees.begin(), degrees.end())) return false;
  for (long a : weights)
    if (a < 1) return false;
  for (long d : degrees)
    if (d < 1) return false;
  return true;
}

bool well_formed_space(const std::vector<long>& weights) {
  if (weights.empty()) throw std::invalid_argument("well_formed_space: empty");
  const size_t n = weights.size();
  for (size_t omit = 0; omit < n; ++omit) {
    long g = 0;
    for (size_t i = 0; i < n; ++i)
      if (i != omit) g = std::gcd(g, weights[i]);
    if (g != 1) return false;
  }
  return true;
}

bool linear_cone_free(const WciCandidate& c) {
  if (!c.valid()) throw std::invalid_argument("linear_cone_free: invalid");
  for (long d : c.degrees)
    for (long a : c.weights)
      if (d == a) return false;
  return true;
}

long canonical_degree(const WciCandidate& c) {
  if (!c.valid()) throw std::invalid_argument("canonical_degree: invalid");
  return c.degree_sum() - c.weight_sum();
}

VarietyClass classify(const WciCandidate& c) {
  long kd = canonical_degree(c);
  if (kd < 0) return VarietyClass::Fano;
  if (kd == 0) return VarietyClass::CalabiYau;
  return VarietyClass::GeneralType;
}

long fano_index(const WciCandidate& c) {
  if (classify(c) != VarietyClass::Fano)
    throw std::domain_error("fano_index: candidate is not Fano");
  return -canonical_degree(c);
}

IfReport if_inequalities(const WciCandidate& c) {
  if (!c.valid()) throw std::invalid_argument("if_inequalities: invalid");
  IfReport rep;
  const auto& a = c.weights;
  const auto& d = c.degrees;
  const int m = c.codim();
  const int N = c.ambient_dim();
  rep.part1 = true;
  for (int j = 0; j < m; ++j)
    if (d[m - 1 - j] <= a[N - j]) {
      rep.part1 = false;
      break;
    }
  const int dim = c.dim();
  if (m >= dim + 1) {
    bool ok = true;
    for (int j = 0; j <= dim; ++j)
      if (d[m - 1 - j] - a[N - j] < a[dim - j]) {
        ok = false;
        break;
      }
    rep.part2 = ok;
  }
  return rep;
}

bool codim_bound(const WciCandidate& c, Kind kind) {
  if (!c.valid()) throw std::invalid_argument("codim_bound: invalid");
  const long two_m = 2L * c.codim();
  const long np1 = c.ambient_dim() + 1;
  return kind == Kind::Fano ? two_m < np1 : two_m <= np1;
}

namespace {
// floor and ceil of (1 + sqrt(8n+9))/2 without floating point
void half_sqrt_bounds(long n, long& fl, long& ce) {
  Int x = Int(8) * n + 9;
  Int t = isqrt(x);
  long tl = to_long(t);
  if (t * t == x) {
    fl = (1 + tl) / 2;  // 8n+9 odd, so t is odd and this is exact
    ce = fl;
  } else {
    fl = (1 + tl) / 2;
    ce = fl + 1;
  }
}
}  // namespace

int c_fano(long n) {
  if (n < 1) throw std::invalid_argument("c_fano: n >= 1");
  long fl, ce;
  half_sqrt_bounds(n, fl, ce);
  return static_cast<int>(n + ce);
}

int c_cy(long n) {
  if (n < 1) throw std::invalid_argument("c_cy: n >= 1");
  long fl, ce;
  half_sqrt_bounds(n, fl, ce);
  return static_cast<int>(n + fl + 1);
}

int max_k_degree_condition(long n, bool strict) {
  if (n < 1) throw std::invalid_argument("max_k_degree_condition: n >= 1");
  auto holds = [&](long k) {
    long lhs = (k - n - 1) * (k - n) / 2;
    return strict ? lhs < k : lhs <= k;
  };
  long k = n + 2;
  if (!holds(k)) throw std::logic_error("degree condition fails at n+2");
  while (holds(k + 1)) ++k;
  return static_cast<int>(k);
}

long sigma_degree_lower_bound(int alpha, long b) {
  if (alpha < 1 || b < 1)
    throw std::invalid_argument("sigma_degree_lower_bound: bad input");
  return (static_cast<long>(alpha + 1) * (alpha + 2) / 2 - 1) * b;
}

long vandermonde_degree(int k, long b) {
  if (k < 2) throw std::invalid_argument("vandermonde_degree: k >= 2");
  return static_cast<long>(k) * (k - 1) / 2 * b;
}

long total_degree_lower_bound(int n, int k, const std::vector<long>& extras,
                              long b) {
  if (k < n + 2) throw std::invalid_argument("total_degree_lower_bound: k");
  long s = std::accumulate(extras.begin(), extras.end(), 0L);
  return s + (static_cast<long>(k - n - 1) * (k - n) / 2 - 1) * b;
}

long index_upper_bound(int n, int k) {
  if (k < n + 2) throw std::invalid_argument("index_upper_bound: k >= n+2");
  return k - static_cast<long>(k - n) * (k - n - 1) / 2;
}

std::pair<WciCandidate, SymmetricShape> maximal_example(int n) {
  if (n < 1) throw std::invalid_argument("maximal_example: n >= 1");
  const int m = c_fano(n) - n - 1;
  WciCandidate c;
  c.weights.assign(static_cast<size_t>(n + m + 1), 1);
  for (int d = 1; d <= m; ++d) c.degrees.push_back(d);
  SymmetricShape shape;
  shape.k = n + m + 1;
  shape.b = 1;
  return {c, shape};
}

// ---------------------------------------------------------------------------
// Exhaustive shape search
// ---------------------------------------------------------------------------

namespace {

struct SearchCtx {
  int n = 0;
  Kind kind = Kind::Fano;
  long node_budget = 200'000'000;
  long nodes = 0;
  long degree_cap = 0;

  void tick() {
    if (++nodes > node_budget)
      throw BudgetError("search_max_symmetric: node budget exceeded");
  }
};

std::string ambient_descriptor(int k, long b, const std::vector<long>& extras) {
  if (extras.empty()) return "P^" + std::to_string(k - 2);
  std::string s = "P(" + std::to_string(b) + "^" + std::to_string(k - 1);
  for (long a : extras) s += "," + std::to_string(a);
  s += ")";
  return s;
}

// Necessary condition for quasismoothness at the coordinate point of each
// extra-weight variable: some equation admits a pure power z_t^r (r >= 2) or
// a monomial z_s z_t^r with s != t. Permuted-block variables cannot supply
// such a monomial because they enter only through invariants of degree >= 2b.
bool extras_coordinate_points_ok(const std::vector<long>& extras,
                                 const std::vector<long>& degrees) {
  for (size_t t = 0; t < extras.size(); ++t) {
    const long at = extras[t];
    bool ok = false;
    for (long d : degrees) {
      if (d % at == 0 && d / at >= 2) {
        ok = true;
        break;
      }
      for (size_t s = 0; s < extras.size() && !ok; ++s) {
        if (s == t) continue;
        long rem = d - extras[s];
        if (rem >= at && rem % at == 0) ok = true;
      }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

void check_full_candidate(SearchCtx& ctx, int k, long b,
                          const std::vector<long>& extras,
                          const std::vector<long>& degrees,
                          std::vector<SearchWitness>& out) {
  WciCandidate c;
  c.weights.assign(static_cast<size_t>(k - 1), b);
  c.weights.insert(c.weights.end(), extras.begin(), extras.end());
  std::sort(c.weights.begin(), c.weights.end());
  c.degrees = degrees;

  if (!c.valid()) return;
  long kd = canonical_degree(c);
  if (ctx.kind == Kind::Fano ? kd >= 0 : kd != 0) return;
  if (!well_formed_space(c.weights)) return;
  if (!linear_cone_free(c)) return;
  IfReport ifr = if_inequalities(c);
  if (!ifr.part1) return;
  if (ifr.part2 && !*ifr.part2) return;
  if (!codim_bound(c, ctx.kind)) return;
  if (!extras_coordinate_points_ok(extras, degrees)) return;

  SearchWitness w;
  w.k = k;
  w.shape = SymmetricShape{k, b, extras};
  w.degrees = degrees;
  w.ambient = ambient_descriptor(k, b, extras);
  out.push_back(std::move(w));
}

void enumerate_extras(SearchCtx& ctx, int k, long b,
                      const std::vector<long>& degrees, int e,
                      std::vector<long>& extras, long remaining_required,
                      long max_single, std::vector<SearchWitness>& out) {
  ctx.tick();
  const int placed = static_cast<int>(extras.size());
  if (placed == e) {
    // For CY the sum must land exactly; remaining_required tracks the
    // shortfall of sum(extras) against sum(d) - (k-1) b.
    check_full_candidate(ctx, k, b, extras, degrees, out);
    return;
  }
  const long lo = extras.empty() ? 1 : extras.back();
  for (long a = lo; a <= max_single; ++a) {
    // Even taking the maximum for every remaining slot cannot reach the
    // required total: deeper values only grow, so stop.
    long slots_left = e - placed - 1;
    if (a + slots_left * max_single < remaining_required) continue;
    if (ctx.kind == Kind::CalabiYau && a > remaining_required) break;
    extras.push_back(a);
    enumerate_extras(ctx, k, b, degrees, e, extras, remaining_required - a,
                     max_single, out);
    extras.pop_back();
  }
}

void enumerate_degrees(SearchCtx& ctx, int k, long b, int e, int m,
                       std::vector<long>& degrees, long sum_so_far,
                       long degree_cap, std::vector<SearchWitness>& out) {
  ctx.tick();
  const int placed = static_cast<int>(degrees.size());
  if (placed == m) {
    const long total = sum_so_far;
    const long base = static_cast<long>(k - 1) * b;
    long required = total - base;  // what the extras must sum to
    if (ctx.kind == Kind::Fano) required += 1;
    if (e == 0) {
      if (required <= 0) check_full_candidate(ctx, k, b, {}, degrees, out);
      return;
    }
    const long max_single = degrees.back() - 1;
    if (max_single < 1) return;
    std::vector<long> extras;
    enumerate_extras(ctx, k, b, degrees, e, extras, std::max(required, 0L),
                     max_single, out);
    return;
  }
  const long lo = std::max(placed == 0 ? 2 * b : degrees.back(),
                           sigma_degree_lower_bound(placed + 1, b) - sum_so_far);
  for (long d = lo; d <= degree_cap; ++d) {
    // Feasibility of the sign condition: remaining degrees are >= d each,
    // extras are < d_m <= degree_cap each.
    long min_total = sum_so_far + d * (m - placed);
    long max_weights = static_cast<long>(k - 1) * b +
                       static_cast<long>(e) * (degree_cap - 1);
    if (ctx.kind == Kind::Fano ? min_total >= max_weights
                               : min_total > max_weights)
      break;
    degrees.push_back(d);
    enumerate_degrees(ctx, k, b, e, m, degrees, sum_so_far + d, degree_cap,
                      out);
    degrees.pop_back();
  }
}

std::vector<SearchWitness> survivors_at_k(SearchCtx& ctx, int k) {
  std::vector<SearchWitness> out;
  const int n = ctx.n;
  const int e_hi_form = ctx.kind == Kind::Fano ? 2 * n + 2 - k : 2 * n + 3 - k;
  const int e_lo = std::max(0, n - k + 3);
  const int e_hi = std::min(e_hi_form, k - 2);
  const long b_cap = n + 2;
  // Slack of the sign condition against the filters: summing the prefix
  // bound on the first k-n-1 degrees, the pointwise degree/weight
  // inequalities on the rest, and the coordinate-point condition on the
  // largest extra gives sum(a) - sum(d) <= b*(k - (k-n)(k-n+1)/2) + 2 - e
  // whenever e >= 2.
  const long bracket = k - static_cast<long>(k - n) * (k - n + 1) / 2;
  for (int e = e_lo; e <= e_hi; ++e) {
    const int m = k - 2 + e - n;
    if (m < 1) continue;
    // One or fewer extras force b = 1: omitting the extra slot leaves only
    // the k-1 equal weights, whose gcd must be 1.
    const long b_hi = e <= 1 ? 1 : b_cap;
    for (long b = 1; b <= b_hi; ++b) {
      if (e >= 2) {
        const long slack = b * bracket + 2 - e;
        if (ctx.kind == Kind::Fano ? slack <= 0 : slack < 0) continue;
      }
      const long degree_cap = 4L * k * b;
      ctx.degree_cap = std::max(ctx.degree_cap, degree_cap);
      std::vector<long> degrees;
      enumerate_degrees(ctx, k, b, e, m, degrees, 0, degree_cap, out);
    }
  }
  // Survivors sitting on an enumeration cap would make the listing
  // unreliable; refuse rather than truncate silently.
  for (const auto& w : out) {
    if (w.shape.b == b_cap || w.degrees.back() >= 4L * k * w.shape.b)
      throw BudgetError("search_max_symmetric: survivor at enumeration cap");
  }
  return out;
}

}  // namespace

SearchOutcome search_max_symmetric(int n, Kind kind) {
  if (n < 4 || n > 12)
    throw std::invalid_argument("search_max_symmetric: 4 <= n <= 12");
  SearchCtx ctx;
  ctx.n = n;
  ctx.kind = kind;

  SearchOutcome outcome;
  outcome.n = n;
  outcome.kind = kind;

  const int k_hi = max_k_degree_condition(n, kind == Kind::Fano) + 3;
  for (int k = k_hi; k >= n + 2; --k) {
    std::vector<SearchWitness> ws = survivors_at_k(ctx, k);
    if (!ws.empty()) {
      outcome.max_feasible_k = k;
      outcome.witnesses = std::move(ws);
      std::set<std::string> ambients;
      for (const auto& w : outcome.witnesses) ambients.insert(w.ambient);
      outcome.ambient_shapes.assign(ambients.begin(), ambients.end());
      outcome.degree_cap = ctx.degree_cap;
      return outcome;
    }
  }
  throw std::logic_error("search_max_symmetric: no feasible k found");
}

}  // namespace fsl::wci
