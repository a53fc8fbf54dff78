#include "fsl/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fsl/poly.hpp"

namespace fsl::fermat {

using poly::BiPoly;
using poly::KPoly;
using poly::Poly;

bool FermatCI::valid() const {
  if (ambient < 2 || degrees.empty()) return false;
  if (codim() > ambient) return false;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) return false;
    if (i > 0 && degrees[i] <= degrees[i - 1]) return false;  // repeats collapse
  }
  return true;
}

bool lemma_smooth_applies(const FermatCI& ci) {
  if (!ci.valid()) throw std::invalid_argument("lemma_smooth_applies: invalid");
  const int m = ci.codim();
  if (m > ci.ambient - 1) return false;
  for (int i = 0; i < m; ++i)
    if (ci.degrees[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// generalized Vandermonde rank
// ---------------------------------------------------------------------------

int gv_rank(const std::vector<long>& exponents, const std::vector<Rat>& values,
            int zero_multiplicity) {
  const int m = static_cast<int>(exponents.size());
  std::vector<std::vector<Rat>> cols;
  if (zero_multiplicity > 0) {
    std::vector<Rat> col(static_cast<size_t>(m), Rat(0));
    for (int j = 0; j < m; ++j)
      if (exponents[static_cast<size_t>(j)] == 0) col[static_cast<size_t>(j)] = 1;  // 0^0 = 1
    cols.push_back(std::move(col));
  }
  for (const Rat& v : values) {
    std::vector<Rat> col;
    for (long e : exponents) {
      Rat p(1);
      for (long t = 0; t < e; ++t) p *= v;
      col.push_back(p);
    }
    cols.push_back(std::move(col));
  }
  // Gaussian elimination on the m x cols matrix.
  int rank = 0;
  std::vector<std::vector<Rat>> mat(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j)
    for (const auto& col : cols) mat[static_cast<size_t>(j)].push_back(col[static_cast<size_t>(j)]);
  const int ncols = static_cast<int>(cols.size());
  int row = 0;
  for (int c = 0; c < ncols && row < m; ++c) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (mat[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(mat[static_cast<size_t>(row)], mat[static_cast<size_t>(piv)]);
    const Rat inv = 1 / mat[static_cast<size_t>(row)][static_cast<size_t>(c)];
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      Rat f = mat[static_cast<size_t>(r)][static_cast<size_t>(c)] * inv;
      if (f == 0) continue;
      for (int cc = c; cc < ncols; ++cc)
        mat[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
            f * mat[static_cast<size_t>(row)][static_cast<size_t>(cc)];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int gv_rank(const std::vector<long>& exponents,
            const std::vector<std::complex<double>>& values,
            int zero_multiplicity, double tol) {
  using C = std::complex<double>;
  const int m = static_cast<int>(exponents.size());
  std::vector<std::vector<C>> mat(static_cast<size_t>(m));
  auto add_col = [&](auto entry) {
    for (int j = 0; j < m; ++j) mat[static_cast<size_t>(j)].push_back(entry(j));
  };
  if (zero_multiplicity > 0)
    add_col([&](int j) { return C(exponents[static_cast<size_t>(j)] == 0 ? 1.0 : 0.0, 0.0); });
  for (const C& v : values)
    add_col([&](int j) { return std::pow(v, static_cast<double>(exponents[static_cast<size_t>(j)])); });

  const int ncols = static_cast<int>(mat[0].size());
  int rank = 0, row = 0;
  for (int c = 0; c < ncols && row < m; ++c) {
    int piv = -1;
    double best = 0;
    for (int r = row; r < m; ++r) {
      double a = std::abs(mat[static_cast<size_t>(r)][static_cast<size_t>(c)]);
      if (a > best) {
        best = a;
        piv = r;
      }
    }
    if (best > tol / 10 && best < tol * 10)
      throw IndeterminateError("gv_rank: pivot magnitude within tolerance band");
    if (piv < 0 || best <= tol) continue;
    std::swap(mat[static_cast<size_t>(row)], mat[static_cast<size_t>(piv)]);
    C inv = 1.0 / mat[static_cast<size_t>(row)][static_cast<size_t>(c)];
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      C f = mat[static_cast<size_t>(r)][static_cast<size_t>(c)] * inv;
      for (int cc = c; cc < ncols; ++cc)
        mat[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
            f * mat[static_cast<size_t>(row)][static_cast<size_t>(cc)];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// stratified singular-point search
// ---------------------------------------------------------------------------

namespace {

struct Stratum {
  int r = 0;                        // distinct nonzero values
  int zero_mult = 0;
  std::vector<int> mult;            // n_1 (value normalized to 1), n_2..n_r
};

enum class StratumOutcome { None, Witness, Unknown };

struct StratumResult {
  StratumOutcome outcome = StratumOutcome::None;
  ValuePattern pattern;
};

Poly power_poly(long e) {
  std::vector<Rat> c(static_cast<size_t>(e) + 1, Rat(0));
  c[static_cast<size_t>(e)] = 1;
  return Poly(std::move(c));
}

BiPoly bipoly_const(const Poly& p) { return BiPoly({p}); }

BiPoly bipoly_w_power(long e, const Rat& coeff) {
  std::vector<Poly> c(static_cast<size_t>(e) + 1);
  c[static_cast<size_t>(e)] = Poly(coeff);
  return BiPoly(std::move(c));
}

// Columns of the Jacobian value matrix as BiPolys: optional zero column,
// then the columns of the values 1, v, w (as available).
std::vector<std::vector<BiPoly>> jacobian_columns(const Stratum& st,
                                                  const std::vector<long>& exps) {
  std::vector<std::vector<BiPoly>> cols;
  const int m = static_cast<int>(exps.size());
  if (st.zero_mult > 0) {
    std::vector<BiPoly> col;
    for (int j = 0; j < m; ++j)
      col.push_back(bipoly_const(Poly(Rat(exps[static_cast<size_t>(j)] == 0 ? 1 : 0))));
    cols.push_back(std::move(col));
  }
  {
    std::vector<BiPoly> col;
    for (int j = 0; j < m; ++j) col.push_back(bipoly_const(Poly(Rat(1))));
    cols.push_back(std::move(col));
  }
  if (st.r >= 2) {
    std::vector<BiPoly> col;
    for (int j = 0; j < m; ++j) col.push_back(bipoly_const(power_poly(exps[static_cast<size_t>(j)])));
    cols.push_back(std::move(col));
  }
  if (st.r >= 3) {
    std::vector<BiPoly> col;
    for (int j = 0; j < m; ++j) col.push_back(bipoly_w_power(exps[static_cast<size_t>(j)], Rat(1)));
    cols.push_back(std::move(col));
  }
  return cols;
}

BiPoly bipoly_det(std::vector<std::vector<BiPoly>> m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  BiPoly acc;
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<BiPoly>> sub;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<BiPoly> row;
      for (size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    BiPoly term = m[i][0] * bipoly_det(std::move(sub));
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Full polynomial system for a stratum with r <= 3: power sums plus all
// maximal minors of the Jacobian value matrix (deficiency is automatic when
// there are fewer columns than equations).
std::vector<BiPoly> stratum_system(const Stratum& st,
                                   const std::vector<long>& degrees) {
  const int m = static_cast<int>(degrees.size());
  std::vector<BiPoly> sys;
  for (long d : degrees) {
    BiPoly s = bipoly_const(Poly(Rat(st.mult[0])));
    if (st.r >= 2) s = s + bipoly_const(power_poly(d).scaled(Rat(st.mult[1])));
    if (st.r >= 3) s = s + bipoly_w_power(d, Rat(st.mult[2]));
    sys.push_back(std::move(s));
  }
  std::vector<long> exps;
  for (long d : degrees) exps.push_back(d - 1);
  auto cols = jacobian_columns(st, exps);
  if (static_cast<int>(cols.size()) >= m) {
    // all m x m minors
    std::vector<int> pick(static_cast<size_t>(m));
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == m) {
        std::vector<std::vector<BiPoly>> mat(static_cast<size_t>(m),
                                             std::vector<BiPoly>(static_cast<size_t>(m)));
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c)
            mat[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                cols[static_cast<size_t>(pick[static_cast<size_t>(c)])][static_cast<size_t>(r)];
        BiPoly d = bipoly_det(std::move(mat));
        if (!d.is_zero()) sys.push_back(std::move(d));
        return;
      }
      for (int c = start; c < static_cast<int>(cols.size()); ++c) {
        pick[static_cast<size_t>(depth)] = c;
        self(self, c + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return sys;
}

Poly strip_trivial_v(Poly g) {
  const Poly v = Poly::x();
  const Poly v1 = Poly::x() - Poly(Rat(1));
  for (;;) {
    if (g.degree() < 1) return g;
    auto [q, r] = g.divmod(v);
    if (r.is_zero()) {
      g = q;
      continue;
    }
    auto [q1, r1] = g.divmod(v1);
    if (r1.is_zero()) {
      g = q1;
      continue;
    }
    return g;
  }
}

double pattern_residual(const ValuePattern& p, const std::vector<long>& degrees) {
  double worst = 0;
  for (long d : degrees) {
    std::complex<double> s(0, 0);
    for (size_t i = 0; i < p.values.size(); ++i)
      s += static_cast<double>(p.multiplicities[i]) *
           std::pow(p.values[i], static_cast<double>(d));
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

// Witness assembly for exact branches: pick deterministic numeric roots of
// the modulus / w-polynomial and label the pattern exact when rational.
StratumResult make_witness_u2(const Stratum& st, const Poly& modulus,
                              const KPoly& wpoly,
                              const std::vector<long>& degrees) {
  StratumResult res;
  res.outcome = StratumOutcome::Witness;
  ValuePattern& p = res.pattern;
  p.multiplicities = st.mult;
  p.zero_multiplicity = st.zero_mult;

  auto vroots = poly::complex_roots(modulus);
  // stripped of 0 and 1 already; take the first root
  std::complex<double> v0 = vroots.front();
  p.values = {std::complex<double>(1, 0), v0};
  std::complex<double> w0(0, 0);
  if (st.r >= 3) {
    // evaluate the w-polynomial coefficients at v0 and take its first
    // admissible root
    std::vector<std::complex<double>> wc;
    for (const auto& c : wpoly) wc.push_back(c.eval(v0));
    // Build a complex poly and run Durand-Kerner via a real embedding:
    // reuse complex_roots on small degrees by Horner deflation instead.
    // Newton from several starts on the complex polynomial.
    auto weval = [&](std::complex<double> w) {
      std::complex<double> val(0, 0);
      for (int i = static_cast<int>(wc.size()) - 1; i >= 0; --i)
        val = val * w + wc[static_cast<size_t>(i)];
      return val;
    };
    auto wderiv = [&](std::complex<double> w) {
      std::complex<double> val(0, 0);
      for (int i = static_cast<int>(wc.size()) - 1; i >= 1; --i)
        val = val * w + static_cast<double>(i) * wc[static_cast<size_t>(i)];
      return val;
    };
    bool found = false;
    std::vector<std::complex<double>> starts;
    for (int a = -2; a <= 2 && !found; ++a)
      for (int b = -2; b <= 2; ++b)
        starts.emplace_back(0.7 * a + 0.13, 0.7 * b + 0.29);
    for (const auto& s0 : starts) {
      std::complex<double> w = s0;
      for (int it = 0; it < 200; ++it) {
        std::complex<double> f = weval(w), df = wderiv(w);
        if (std::abs(df) < 1e-300) break;
        std::complex<double> step = f / df;
        w -= step;
        if (std::abs(step) < 1e-15) break;
      }
      if (std::abs(weval(w)) < 1e-10 && std::abs(w) > 1e-8 &&
          std::abs(w - 1.0) > 1e-8 && std::abs(w - v0) > 1e-8) {
        w0 = w;
        found = true;
        break;
      }
    }
    if (!found) {
      // fall back: existence is certain, approximation failed
      res.outcome = StratumOutcome::Unknown;
      return res;
    }
    p.values.push_back(w0);
  }
  // exact rational labels when everything is degree 1
  if (modulus.degree() == 1) {
    Rat v_exact = -modulus.coeff(0) / modulus.coeff(1);
    v_exact.canonicalize();
    if (st.r == 2) {
      p.exact_values = {Rat(1), v_exact};
    } else if (poly::kpoly_degree(wpoly) == 1) {
      // w = -c0/c1 with c_i rational constants mod a linear modulus
      Poly c0 = wpoly[0], c1 = wpoly[1];
      if (c0.degree() <= 0 && c1.degree() <= 0 && !c1.is_zero()) {
        Rat w_exact = -c0.coeff(0) / c1.coeff(0);
        w_exact.canonicalize();
        p.exact_values = {Rat(1), v_exact, w_exact};
      }
    }
  }
  return res;
}

constexpr int kMaxBranchDegree = 6;

// Exact decision for strata with at most two continuous unknowns.
StratumResult solve_stratum_exact(const Stratum& st,
                                  const std::vector<long>& degrees) {
  StratumResult res;
  const int u = st.r - 1;
  std::vector<BiPoly> sys = stratum_system(st, degrees);

  if (u == 0) {
    // one value, normalized to 1: first power sum is n_1 != 0
    res.outcome = StratumOutcome::None;
    return res;
  }

  if (u == 1) {
    Poly g;
    for (const auto& b : sys) g = poly::gcd(g, b.coeff_w(0));
    g = strip_trivial_v(poly::squarefree_part(g));
    if (g.degree() < 1) {
      res.outcome = StratumOutcome::None;
      return res;
    }
    KPoly none;
    return make_witness_u2(st, g, none, degrees);
  }

  // u == 2: eliminate w by pairwise resultants, then decide per branch of
  // the squarefree projection with dynamic splitting.
  std::vector<Poly> resultants;
  for (size_t i = 1; i < sys.size(); ++i)
    resultants.push_back(poly::resultant_w(sys[0], sys[i]));
  if (sys.size() >= 3)
    resultants.push_back(poly::resultant_w(sys[1], sys[2]));
  Poly g;
  for (const auto& r : resultants) g = poly::gcd(g, r);
  if (g.is_zero()) {
    res.outcome = StratumOutcome::Unknown;  // degenerate elimination
    return res;
  }
  g = strip_trivial_v(poly::squarefree_part(g));
  if (g.degree() < 1) {
    res.outcome = StratumOutcome::None;
    return res;
  }

  std::vector<Poly> branches{g};
  bool saw_unknown = false;
  while (!branches.empty()) {
    Poly m = branches.back();
    branches.pop_back();
    if (m.degree() < 1) continue;
    if (m.degree() > kMaxBranchDegree) {
      saw_unknown = true;
      continue;
    }
    try {
      KPoly h;
      bool first = true;
      for (const auto& b : sys) {
        KPoly kb = poly::kpoly_from(b, m);
        if (kb.empty()) continue;
        h = first ? kb : poly::kpoly_gcd(h, kb, m);
        first = false;
        if (!first && poly::kpoly_degree(h) == 0) break;
      }
      if (first) {
        // entire system vanished mod m: any w works, witness exists
        KPoly lin{Poly(Rat(2)), Poly(Rat(1))};  // w = -2 placeholder root
        return make_witness_u2(st, m, lin, degrees);
      }
      // strip w = 0, 1, v
      h = poly::kpoly_strip_root(h, Poly(), m);
      h = poly::kpoly_strip_root(h, Poly(Rat(1)), m);
      h = poly::kpoly_strip_root(h, Poly::x(), m);
      if (poly::kpoly_degree(h) >= 1) {
        StratumResult w = make_witness_u2(st, m, h, degrees);
        if (w.outcome == StratumOutcome::Witness) return w;
        saw_unknown = true;
      }
    } catch (const poly::SplitNeeded& split) {
      Poly f = split.factor.monic();
      branches.push_back(f);
      branches.push_back(m.exact_div(f).monic());
    }
  }
  res.outcome = saw_unknown ? StratumOutcome::Unknown : StratumOutcome::None;
  return res;
}

// Numeric multi-start damped Newton / Gauss-Newton for strata with three
// continuous unknowns (or as fallback when the exact path degenerates).
StratumResult solve_stratum_numeric(const Stratum& st,
                                    const std::vector<long>& degrees,
                                    const SearchOptions& opt) {
  using C = std::complex<double>;
  const int u = st.r - 1;
  const int m = static_cast<int>(degrees.size());
  StratumResult res;
  res.outcome = StratumOutcome::None;

  auto power_sum = [&](const std::vector<C>& vals, long d) {
    C s(static_cast<double>(st.mult[0]), 0);
    for (int i = 0; i < u; ++i)
      s += static_cast<double>(st.mult[static_cast<size_t>(i) + 1]) *
           std::pow(vals[static_cast<size_t>(i)], static_cast<double>(d));
    return s;
  };

  std::vector<C> grid;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      grid.emplace_back(0.8 * a + 0.21, 0.8 * b + 0.37);

  std::vector<std::vector<C>> starts;
  if (u == 1) {
    for (const auto& g0 : grid) starts.push_back({g0});
  } else if (u == 2) {
    for (size_t i = 0; i < grid.size(); i += 2)
      for (size_t j = 1; j < grid.size(); j += 3)
        starts.push_back({grid[i], grid[j]});
  } else {
    for (size_t i = 0; i < grid.size(); i += 3)
      for (size_t j = 1; j < grid.size(); j += 4)
        for (size_t l = 2; l < grid.size(); l += 5)
          starts.push_back({grid[i], grid[j], grid[l]});
  }

  for (const auto& s0 : starts) {
    std::vector<C> z = s0;
    bool converged = false;
    for (int it = 0; it < 120; ++it) {
      std::vector<C> f(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) f[static_cast<size_t>(j)] = power_sum(z, degrees[static_cast<size_t>(j)]);
      double fn = 0;
      for (const auto& x : f) fn += std::norm(x);
      if (fn < 1e-26) {
        converged = true;
        break;
      }
      // Jacobian m x u
      std::vector<std::vector<C>> J(static_cast<size_t>(m), std::vector<C>(static_cast<size_t>(u)));
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < u; ++i)
          J[static_cast<size_t>(j)][static_cast<size_t>(i)] =
              static_cast<double>(degrees[static_cast<size_t>(j)]) *
              static_cast<double>(st.mult[static_cast<size_t>(i) + 1]) *
              std::pow(z[static_cast<size_t>(i)], static_cast<double>(degrees[static_cast<size_t>(j)] - 1));
      // normal equations (J^H J) dz = J^H f
      std::vector<std::vector<C>> A(static_cast<size_t>(u), std::vector<C>(static_cast<size_t>(u), C(0, 0)));
      std::vector<C> rhs(static_cast<size_t>(u), C(0, 0));
      for (int i = 0; i < u; ++i) {
        for (int l = 0; l < u; ++l)
          for (int j = 0; j < m; ++j)
            A[static_cast<size_t>(i)][static_cast<size_t>(l)] +=
                std::conj(J[static_cast<size_t>(j)][static_cast<size_t>(i)]) * J[static_cast<size_t>(j)][static_cast<size_t>(l)];
        for (int j = 0; j < m; ++j)
          rhs[static_cast<size_t>(i)] += std::conj(J[static_cast<size_t>(j)][static_cast<size_t>(i)]) * f[static_cast<size_t>(j)];
      }
      // tiny dense solve with partial pivoting
      std::vector<C> dz(static_cast<size_t>(u), C(0, 0));
      {
        for (int c = 0; c < u; ++c) {
          int piv = -1;
          double best = 0;
          for (int r = c; r < u; ++r) {
            double a = std::abs(A[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            if (a > best) {
              best = a;
              piv = r;
            }
          }
          if (piv < 0 || best < 1e-300) {
            converged = false;
            it = 1000;
            break;
          }
          std::swap(A[static_cast<size_t>(c)], A[static_cast<size_t>(piv)]);
          std::swap(rhs[static_cast<size_t>(c)], rhs[static_cast<size_t>(piv)]);
          for (int r = c + 1; r < u; ++r) {
            C fmul = A[static_cast<size_t>(r)][static_cast<size_t>(c)] / A[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int cc = c; cc < u; ++cc)
              A[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= fmul * A[static_cast<size_t>(c)][static_cast<size_t>(cc)];
            rhs[static_cast<size_t>(r)] -= fmul * rhs[static_cast<size_t>(c)];
          }
        }
        if (it >= 1000) break;
        for (int r = u - 1; r >= 0; --r) {
          C s = rhs[static_cast<size_t>(r)];
          for (int cc = r + 1; cc < u; ++cc)
            s -= A[static_cast<size_t>(r)][static_cast<size_t>(cc)] * dz[static_cast<size_t>(cc)];
          dz[static_cast<size_t>(r)] = s / A[static_cast<size_t>(r)][static_cast<size_t>(r)];
        }
      }
      // damping
      double damp = 1.0;
      for (int tries = 0; tries < 6; ++tries) {
        std::vector<C> zn = z;
        for (int i = 0; i < u; ++i) zn[static_cast<size_t>(i)] -= damp * dz[static_cast<size_t>(i)];
        double fn2 = 0;
        for (int j = 0; j < m; ++j)
          fn2 += std::norm(power_sum(zn, degrees[static_cast<size_t>(j)]));
        if (fn2 < fn) {
          z = std::move(zn);
          break;
        }
        damp /= 2;
        if (tries == 5) z = zn;  // accept anyway to escape plateaus
      }
    }
    if (!converged) continue;
    // validity: distinct, nonzero, away from the normalized value 1
    bool ok = true;
    std::vector<C> all{C(1, 0)};
    for (const auto& x : z) all.push_back(x);
    for (size_t i = 0; i < all.size() && ok; ++i) {
      if (std::abs(all[i]) < 1e-7) ok = false;
      for (size_t j = i + 1; j < all.size() && ok; ++j)
        if (std::abs(all[i] - all[j]) < 1e-7) ok = false;
    }
    if (!ok) continue;
    // rank deficiency
    std::vector<long> exps;
    for (long d : degrees) exps.push_back(d - 1);
    int rank;
    try {
      rank = gv_rank(exps, all, st.zero_mult, opt.rank_tol);
    } catch (const IndeterminateError&) {
      res.outcome = StratumOutcome::Unknown;
      continue;
    }
    if (rank >= m) continue;
    ValuePattern p;
    p.values = all;
    p.multiplicities = st.mult;
    p.zero_multiplicity = st.zero_mult;
    if (pattern_residual(p, degrees) < opt.residual_tol) {
      res.outcome = StratumOutcome::Witness;
      res.pattern = std::move(p);
      return res;
    }
  }
  return res;
}

void enumerate_strata(const FermatCI& ci, std::vector<Stratum>& out) {
  const int total = ci.ambient + 1;
  const long dmax = ci.degrees.back();
  const int rmax = static_cast<int>(std::min<long>(dmax - 1, total));
  for (int r = 1; r <= rmax; ++r) {
    for (int zero = 0; zero + r <= total; ++zero) {
      const int rest = total - zero;
      // n1 attached to the normalized value, remaining parts ascending
      std::vector<int> parts;
      auto rec = [&](auto&& self, int remaining, int slots, int lo) -> void {
        if (slots == 0) {
          if (remaining == 0) {
            Stratum st;
            st.r = r;
            st.zero_mult = zero;
            st.mult = parts;
            out.push_back(std::move(st));
          }
          return;
        }
        for (int v = lo; v <= remaining - (slots - 1); ++v) {
          parts.push_back(v);
          self(self, remaining - v, slots - 1, v);
          parts.pop_back();
        }
      };
      for (int n1 = 1; n1 <= rest - (r - 1); ++n1) {
        parts = {n1};
        rec(rec, rest - n1, r - 1, 1);
        parts.clear();
      }
    }
  }
}

}  // namespace

SmoothnessVerdict singular_point_search(const FermatCI& ci,
                                        const SearchOptions& opt) {
  if (!ci.valid())
    throw std::invalid_argument("singular_point_search: invalid input");
  if (ci.codim() > opt.max_codim || ci.ambient > opt.max_ambient)
    throw BudgetError("singular_point_search: outside configured budget");

  SmoothnessVerdict verdict;
  if (!opt.skip_lemma && lemma_smooth_applies(ci)) {
    verdict.status = VerdictStatus::SmoothByLemma;
    verdict.certification = CertKind::Exact;
    return verdict;
  }

  std::vector<Stratum> strata;
  enumerate_strata(ci, strata);
  bool all_exact = true;
  for (const Stratum& st : strata) {
    const int u = st.r - 1;
    StratumResult res;
    if (u <= 2) {
      res = solve_stratum_exact(st, ci.degrees);
      if (res.outcome == StratumOutcome::Unknown) {
        res = solve_stratum_numeric(st, ci.degrees, opt);
        if (res.outcome != StratumOutcome::Witness) all_exact = false;
      }
    } else if (u == 3) {
      res = solve_stratum_numeric(st, ci.degrees, opt);
      if (res.outcome != StratumOutcome::Witness) all_exact = false;
    } else {
      throw BudgetError(
          "singular_point_search: stratum with more than three unknowns");
    }
    if (res.outcome == StratumOutcome::Witness) {
      verdict.status = VerdictStatus::SingularWitness;
      verdict.witness = res.pattern;
      verdict.witness_residual = pattern_residual(res.pattern, ci.degrees);
      verdict.certification =
          res.pattern.is_exact() ? CertKind::Exact : CertKind::NumericResidual;
      verdict.tolerance = opt.residual_tol;
      if (verdict.witness_residual >= opt.residual_tol)
        throw std::logic_error("singular_point_search: witness residual check");
      return verdict;
    }
  }
  verdict.status = VerdictStatus::SmoothNoWitness;
  verdict.certification = all_exact ? CertKind::Exact : CertKind::NumericResidual;
  verdict.tolerance = all_exact ? 0.0 : opt.residual_tol;
  return verdict;
}

std::vector<VerdictRow> verdict_suite(const SearchOptions& opt) {
  const std::vector<std::pair<int, std::vector<long>>> rows = {
      {7, {1, 2, 3}}, {6, {1, 2, 4}}, {7, {1, 3, 4}},
      {8, {1, 3, 4}}, {7, {1, 2, 5}}, {8, {1, 2, 5}},
  };
  std::vector<VerdictRow> out;
  for (const auto& [ambient, degrees] : rows) {
    FermatCI ci{ambient, degrees};
    out.push_back(VerdictRow{ambient, degrees, singular_point_search(ci, opt)});
  }
  return out;
}

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::SmoothByLemma: return "SmoothByLemma";
    case VerdictStatus::SmoothNoWitness: return "SmoothNoWitness";
    case VerdictStatus::SingularWitness: return "SingularWitness";
  }
  return "?";
}

}  // namespace fsl::fermat
