#include "fsl/toric.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fsl::toric {

namespace {

IntMatrix identity(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMatrix& m, int a, int b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row a -= q * row b
void row_axpy(IntMatrix& m, int a, int b, const Int& q) {
  for (size_t j = 0; j < m[a].size(); ++j) m[a][j] -= q * m[b][j];
}

void col_axpy(IntMatrix& m, int a, int b, const Int& q) {
  for (auto& row : m) row[a] -= q * row[b];
}

void negate_row(IntMatrix& m, int a) {
  for (auto& x : m[a]) x = -x;
}

}  // namespace

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMatrix out(r, std::vector<Int>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Int det(const IntMatrix& a) {
  // Fraction-free Bareiss elimination.
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (m[t][t] == 0) {
      int piv = -1;
      for (int i = t + 1; i < n; ++i)
        if (m[i][t] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      swap_rows(m, t, piv);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
    prev = m[t][t];
  }
  return sign * m[n - 1][n - 1];
}

SnfResult smith_normal_form(const IntMatrix& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  SnfResult res;
  res.d = a;
  res.u = identity(rows);
  res.v = identity(cols);
  IntMatrix& d = res.d;

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    // Find the entry of minimal nonzero absolute value in the submatrix.
    auto find_pivot = [&]() -> std::pair<int, int> {
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (d[i][j] == 0) continue;
          Int v = abs(d[i][j]);
          if (bi < 0 || v < best) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      return {bi, bj};
    };

    for (;;) {
      auto [pi, pj] = find_pivot();
      if (pi < 0) {
        t = steps;  // remaining submatrix is zero
        break;
      }
      if (pi != t) {
        swap_rows(d, t, pi);
        swap_rows(res.u, t, pi);
      }
      if (pj != t) {
        swap_cols(d, t, pj);
        swap_cols(res.v, t, pj);
      }
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(res.u, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(res.v, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_axpy(d, t, i, Int(-1));  // row t += row i
            row_axpy(res.u, t, i, Int(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= steps) break;
    if (d[t][t] < 0) {
      negate_row(d, t);
      negate_row(res.u, t);
    }
  }
  return res;
}

std::optional<std::string> FanData::validate() const {
  const int n = rank;
  if (n < 1) return "rank must be positive";
  if (rays.empty()) return "no rays";
  for (const auto& r : rays) {
    if (static_cast<int>(r.size()) != n) return "ray dimension mismatch";
    Int g = 0;
    for (const auto& x : r) g = gcd(g, x);
    if (g != 1) return "ray not primitive";
  }
  std::set<std::vector<Int>> distinct(rays.begin(), rays.end());
  if (distinct.size() != rays.size()) return "duplicate rays";
  if (max_cones.empty()) return "no maximal cones";

  std::vector<bool> used(rays.size(), false);
  for (const auto& cone : max_cones) {
    if (static_cast<int>(cone.size()) != n)
      return "maximal cone is not simplicial of full dimension";
    std::set<int> uniq(cone.begin(), cone.end());
    if (static_cast<int>(uniq.size()) != n) return "repeated ray in cone";
    IntMatrix m;
    for (int idx : cone) {
      if (idx < 0 || idx >= ray_count()) return "cone index out of range";
      used[idx] = true;
      m.push_back(rays[idx]);
    }
    if (det(m) == 0) return "cone rays are linearly dependent";
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) return "ray " + std::to_string(i) + " unused";

  // Pseudo-manifold proxy for completeness: every ridge is shared by exactly
  // two maximal cones and the adjacency graph is connected.
  std::map<std::vector<int>, std::vector<int>> ridge_cones;
  for (size_t c = 0; c < max_cones.size(); ++c) {
    std::vector<int> cone = max_cones[c];
    std::sort(cone.begin(), cone.end());
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> ridge;
      for (int i = 0; i < n; ++i)
        if (i != omit) ridge.push_back(cone[i]);
      ridge_cones[ridge].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [ridge, cs] : ridge_cones)
    if (cs.size() != 2) return "ridge not shared by exactly two cones";
  // connectivity over the ridge adjacency
  std::vector<std::vector<int>> adj(max_cones.size());
  for (const auto& [ridge, cs] : ridge_cones) {
    adj[cs[0]].push_back(cs[1]);
    adj[cs[1]].push_back(cs[0]);
  }
  std::vector<bool> seen(max_cones.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int o : adj[c])
      if (!seen[o]) {
        seen[o] = true;
        stack.push_back(o);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    return "cone adjacency graph is disconnected";
  return std::nullopt;
}

namespace {

struct CokernelPresentation {
  SnfResult snf;
  int rank = 0;  // number of nonzero invariant factors
  int d = 0, n = 0;

  // Canonical class coordinates of a ray: torsion coordinates reduced mod
  // their invariant factor, free coordinates exact.
  std::vector<Int> ray_class(int ray) const {
    std::vector<Int> cls;
    for (int i = 0; i < d; ++i) {
      const Int& e = snf.u[i][ray];
      if (i < rank) {
        const Int& f = snf.d[i][i];
        if (f == 1) continue;
        Int m;
        mpz_mod(m.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
        cls.push_back(m);
      } else {
        cls.push_back(e);
      }
    }
    return cls;
  }
};

CokernelPresentation cokernel(const FanData& fan) {
  CokernelPresentation pres;
  pres.d = fan.ray_count();
  pres.n = fan.rank;
  IntMatrix r = fan.rays;  // d x n, rows are rays
  pres.snf = smith_normal_form(r);
  for (int i = 0; i < std::min(pres.d, pres.n); ++i)
    if (pres.snf.d[i][i] != 0) ++pres.rank;
  return pres;
}

}  // namespace

ClassGroupDescriptor class_group(const FanData& fan) {
  if (auto err = fan.validate())
    throw std::invalid_argument("class_group: " + *err);
  CokernelPresentation pres = cokernel(fan);
  if (pres.rank != fan.rank)
    throw std::invalid_argument("class_group: rays do not span Q^n");
  ClassGroupDescriptor out;
  out.free_rank = pres.d - pres.rank;
  for (int i = 0; i < pres.rank; ++i)
    if (pres.snf.d[i][i] > 1) out.torsion.push_back(pres.snf.d[i][i]);
  return out;
}

RayPartition ray_partition(const FanData& fan) {
  if (auto err = fan.validate())
    throw std::invalid_argument("ray_partition: " + *err);
  CokernelPresentation pres = cokernel(fan);
  std::map<std::vector<Int>, std::vector<int>> by_class;
  for (int r = 0; r < fan.ray_count(); ++r)
    by_class[pres.ray_class(r)].push_back(r);
  RayPartition part;
  for (auto& [cls, idxs] : by_class) part.blocks.push_back(idxs);
  // Ray input order within blocks is already preserved; order blocks by
  // descending size, then by first ray index for determinism.
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });
  for (const auto& blk : part.blocks)
    part.sizes.push_back(static_cast<int>(blk.size()));
  return part;
}

PartitionBoundReport partition_bound_check(const FanData& fan) {
  PartitionBoundReport rep;
  RayPartition part = ray_partition(fan);
  long sum = 0;
  for (int s : part.sizes) sum += s - 1;
  rep.sum_ok = sum <= fan.rank;
  rep.equality = sum == fan.rank;
  if (!rep.equality) return rep;

  // Product-of-projective-spaces verification: within each block the rays
  // must sum to zero, every maximal cone omits exactly one ray per block,
  // the cone count is the full product, and each cone is unimodular.
  for (const auto& blk : part.blocks) {
    if (blk.size() < 2) return rep;
    std::vector<Int> s(fan.rank, 0);
    for (int r : blk)
      for (int i = 0; i < fan.rank; ++i) s[i] += fan.rays[r][i];
    for (const auto& x : s)
      if (x != 0) return rep;
  }
  Int expected_cones = 1;
  for (int s : part.sizes) expected_cones *= s;
  if (expected_cones != static_cast<long>(fan.max_cones.size())) return rep;
  std::vector<int> block_of(fan.ray_count(), -1);
  for (size_t b = 0; b < part.blocks.size(); ++b)
    for (int r : part.blocks[b]) block_of[r] = static_cast<int>(b);
  for (const auto& cone : fan.max_cones) {
    std::vector<int> hits(part.blocks.size(), 0);
    for (int r : cone) ++hits[block_of[r]];
    for (size_t b = 0; b < part.blocks.size(); ++b)
      if (hits[b] != part.sizes[b] - 1) return rep;
    IntMatrix m;
    for (int idx : cone) m.push_back(fan.rays[idx]);
    Int dd = det(m);
    if (dd != 1 && dd != -1) return rep;
  }
  rep.product_decomposition = part.sizes;
  return rep;
}

int toric_symmetry_bound(int n) {
  if (n < 1) throw std::invalid_argument("toric_symmetry_bound: n >= 1");
  return n <= 3 ? n + 3 : n + 2;
}

FanData parse_ray_file(std::istream& in) {
  FanData fan;
  long n = 0, d = 0;
  if (!(in >> n >> d)) throw std::invalid_argument("ray file: bad header");
  if (n < 1 || d < 1 || n > 64 || d > 4096)
    throw std::invalid_argument("ray file: unreasonable header");
  fan.rank = static_cast<int>(n);
  for (long r = 0; r < d; ++r) {
    std::vector<Int> ray;
    for (long i = 0; i < n; ++i) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("ray file: truncated rays");
      ray.emplace_back(tok);
    }
    fan.rays.push_back(std::move(ray));
  }
  std::vector<long> idx;
  long v = 0;
  while (in >> v) idx.push_back(v);
  if (idx.empty() || idx.size() % n != 0)
    throw std::invalid_argument("ray file: cone list not a multiple of n");
  for (size_t c = 0; c < idx.size(); c += n) {
    std::vector<int> cone;
    for (long i = 0; i < n; ++i) {
      long one_based = idx[c + i];
      if (one_based < 1 || one_based > d)
        throw std::invalid_argument("ray file: cone index out of range");
      cone.push_back(static_cast<int>(one_based - 1));
    }
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

FanData load_ray_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open ray file: " + path);
  return parse_ray_file(f);
}

FanData projective_space_fan(int n) {
  FanData fan;
  fan.rank = n;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.push_back(std::vector<Int>(n, -1));
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if (i != omit) cone.push_back(i);
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

FanData product_fan(const FanData& a, const FanData& b) {
  FanData fan;
  fan.rank = a.rank + b.rank;
  for (const auto& r : a.rays) {
    std::vector<Int> v = r;
    v.resize(fan.rank, 0);
    fan.rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays) {
    std::vector<Int> v(a.rank, 0);
    v.insert(v.end(), r.begin(), r.end());
    fan.rays.push_back(std::move(v));
  }
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      std::vector<int> cone = ca;
      for (int i : cb) cone.push_back(a.ray_count() + i);
      fan.max_cones.push_back(std::move(cone));
    }
  return fan;
}

FanData hirzebruch_fan(int a) {
  FanData fan;
  fan.rank = 2;
  fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(a)},
              {Int(0), Int(-1)}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return fan;
}

FanData weighted_p112_fan() {
  FanData fan;
  fan.rank = 2;
  fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-2)}};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  return fan;
}

}  // namespace fsl::toric
