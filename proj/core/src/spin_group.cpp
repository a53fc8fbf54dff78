#include "fsl/spin_group.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

namespace fsl::spinmolien {

namespace {

// ---- octonion model of the rank-7 negative-definite Clifford relations ----

using Oct = std::array<Rat, 8>;

Oct oct_conj(const Oct& x) {
  Oct r = x;
  for (int i = 1; i < 8; ++i) r[i] = -r[i];
  return r;
}

// Cayley-Dickson product on 2^m-dimensional slices.
void cd_mul(const Rat* x, const Rat* y, Rat* out, int n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = n / 2;
  // x = (a, b), y = (c, d); conjugation negates all non-leading coordinates.
  auto conj_into = [&](const Rat* src, Rat* dst) {
    dst[0] = src[0];
    for (int i = 1; i < h; ++i) dst[i] = -src[i];
  };
  std::vector<Rat> ac(h), db(h), da(h), bc(h), cc(h), dd(h);
  conj_into(y + h, dd.data());  // d conjugate
  conj_into(y, cc.data());      // c conjugate
  // (a,b)(c,d) = (ac - d~ b, d a + b c~)
  cd_mul(x, y, ac.data(), h);
  cd_mul(dd.data(), x + h, db.data(), h);
  cd_mul(y + h, x, da.data(), h);
  cd_mul(x + h, cc.data(), bc.data(), h);
  for (int i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
}

Oct oct_mul(const Oct& x, const Oct& y) {
  Oct r{};
  cd_mul(x.data(), y.data(), r.data(), 8);
  return r;
}

// Left multiplication by the imaginary unit e_a as an 8x8 rational matrix.
ExactMatrix oct_left_mult(int a) {
  ExactMatrix m(8);
  Oct ea{};
  ea[a] = 1;
  for (int j = 0; j < 8; ++j) {
    Oct uj{};
    uj[j] = 1;
    Oct col = oct_mul(ea, uj);
    for (int i = 0; i < 8; ++i) m.at(i, j) = QuadScalar(col[i]);
  }
  return m;
}

ExactMatrix kron2(const std::array<int, 4>& two, const ExactMatrix& b) {
  // two = row-major 2x2 integer matrix
  const int n = b.dim();
  ExactMatrix r(2 * n);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      const int f = two[bi * 2 + bj];
      if (f == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r.at(bi * n + i, bj * n + j) = b.at(i, j) * QuadScalar(f);
    }
  return r;
}

constexpr std::array<int, 4> kPauliX = {0, 1, 1, 0};
constexpr std::array<int, 4> kPauliZ = {1, 0, 0, -1};
constexpr std::array<int, 4> kSympE = {0, -1, 1, 0};  // squares to -1

// Gamma matrices for k anticommuting directions with common square `sign`.
// k <= 7: the octonion generators (size 8, sign -1).
// k = 8:  Z (x) L_a and E (x) I (size 16, sign -1).
// k = 9:  E (x) L_a, X (x) I, Z (x) I (size 16, sign +1).
std::vector<ExactMatrix> gamma_model(int k, int& sign) {
  std::vector<ExactMatrix> g;
  if (k <= 7) {
    sign = -1;
    for (int a = 1; a <= k; ++a) g.push_back(oct_left_mult(a));
  } else if (k == 8) {
    sign = -1;
    for (int a = 1; a <= 7; ++a) g.push_back(kron2(kPauliZ, oct_left_mult(a)));
    g.push_back(kron2(kSympE, ExactMatrix::identity(8)));
  } else if (k == 9) {
    sign = 1;
    for (int a = 1; a <= 7; ++a) g.push_back(kron2(kSympE, oct_left_mult(a)));
    g.push_back(kron2(kPauliX, ExactMatrix::identity(8)));
    g.push_back(kron2(kPauliZ, ExactMatrix::identity(8)));
  } else {
    throw std::invalid_argument("gamma_model: k out of range");
  }
  const int n = g.front().dim();
  const ExactMatrix id = ExactMatrix::identity(n);
  for (size_t a = 0; a < g.size(); ++a) {
    ExactMatrix sq = g[a] * g[a];
    if (!(sq == id.scaled(QuadScalar(sign))))
      throw std::logic_error("gamma_model: square relation violated");
    for (size_t b = a + 1; b < g.size(); ++b)
      if (!g[a].anticommutes_with(g[b]))
        throw std::logic_error("gamma_model: anticommutation violated");
  }
  return g;
}

// Restricts each matrix to the column space of the projector p. All inputs
// must commute with p. Returns matrices of size rank(p).
std::vector<ExactMatrix> restrict_to_image(
    const ExactMatrix& p, const std::vector<ExactMatrix>& ms) {
  const int n = p.dim();
  // Column-reduce p to find a basis of its image and pivot rows.
  std::vector<std::vector<QuadScalar>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<QuadScalar> c(n);
    for (int i = 0; i < n; ++i) c[i] = p.at(i, j);
    cols.push_back(std::move(c));
  }
  std::vector<std::vector<QuadScalar>> basis;
  std::vector<int> pivots;
  for (auto& c : cols) {
    for (size_t b = 0; b < basis.size(); ++b) {
      const QuadScalar f = c[pivots[b]];  // copy: the loop updates c in place
      if (f.is_zero()) continue;
      for (int i = 0; i < n; ++i) c[i] -= f * basis[b][i];
    }
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!c[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    QuadScalar inv = c[piv].inverse();
    for (int i = 0; i < n; ++i) c[i] *= inv;
    // Keep the basis reduced against the new pivot.
    for (size_t b = 0; b < basis.size(); ++b) {
      const QuadScalar f = basis[b][piv];
      if (f.is_zero()) continue;
      for (int i = 0; i < n; ++i) basis[b][i] -= f * c[i];
    }
    basis.push_back(c);
    pivots.push_back(piv);
  }
  const int r = static_cast<int>(basis.size());
  // B[piv] is the identity after full reduction, so coordinates of any
  // vector in the image are just its pivot-row entries.
  std::vector<ExactMatrix> out;
  for (const auto& m : ms) {
    ExactMatrix mm(r);
    for (int j = 0; j < r; ++j) {
      // image of basis vector j
      std::vector<QuadScalar> v(n);
      for (int i = 0; i < n; ++i) {
        QuadScalar s;
        for (int t = 0; t < n; ++t) {
          if (basis[j][t].is_zero()) continue;
          s += m.at(i, t) * basis[j][t];
        }
        v[i] = s;
      }
      for (int i = 0; i < r; ++i) mm.at(i, j) = v[pivots[i]];
    }
    out.push_back(std::move(mm));
  }
  return out;
}

}  // namespace

int clifford_model_dim(int k) {
  switch (k) {
    case 4: return 4;
    case 5:
    case 6:
    case 7: return 8;
    case 8:
    case 9: return 8;
    default:
      throw std::invalid_argument("clifford_model_dim: k out of range");
  }
}

std::vector<ExactMatrix> clifford_even_generators(int k) {
  if (k < 4 || k > 9)
    throw std::invalid_argument("clifford_even_generators: 4 <= k <= 9");
  int sign = 0;
  std::vector<ExactMatrix> gamma = gamma_model(k, sign);
  const int n = gamma.front().dim();

  // Reflection lifts R_i = (G_i - G_{i+1}) / sqrt(2), i = 1..k-1.
  const QuadScalar inv_sqrt2(Rat(0), Rat(1, 2));
  std::vector<ExactMatrix> refl;
  for (int i = 0; i + 1 < k; ++i)
    refl.push_back((gamma[i] - gamma[i + 1]).scaled(inv_sqrt2));

  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 2 < k; ++i) gens.push_back(refl[i] * refl[k - 2]);

  for (const auto& g : gens)
    if (!g.all_rational())
      throw std::logic_error("clifford_even_generators: irrational product");

  // Chirality split when the diagonal direction (1,...,1)/sqrt(k) lies in
  // Q(sqrt 2)^k, i.e. k in {4, 8, 9}.
  QuadScalar diag_scale;
  if (k == 4) diag_scale = QuadScalar(Rat(1, 2));
  else if (k == 8) diag_scale = QuadScalar(Rat(0), Rat(1, 4));  // 1/(2 sqrt 2)
  else if (k == 9) diag_scale = QuadScalar(Rat(1, 3));
  else return gens;

  ExactMatrix gsum(n);
  for (const auto& g : gamma) gsum = gsum + g;
  ExactMatrix gdiag = gsum.scaled(diag_scale);
  ExactMatrix top = gamma[0];
  for (int a = 1; a < k; ++a) top = top * gamma[a];
  // omega = top * gdiag^{-1}; gdiag^2 = sign * I.
  ExactMatrix omega = (top * gdiag).scaled(QuadScalar(sign));
  if (!(omega * omega == ExactMatrix::identity(n)))
    throw std::logic_error("clifford_even_generators: omega^2 != I");
  for (const auto& g : gens)
    if (!(omega * g == g * omega))
      throw std::logic_error("clifford_even_generators: omega not central");

  ExactMatrix proj = (ExactMatrix::identity(n) + omega).scaled(QuadScalar(Rat(1, 2)));
  std::vector<ExactMatrix> restricted = restrict_to_image(proj, gens);
  if (restricted.front().dim() != clifford_model_dim(k))
    throw std::logic_error("clifford_even_generators: unexpected spin dim");
  return restricted;
}

bool FiniteMatrixGroup::contains(const ExactMatrix& m) const {
  for (const auto& e : elements)
    if (e == m) return true;
  return false;
}

FiniteMatrixGroup close_group(const std::vector<ExactMatrix>& generators,
                              size_t max_order) {
  if (generators.empty())
    throw std::invalid_argument("close_group: no generators");
  const int n = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw std::invalid_argument("close_group: dim mismatch");

  FiniteMatrixGroup grp;
  grp.dim = n;
  grp.generators = generators;

  std::unordered_set<ExactMatrix, ExactMatrixHash> seen;
  auto add = [&](ExactMatrix m) {
    auto [it, fresh] = seen.insert(std::move(m));
    if (!fresh) return;
    if (seen.size() > max_order) {
      throw ExplosionError("close_group: exceeded max_order " +
                           std::to_string(max_order));
    }
    grp.elements.push_back(*it);
  };

  add(ExactMatrix::identity(n));
  size_t next = 0;
  while (next < grp.elements.size()) {
    ExactMatrix cur = grp.elements[next++];
    for (const auto& g : generators) add(cur * g);
  }
  return grp;
}

ExactMatrix permutation_rep(const std::vector<int>& perm, PermRepMode mode) {
  const int k = static_cast<int>(perm.size());
  if (k < 1) throw std::invalid_argument("permutation_rep: empty");
  std::vector<bool> hit(k, false);
  for (int v : perm) {
    if (v < 0 || v >= k || hit[v])
      throw std::invalid_argument("permutation_rep: not a permutation");
    hit[v] = true;
  }
  if (mode == PermRepMode::Natural) {
    ExactMatrix m(k);
    for (int j = 0; j < k; ++j) m.at(perm[j], j) = QuadScalar(1);
    return m;
  }
  // Standard: basis v_i = e_i - e_{i+1}, i = 0..k-2. The image of v_i is
  // e_{perm(i)} - e_{perm(i+1)} = sum of consecutive v's with sign.
  ExactMatrix m(k - 1);
  for (int j = 0; j + 1 < k; ++j) {
    int a = perm[j], b = perm[j + 1];
    int sign = 1;
    if (a > b) {
      std::swap(a, b);
      sign = -1;
    }
    for (int i = a; i < b; ++i) m.at(i, j) = QuadScalar(sign);
  }
  return m;
}

}  // namespace fsl::spinmolien
