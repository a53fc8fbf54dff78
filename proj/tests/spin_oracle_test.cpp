// Independent oracle for the spin invariant-ring computation. Everything
// here is built from scratch against different conventions than the library:
// a hardcoded Fano-plane octonion table instead of Cayley-Dickson, right
// multiplications instead of left, the opposite Clifford signature,
// adjacent-3-cycle generators instead of a fixed pivot, a string-keyed
// closure, and Molien coefficients through power-sum traces and the
// complete-homogeneous recurrence instead of characteristic polynomials.

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "fsl/exact_matrix.hpp"
#include "fsl/molien.hpp"
#include "fsl/spin_group.hpp"

using namespace fsl;
using namespace fsl::spinmolien;

namespace {

// Fano-plane triples: e_a e_b = e_c cyclically within each triple.
constexpr int kTriples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};

// sign and index of e_a * e_b for 1 <= a, b <= 7
void unit_product(int a, int b, int& sign, int& idx) {
  if (a == b) {
    sign = -1;
    idx = 0;
    return;
  }
  for (const auto& t : kTriples) {
    for (int r = 0; r < 3; ++r) {
      if (t[r] == a && t[(r + 1) % 3] == b) {
        sign = 1;
        idx = t[(r + 2) % 3];
        return;
      }
      if (t[r] == b && t[(r + 1) % 3] == a) {
        sign = -1;
        idx = t[(r + 2) % 3];
        return;
      }
    }
  }
  REQUIRE(false);
}

// Right multiplication x -> x * e_a on the octonion basis.
ExactMatrix right_mult(int a) {
  ExactMatrix m(8);
  // basis: u_0 = 1, u_1..u_7 imaginary units
  // u_0 * e_a = e_a
  m.at(a, 0) = QuadScalar(1);
  for (int j = 1; j < 8; ++j) {
    if (j == a) {
      m.at(0, j) = QuadScalar(-1);  // e_a * e_a = -1
      continue;
    }
    int sign, idx;
    unit_product(j, a, sign, idx);
    m.at(idx, j) = QuadScalar(sign);
  }
  return m;
}

ExactMatrix kron2(int a, int b, int c, int d, const ExactMatrix& m) {
  const int n = m.dim();
  ExactMatrix r(2 * n);
  const int fac[2][2] = {{a, b}, {c, d}};
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      if (fac[bi][bj] == 0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r.at(bi * n + i, bj * n + j) = m.at(i, j) * QuadScalar(fac[bi][bj]);
    }
  return r;
}

// Negative-signature gamma model of rank 8 on 16 dimensions (the top
// element of the 7-dimensional reflection space squares to +1 only in this
// signature, which the chirality split needs).
std::vector<ExactMatrix> negative_gammas8() {
  std::vector<ExactMatrix> g;
  for (int a = 1; a <= 7; ++a)
    g.push_back(kron2(1, 0, 0, -1, right_mult(a)));  // Z (x) R_a
  g.push_back(kron2(0, -1, 1, 0, ExactMatrix::identity(8)));  // E (x) I
  return g;
}

std::string matrix_key(const ExactMatrix& m) {
  std::string s;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      s += m.at(i, j).str();
      s += '|';
    }
  return s;
}

std::vector<ExactMatrix> string_closure(const std::vector<ExactMatrix>& gens,
                                        size_t cap) {
  std::map<std::string, size_t> seen;
  std::vector<ExactMatrix> elements{ExactMatrix::identity(gens.front().dim())};
  seen[matrix_key(elements[0])] = 0;
  for (size_t next = 0; next < elements.size(); ++next) {
    ExactMatrix cur = elements[next];
    for (const auto& g : gens) {
      ExactMatrix p = cur * g;
      std::string key = matrix_key(p);
      if (seen.emplace(std::move(key), elements.size()).second) {
        REQUIRE(elements.size() < cap);
        elements.push_back(std::move(p));
      }
    }
  }
  return elements;
}

// [t^d] of 1/det(I - t g) equals the complete homogeneous symmetric function
// h_d of the eigenvalues; Newton's recurrence builds it from traces of
// powers.
std::vector<Rat> homogeneous_series(const ExactMatrix& g, int cap) {
  std::vector<QuadScalar> power_traces(static_cast<size_t>(cap) + 1);
  ExactMatrix p = g;
  for (int j = 1; j <= cap; ++j) {
    power_traces[static_cast<size_t>(j)] = p.trace();
    if (j < cap) p = p * g;
  }
  std::vector<QuadScalar> h(static_cast<size_t>(cap) + 1);
  h[0] = QuadScalar(1);
  for (int m = 1; m <= cap; ++m) {
    QuadScalar acc;
    for (int j = 1; j <= m; ++j) acc += power_traces[static_cast<size_t>(j)] * h[static_cast<size_t>(m - j)];
    h[static_cast<size_t>(m)] = acc * QuadScalar(Rat(1, m));
  }
  std::vector<Rat> out;
  for (const auto& x : h) {
    REQUIRE(x.is_rational());
    out.push_back(x.rational_part());
  }
  return out;
}

std::vector<Rat> trace_molien(const std::vector<ExactMatrix>& elements,
                              int cap) {
  std::vector<Rat> total(static_cast<size_t>(cap) + 1, Rat(0));
  for (const auto& g : elements) {
    std::vector<Rat> h = homogeneous_series(g, cap);
    for (int d = 0; d <= cap; ++d) total[static_cast<size_t>(d)] += h[static_cast<size_t>(d)];
  }
  for (auto& c : total) {
    c /= static_cast<unsigned long>(elements.size());
    c.canonicalize();
    REQUIRE(c.get_den() == 1);
  }
  return total;
}

}  // namespace

TEST_CASE("oracle model: gamma relations hold") {
  auto g = negative_gammas8();
  ExactMatrix id = ExactMatrix::identity(16);
  for (size_t a = 0; a < g.size(); ++a) {
    CHECK(g[a] * g[a] == id.scaled(QuadScalar(Rat(-1))));
    for (size_t b = a + 1; b < g.size(); ++b)
      CHECK(g[a].anticommutes_with(g[b]));
  }
}

TEST_CASE("trace-power Molien agrees with the production path on small groups") {
  for (int k : {4, 5}) {
    FiniteMatrixGroup g = close_group(clifford_even_generators(k), 1000);
    TruncatedSeries prod = molien_series(g, 10);
    std::vector<Rat> oracle = trace_molien(g.elements, 10);
    for (int d = 0; d <= 10; ++d) CHECK(prod.at(d) == oracle[static_cast<size_t>(d)]);
  }
}

TEST_CASE("independent spin model reproduces the invariant dimensions"
          * doctest::timeout(1200)) {
  auto gamma = negative_gammas8();
  const QuadScalar inv_sqrt2(Rat(0), Rat(1, 2));
  std::vector<ExactMatrix> refl;
  for (int i = 0; i + 1 < 8; ++i)
    refl.push_back((gamma[static_cast<size_t>(i)] - gamma[static_cast<size_t>(i) + 1]).scaled(inv_sqrt2));
  // adjacent 3-cycles (i, i+1, i+2)
  std::vector<ExactMatrix> gens;
  for (int i = 0; i + 1 < 7; ++i) gens.push_back(refl[static_cast<size_t>(i)] * refl[static_cast<size_t>(i) + 1]);

  // chirality projector from the normalized diagonal direction
  ExactMatrix gsum(16);
  for (const auto& g : gamma) gsum = gsum + g;
  ExactMatrix gdiag = gsum.scaled(QuadScalar(Rat(0), Rat(1, 4)));  // 1/(2 sqrt 2)
  CHECK(gdiag * gdiag == ExactMatrix::identity(16).scaled(QuadScalar(Rat(-1))));
  ExactMatrix top = gamma[0];
  for (int a = 1; a < 8; ++a) top = top * gamma[static_cast<size_t>(a)];
  // gdiag^{-1} = -gdiag in this signature
  ExactMatrix omega = (top * gdiag).scaled(QuadScalar(Rat(-1)));
  REQUIRE(omega * omega == ExactMatrix::identity(16));
  for (const auto& g : gens) REQUIRE(omega * g == g * omega);

  // restrict to the +1 eigenspace by explicit column reduction
  ExactMatrix proj =
      (ExactMatrix::identity(16) + omega).scaled(QuadScalar(Rat(1, 2)));
  // columns of proj span the eigenspace; find 8 independent ones by solving
  std::vector<std::vector<QuadScalar>> basis;
  std::vector<int> pivots;
  for (int j = 0; j < 16 && static_cast<int>(basis.size()) < 8; ++j) {
    std::vector<QuadScalar> col(16);
    for (int i = 0; i < 16; ++i) col[static_cast<size_t>(i)] = proj.at(i, j);
    for (size_t b = 0; b < basis.size(); ++b) {
      QuadScalar f = col[static_cast<size_t>(pivots[b])];
      if (f.is_zero()) continue;
      for (int i = 0; i < 16; ++i) col[static_cast<size_t>(i)] -= f * basis[b][static_cast<size_t>(i)];
    }
    int piv = -1;
    for (int i = 0; i < 16; ++i)
      if (!col[static_cast<size_t>(i)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    QuadScalar inv = col[static_cast<size_t>(piv)].inverse();
    for (int i = 0; i < 16; ++i) col[static_cast<size_t>(i)] *= inv;
    for (size_t b = 0; b < basis.size(); ++b) {
      QuadScalar f = basis[b][static_cast<size_t>(piv)];
      if (f.is_zero()) continue;
      for (int i = 0; i < 16; ++i) basis[b][static_cast<size_t>(i)] -= f * col[static_cast<size_t>(i)];
    }
    basis.push_back(col);
    pivots.push_back(piv);
  }
  REQUIRE(basis.size() == 8);
  auto restrict = [&](const ExactMatrix& m) {
    ExactMatrix out(8);
    for (int j = 0; j < 8; ++j) {
      std::vector<QuadScalar> img(16);
      for (int i = 0; i < 16; ++i) {
        QuadScalar s;
        for (int t = 0; t < 16; ++t) {
          if (basis[static_cast<size_t>(j)][static_cast<size_t>(t)].is_zero()) continue;
          s += m.at(i, t) * basis[static_cast<size_t>(j)][static_cast<size_t>(t)];
        }
        img[static_cast<size_t>(i)] = s;
      }
      for (int i = 0; i < 8; ++i) out.at(i, j) = img[static_cast<size_t>(pivots[static_cast<size_t>(i)])];
    }
    return out;
  };
  std::vector<ExactMatrix> small;
  for (const auto& g : gens) small.push_back(restrict(g));

  std::vector<ExactMatrix> closure = string_closure(small, 50000);
  CHECK(closure.size() == 40320);

  std::vector<Rat> series = trace_molien(closure, 8);
  CHECK(series[0] == 1);
  for (int d = 1; d <= 7; d += 2) CHECK(series[static_cast<size_t>(d)] == 0);
  CHECK(series[2] == 1);
  CHECK(series[4] == 1);
  CHECK(series[6] == 1);
  // Decisive value: the dimension of the degree-8 invariants of the basic
  // spin representation.
  CHECK(series[8] == 4);
}
