#include "fsl/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsl::poly {

namespace {
const Rat kZero(0);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x() {
  Poly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero");
  std::vector<Rat> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rat> q(static_cast<size_t>(degree() - dd) + 1, Rat(0));
  const Rat lead_inv = 1 / d.leading();
  for (int i = degree(); i >= dd; --i) {
    Rat f = rem[static_cast<size_t>(i)] * lead_inv;
    if (f == 0) continue;
    q[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::logic_error("Poly: non-exact division");
  return q;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

Rat Poly::eval(const Rat& x) const {
  Rat v(0);
  for (int i = degree(); i >= 0; --i) v = v * x + c_[static_cast<size_t>(i)];
  return v;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> v(0, 0);
  for (int i = degree(); i >= 0; --i)
    v = v * x + c_[static_cast<size_t>(i)].get_d();
  return v;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat& v = c_[static_cast<size_t>(i)];
    if (v == 0) continue;
    if (!s.empty()) s += " + ";
    s += v.get_str();
    if (i >= 1) s += "*v" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) return p.monic();
  Poly g = gcd(p, p.derivative());
  return p.exact_div(g).monic();
}

std::vector<std::complex<double>> complex_roots(const Poly& p) {
  const int n = p.degree();
  if (n > 64) throw std::invalid_argument("complex_roots: degree too large");
  if (n < 1) return {};
  // monic double coefficients
  std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
  const double lead = p.leading().get_d();
  for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = p.coeff(i).get_d() / lead;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v(0, 0);
    for (int i = n; i >= 0; --i) v = v * x + a[static_cast<size_t>(i)];
    return v;
  };
  // Durand-Kerner from a non-real geometric start.
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w(1, 0);
  for (int i = 0; i < n; ++i) {
    w *= seed;
    z[static_cast<size_t>(i)] = w;
  }
  for (int iter = 0; iter < 600; ++iter) {
    double shift = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = eval(z[static_cast<size_t>(i)]);
      std::complex<double> den(1, 0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      std::complex<double> delta = num / den;
      z[static_cast<size_t>(i)] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  std::sort(z.begin(), z.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& BiPoly::coeff_w(int i) const {
  static const Poly zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::vector<Poly> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  std::vector<Poly> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (is_zero() || o.is_zero()) return BiPoly();
  std::vector<Poly> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return BiPoly(std::move(r));
}

Poly BiPoly::eval_w(const Poly& w_value) const {
  Poly v;
  for (int i = degree_w(); i >= 0; --i) v = v * w_value + coeff_w(i);
  return v;
}

Poly resultant_w(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree_w(), n = g.degree_w();
  if (m < 0 || n < 0) return Poly();
  if (m == 0 && n == 0) return Poly(Rat(1));
  if (m == 0) {
    // res(c, g) = c^{deg g}
    Poly r(Rat(1));
    for (int i = 0; i < n; ++i) r = r * f.coeff_w(0);
    return r;
  }
  if (n == 0) {
    Poly r(Rat(1));
    for (int i = 0; i < m; ++i) r = r * g.coeff_w(0);
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<Poly>> s(static_cast<size_t>(size),
                                   std::vector<Poly>(static_cast<size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= m; ++c) s[static_cast<size_t>(r)][static_cast<size_t>(r + c)] = f.coeff_w(m - c);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= n; ++c) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + c)] = g.coeff_w(n - c);

  // Fraction-free Bareiss over the integral domain Q[v].
  Poly prev(Rat(1));
  int sign = 1;
  for (int t = 0; t < size - 1; ++t) {
    if (s[static_cast<size_t>(t)][static_cast<size_t>(t)].is_zero()) {
      int piv = -1;
      for (int i = t + 1; i < size; ++i)
        if (!s[static_cast<size_t>(i)][static_cast<size_t>(t)].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly();  // zero column: resultant vanishes
      std::swap(s[static_cast<size_t>(t)], s[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (int i = t + 1; i < size; ++i)
      for (int j = t + 1; j < size; ++j) {
        Poly num = s[static_cast<size_t>(i)][static_cast<size_t>(j)] * s[static_cast<size_t>(t)][static_cast<size_t>(t)] -
                   s[static_cast<size_t>(i)][static_cast<size_t>(t)] * s[static_cast<size_t>(t)][static_cast<size_t>(j)];
        s[static_cast<size_t>(i)][static_cast<size_t>(j)] = num.exact_div(prev);
      }
    prev = s[static_cast<size_t>(t)][static_cast<size_t>(t)];
  }
  Poly res = s[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
  return sign < 0 ? res.scaled(Rat(-1)) : res;
}

// ---------------------------------------------------------------------------
// modular arithmetic with dynamic splitting
// ---------------------------------------------------------------------------

Poly reduce_mod(const Poly& a, const Poly& m) { return a.divmod(m).second; }

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) {
  return reduce_mod(a * b, m);
}

Poly invert_mod(const Poly& a, const Poly& m) {
  // extended Euclid on (a, m)
  Poly r0 = reduce_mod(a, m), r1 = m;
  Poly s0(Rat(1)), s1;
  if (r0.is_zero()) throw SplitNeeded{m};  // a == 0 mod m
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  // r0 = gcd(a, m) up to scalar
  if (r0.degree() > 0) {
    Poly f = r0.monic();
    if (f.degree() == m.degree())
      throw std::logic_error("invert_mod: gcd equals modulus");
    throw SplitNeeded{f};
  }
  return reduce_mod(s0.scaled(1 / r0.coeff(0)), m);
}

KPoly kpoly_from(const BiPoly& f, const Poly& m) {
  KPoly out;
  for (int i = 0; i <= f.degree_w(); ++i) out.push_back(reduce_mod(f.coeff_w(i), m));
  kpoly_normalize(out, m);
  return out;
}

void kpoly_normalize(KPoly& f, const Poly& m) {
  (void)m;
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int kpoly_degree(const KPoly& f) { return static_cast<int>(f.size()) - 1; }

namespace {
// f -= (lead(f)/lead(g)) w^{df-dg} g, making deg f drop.
void kpoly_reduce_step(KPoly& f, const KPoly& g, const Poly& m) {
  const int df = kpoly_degree(f), dg = kpoly_degree(g);
  Poly factor = mul_mod(f.back(), invert_mod(g.back(), m), m);
  const int shift = df - dg;
  for (int i = 0; i <= dg; ++i) {
    Poly t = mul_mod(factor, g[static_cast<size_t>(i)], m);
    f[static_cast<size_t>(i + shift)] =
        reduce_mod(f[static_cast<size_t>(i + shift)] - t, m);
  }
  kpoly_normalize(f, m);
}
}  // namespace

KPoly kpoly_gcd(KPoly a, KPoly b, const Poly& m) {
  kpoly_normalize(a, m);
  kpoly_normalize(b, m);
  while (!b.empty()) {
    // remainder of a by b
    while (kpoly_degree(a) >= kpoly_degree(b) && !a.empty())
      kpoly_reduce_step(a, b, m);
    std::swap(a, b);
  }
  if (!a.empty()) {
    // make monic
    Poly inv = invert_mod(a.back(), m);
    for (auto& c : a) c = mul_mod(c, inv, m);
  }
  return a;
}

KPoly kpoly_strip_root(KPoly f, const Poly& root, const Poly& m) {
  // divide by (w - root) while the root evaluates to zero
  for (;;) {
    if (f.empty()) return f;
    // Horner evaluation of f at root.
    Poly v;
    for (int i = kpoly_degree(f); i >= 0; --i)
      v = reduce_mod(mul_mod(v, root, m) + f[static_cast<size_t>(i)], m);
    if (!v.is_zero()) return f;
    // synthetic division by (w - root)
    KPoly q(f.size() - 1);
    Poly carry;
    for (int i = kpoly_degree(f); i >= 1; --i) {
      carry = reduce_mod(mul_mod(carry, root, m) + f[static_cast<size_t>(i)], m);
      q[static_cast<size_t>(i - 1)] = carry;
    }
    f = std::move(q);
    kpoly_normalize(f, m);
  }
}

}  // namespace fsl::poly
