#include "fsl/grouprep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fsl::grouprep {

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::valid() const {
  if (parts.empty()) return false;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int col = 1; col <= parts[0]; ++col) {
    int h = 0;
    for (int p : parts)
      if (p >= col) ++h;
    c.parts.push_back(h);
  }
  return c;
}

bool GroupSpec::valid() const {
  if (k < 4) return false;
  if (family == Family::TripleAlt || family == Family::SixAlt)
    return k == 6 || k == 7;
  return true;
}

std::vector<Partition> partitions(int k, int max_k) {
  if (k < 1 || k > max_k)
    throw std::invalid_argument("partitions: k out of range");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts chosen weakly decreasing, largest first.
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

Int hook_dimension(const Partition& lambda) {
  if (!lambda.valid())
    throw std::invalid_argument("hook_dimension: invalid partition");
  const auto& p = lambda.parts;
  const Partition conj = lambda.conjugate();
  const auto& q = conj.parts;
  Int hooks = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      // arm + leg + 1
      int hook = (p[i] - j - 1) + (q[j] - static_cast<int>(i) - 1) + 1;
      hooks *= hook;
    }
  }
  Int num = factorial(static_cast<unsigned>(lambda.sum()));
  Int dim, rem;
  mpz_tdiv_qr(dim.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              hooks.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("hook_dimension: non-exact division");
  return dim;
}

DegreeSpectrum sym_degree_spectrum(int k, const Int& bound) {
  if (k < 2) throw std::invalid_argument("sym_degree_spectrum: k < 2");
  std::map<Int, int> counts;
  for (const auto& lambda : partitions(k)) {
    Int d = hook_dimension(lambda);
    if (d <= bound) ++counts[d];
  }
  DegreeSpectrum s;
  for (const auto& [d, m] : counts) s.entries.emplace_back(d, m);
  return s;
}

Int min_faithful_degree(const GroupSpec& g) {
  if (!g.valid()) throw std::invalid_argument("min_faithful_degree: invalid group");
  const int k = g.k;
  switch (g.family) {
    case Family::Sym:
      if (k == 4) return 3;
      if (k == 5) return 4;
      if (k == 6) return 5;
      return k - 1;
    case Family::SchurSym:
      if (k == 4) return 2;
      if (k == 5 || k == 6) return 4;
      return pow2(static_cast<unsigned>((k - 1) / 2));
    case Family::Alt:
      if (k == 4 || k == 5) return 3;
      if (k == 6) return 5;
      if (k == 7) return 6;
      return k - 1;
    case Family::DoubleAlt:
      if (k == 4 || k == 5) return 2;
      if (k == 6 || k == 7) return 4;
      return pow2(static_cast<unsigned>((k - 2) / 2));
    case Family::TripleAlt:
      return k == 6 ? 3 : 6;
    case Family::SixAlt:
      return 6;
  }
  throw std::logic_error("min_faithful_degree: unreachable");
}

SchurMultiplier schur_multiplier(Family family, int k) {
  if (k < 1) throw std::invalid_argument("schur_multiplier: k < 1");
  switch (family) {
    case Family::Sym:
      return k <= 3 ? SchurMultiplier::Trivial : SchurMultiplier::Z2;
    case Family::Alt:
      if (k <= 3) return SchurMultiplier::Trivial;
      if (k == 6 || k == 7) return SchurMultiplier::Z6;
      return SchurMultiplier::Z2;
    default:
      throw std::invalid_argument("schur_multiplier: Sym or Alt only");
  }
}

const char* schur_multiplier_name(SchurMultiplier m) {
  switch (m) {
    case SchurMultiplier::Trivial: return "trivial";
    case SchurMultiplier::Z2: return "Z/2";
    case SchurMultiplier::Z6: return "Z/6";
  }
  return "?";
}

int largest_symmetric_on_projective_space(int n) {
  if (n < 1 || n > 200)
    throw std::invalid_argument("largest_symmetric_on_projective_space: n");
  const Int target = n + 1;
  int best = 0;
  // Sym(k) needs k-1 <= n+1 beyond k = 6; the Schur cover dimension grows
  // exponentially, so k <= n + 3 bounds the scan.
  for (int k = 4; k <= n + 3; ++k) {
    if (min_faithful_degree({Family::Sym, k}) <= target ||
        min_faithful_degree({Family::SchurSym, k}) <= target)
      best = k;
  }
  return best;
}

}  // namespace fsl::grouprep
