#include "fsl/molien.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace fsl::spinmolien {

std::vector<Int> TruncatedSeries::integer_coeffs() const {
  std::vector<Int> out;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1)
      throw std::logic_error("TruncatedSeries: non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("FSL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// [t^0..t^cap] of 1/det(I - t g) for one group element.
std::vector<QuadScalar> reciprocal_det_series(const ExactMatrix& g, int cap) {
  const int n = g.dim();
  // det(x I - g) = sum c_i x^i  =>  det(I - t g) = sum c_{n-j} t^j.
  std::vector<QuadScalar> cp = g.char_poly();
  std::vector<QuadScalar> p(size_t(cap) + 1);
  for (int j = 0; j <= cap && j <= n; ++j) p[j] = cp[n - j];
  // Power series reciprocal: r_0 = 1, r_m = -sum_{j>=1} p_j r_{m-j}.
  std::vector<QuadScalar> r(size_t(cap) + 1);
  r[0] = QuadScalar(1);
  for (int m = 1; m <= cap; ++m) {
    QuadScalar s;
    for (int j = 1; j <= m && j <= n; ++j) s += p[j] * r[m - j];
    r[m] = -s;
  }
  return r;
}

}  // namespace

TruncatedSeries molien_series(const FiniteMatrixGroup& g, int cap,
                              int threads) {
  if (cap < 0 || cap > 64)
    throw std::invalid_argument("molien_series: cap out of range");
  if (g.elements.empty())
    throw std::invalid_argument("molien_series: empty group");
  const size_t order = g.elements.size();
  const int nthreads = std::min<int>(resolve_threads(threads),
                                     static_cast<int>(order));

  std::vector<std::vector<QuadScalar>> partial(
      nthreads, std::vector<QuadScalar>(size_t(cap) + 1));
  auto work = [&](int t) {
    for (size_t i = t; i < order; i += nthreads) {
      std::vector<QuadScalar> r = reciprocal_det_series(g.elements[i], cap);
      for (int d = 0; d <= cap; ++d) partial[t][d] += r[d];
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  TruncatedSeries out;
  out.cap = cap;
  const Rat inv_order(1, static_cast<unsigned long>(order));
  for (int d = 0; d <= cap; ++d) {
    QuadScalar total;
    for (int t = 0; t < nthreads; ++t) total += partial[t][d];
    if (!total.is_rational())
      throw std::logic_error("molien_series: irrational coefficient");
    Rat c = total.rational_part() * inv_order;
    c.canonicalize();
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("molien_series: coefficient " + c.get_str() +
                             " at degree " + std::to_string(d) +
                             " is not a nonnegative integer");
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

TruncatedSeries free_algebra_series(
    const std::vector<std::pair<int, int>>& degrees, int cap) {
  TruncatedSeries s;
  s.cap = cap;
  s.coeffs.assign(size_t(cap) + 1, Rat(0));
  s.coeffs[0] = 1;
  // multiply by 1/(1 - t^d) once per generator
  for (const auto& [d, count] : degrees) {
    if (d < 1 || count < 1)
      throw std::invalid_argument("free_algebra_series: bad generator");
    for (int c = 0; c < count; ++c)
      for (int m = d; m <= cap; ++m) s.coeffs[m] += s.coeffs[m - d];
  }
  return s;
}

GeneratorDegrees generator_degrees(const TruncatedSeries& series, int cap) {
  if (cap > series.cap)
    throw std::invalid_argument("generator_degrees: cap exceeds series cap");
  GeneratorDegrees out;
  TruncatedSeries free = free_algebra_series({}, cap);
  for (int d = 1; d <= cap; ++d) {
    Rat residual = series.at(d) - free.at(d);
    if (residual < 0) {
      out.reliable_up_to = d - 1;
      return out;
    }
    if (residual > 0) {
      if (residual.get_den() != 1)
        throw std::logic_error("generator_degrees: fractional residual");
      int count = static_cast<int>(residual.get_num().get_si());
      out.degrees.emplace_back(d, count);
      // extend the free algebra by the new generators
      for (int c = 0; c < count; ++c)
        for (int m = d; m <= cap; ++m) free.coeffs[m] += free.coeffs[m - d];
    }
    out.reliable_up_to = d;
  }
  return out;
}

}  // namespace fsl::spinmolien
