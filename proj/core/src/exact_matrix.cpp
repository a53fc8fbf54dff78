#include "fsl/exact_matrix.hpp"

#include <stdexcept>

namespace fsl::spinmolien {

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = QuadScalar(1);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  ExactMatrix r(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const QuadScalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const QuadScalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  ExactMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dim mismatch");
  ExactMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const QuadScalar& s) const {
  ExactMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QuadScalar ExactMatrix::trace() const {
  QuadScalar t;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (i == j && !(at(i, j) == QuadScalar(1))) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::all_rational() const {
  for (const auto& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

bool ExactMatrix::anticommutes_with(const ExactMatrix& o) const {
  ExactMatrix s = (*this) * o + o * (*this);
  for (const auto& x : s.e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<QuadScalar> ExactMatrix::char_poly() const {
  const int n = dim_;
  std::vector<QuadScalar> c(size_t(n) + 1);
  c[n] = QuadScalar(1);
  ExactMatrix m = ExactMatrix::identity(n);  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    ExactMatrix am = (*this) * m;
    QuadScalar ck = am.trace() * QuadScalar(Rat(-1, k));
    c[n - k] = ck;
    if (k < n) {
      m = am;
      for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    }
  }
  return c;
}

ExactMatrix ExactMatrix::solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("solve: dim mismatch");
  const int n = a.dim_;
  ExactMatrix m = a, rhs = b;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(rhs.at(piv, j), rhs.at(col, j));
      }
    }
    QuadScalar inv = m.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= inv;
      rhs.at(col, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      QuadScalar f = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        rhs.at(r, j) -= f * rhs.at(col, j);
      }
    }
  }
  return rhs;
}

size_t ExactMatrix::hash() const {
  size_t h = static_cast<size_t>(dim_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& x : e_) h = hash_value(x, h);
  return h;
}

}  // namespace fsl::spinmolien
