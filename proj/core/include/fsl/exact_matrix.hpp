#pragma once

// Dense square matrices over Q(sqrt 2), hashable by canonical entries.

#include <cstddef>
#include <vector>

#include "fsl/quadratic.hpp"

namespace fsl::spinmolien {

class ExactMatrix {
 public:
  ExactMatrix() : dim_(0) {}
  explicit ExactMatrix(int dim) : dim_(dim), e_(size_t(dim) * dim) {}

  static ExactMatrix identity(int dim);

  int dim() const { return dim_; }
  QuadScalar& at(int r, int c) { return e_[size_t(r) * dim_ + c]; }
  const QuadScalar& at(int r, int c) const { return e_[size_t(r) * dim_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const QuadScalar& s) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

  QuadScalar trace() const;
  bool is_identity() const;
  bool all_rational() const;
  bool anticommutes_with(const ExactMatrix& o) const;

  // Coefficients c_0..c_dim of det(x I - A), computed by the
  // Faddeev-LeVerrier recurrence (divisions only by integers).
  std::vector<QuadScalar> char_poly() const;

  // Solves A X = B by Gaussian elimination; throws if A is singular.
  static ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

  size_t hash() const;

 private:
  int dim_;
  std::vector<QuadScalar> e_;
};

struct ExactMatrixHash {
  size_t operator()(const ExactMatrix& m) const { return m.hash(); }
};

}  // namespace fsl::spinmolien
