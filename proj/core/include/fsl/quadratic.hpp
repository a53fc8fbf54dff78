#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt 2). The reflection
// generators (e_i - e_{i+1})/sqrt(2) need the radical; even products of two
// reflections land back in the rational part.

#include <cstddef>
#include <string>

#include "fsl/numeric.hpp"

namespace fsl::spinmolien {

// a + b*sqrt(2), both components canonical reduced rationals.
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0) {}
  QuadScalar(long v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rat a) : a_(std::move(a)), b_(0) {}  // NOLINT
  QuadScalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QuadScalar sqrt2() { return QuadScalar(Rat(0), Rat(1)); }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_); }
  QuadScalar& operator+=(const QuadScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadScalar& operator*=(const QuadScalar& o) {
    // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r,  r^2 = 2
    Rat a = a_ * o.a_ + 2 * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Field norm a^2 - 2 b^2; zero iff the element is zero.
  Rat norm() const { return a_ * a_ - 2 * b_ * b_; }

  QuadScalar inverse() const;
  QuadScalar conjugate() const { return QuadScalar(a_, -b_); }

  // Canonical form "a" or "a+b*r2"; used for hashing and reports.
  std::string str() const;

  double to_double() const;

 private:
  Rat a_, b_;
};

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);

size_t hash_value(const QuadScalar& q, size_t seed);

}  // namespace fsl::spinmolien
