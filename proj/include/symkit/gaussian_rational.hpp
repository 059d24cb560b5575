#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symkit {

/// Raised when an exact division has a zero divisor.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// An element of Q(i), stored as two canonical GMP rationals.
///
/// Both parts are always in lowest terms with positive denominators, so two
/// equal values have identical representations.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT: implicit for Eigen literals
  GaussianRational(long v) : re_(v) {}  // NOLINT
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses `a/b`, `a/b+c/d*I`, `c/d*I`, `I`, `-I` and friends.
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = z * conj(z), always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text: `3/2`, `5/7*I`, `3/2-5/7*I`.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using GR = GaussianRational;

/// Sign of a real Gaussian rational; throws if the value has an imaginary part.
int real_sign(const GaussianRational& z);

}  // namespace symkit
