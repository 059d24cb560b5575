#include "symkit/gaussian_rational.hpp"

#include <ostream>

#include "symkit/poly.hpp"

namespace symkit {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "I";
  } else if (im_ == -1) {
    imag = "-I";
  } else {
    imag = im_.get_str() + "*I";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  MultiPoly p = parse_poly(text);
  if (!p.is_constant()) {
    throw ParseError("expected a Gaussian rational, got '" + std::string(text) + "'", 0);
  }
  return p.constant_term();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

int real_sign(const GaussianRational& z) {
  if (!z.is_real()) throw std::domain_error("sign of a non-real value: " + z.str());
  return sgn(z.re());
}

}  // namespace symkit
