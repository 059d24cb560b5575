#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "symkit/poly.hpp"

namespace symkit {

/// Dense univariate polynomial over Q(i); `coeffs[k]` multiplies t^k and the
/// top coefficient is nonzero (the zero polynomial has no coefficients).
struct UPoly {
  std::vector<GaussianRational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const GaussianRational& lead() const { return coeffs.back(); }
  void trim();
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
bool operator==(const UPoly& a, const UPoly& b);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& p);
UPoly squarefree_part(const UPoly& p);
GaussianRational evaluate(const UPoly& p, const GaussianRational& t);

/// Throws std::invalid_argument if `p` involves a variable other than `var`.
UPoly to_univariate(const MultiPoly& p, const std::string& var);

/// Gaussian integer a + b i.
struct GaussInt {
  mpz_class re{0}, im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) = default;
};

/// Exact quotient a / b if b divides a in Z[i].
bool divides(const GaussInt& b, const GaussInt& a, GaussInt* quotient = nullptr);
GaussInt gcd(GaussInt a, GaussInt b);

/// Gaussian prime factorization up to a unit. Returns false (and leaves the
/// output partial) when trial division on the norm exceeds `budget`.
bool factor(const GaussInt& z, std::vector<std::pair<GaussInt, int>>& out, unsigned long budget = 2'000'000);

struct RootSet {
  std::vector<GaussianRational> roots;  // distinct
  /// A factor of positive degree without roots in Q(i) remains.
  bool residual = false;
};

/// All roots in Q(i) of a nonzero polynomial.
RootSet gaussian_rational_roots(const UPoly& p);

}  // namespace symkit
