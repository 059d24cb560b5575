#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symkit/gaussian_rational.hpp"

namespace symkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  /// 1-based line of the offending input, 0 when not line-oriented.
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class MissingAssignment : public std::invalid_argument {
 public:
  explicit MissingAssignment(const std::string& name)
      : std::invalid_argument("no value assigned to variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Natural variable order: alphabetic prefix, then numeric suffix by value
/// (x2 < x10), then the raw string.
bool variable_less(std::string_view a, std::string_view b);

/// Sorted union of two sorted variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q(i).
///
/// `variables()` is kept sorted under variable_less and is the union of the
/// operands' lists; it is never trimmed implicitly, so a determinant of a
/// pencil still carries every x_i even when some x_i cancels. Terms hold no
/// zero coefficients. Equality compares the polynomials, not the lists.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational>;

  MultiPoly() = default;
  MultiPoly(int c);                 // NOLINT
  MultiPoly(const GaussianRational& c);  // NOLINT

  static MultiPoly variable(const std::string& name);
  /// `vars` must be sorted and unique; zero coefficients are dropped.
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  /// Coefficient of a monomial given as {name: exponent}; absent names are 0.
  GaussianRational coefficient(const std::map<std::string, std::uint32_t>& monomial) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::string_view var) const;
  bool is_homogeneous() const;
  /// True when every term has the same total degree in `block`; that degree
  /// is written to `degree` (-1 for zero).
  bool is_homogeneous_in(const std::vector<std::string>& block, int* degree = nullptr) const;
  /// Variables that occur with positive exponent.
  std::vector<std::string> support() const;

  /// Same polynomial over a sorted superset of the current variables.
  MultiPoly extended(const std::vector<std::string>& vars) const;
  MultiPoly trimmed() const;

  bool is_real() const;
  MultiPoly conj() const;
  MultiPoly pow(unsigned e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussianRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical text: terms in graded reverse lexicographic order, e.g.
  /// `x0^2+2*x0*x1-(1+I)*x1^2+3/2`.
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the polynomial text format (sums of products of rationals, `I`,
/// identifiers, powers and parentheses). `str()` output round-trips exactly.
MultiPoly parse_poly(std::string_view text);

/// Exact evaluation; throws MissingAssignment for an unassigned variable that
/// occurs in `p`.
GaussianRational evaluate(const MultiPoly& p, const std::map<std::string, GaussianRational>& point);

/// Formal partial derivative; throws UnknownVariable when `var` is not in
/// `p.variables()`.
MultiPoly diff(const MultiPoly& p, const std::string& var);

/// Ring homomorphism sending each mapped variable to its image.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& images);

/// Names `prefix0 .. prefix{count-1}`.
std::vector<std::string> indexed_names(const std::string& prefix, int count);

}  // namespace symkit
