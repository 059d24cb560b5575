#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symkit/eigen_support.hpp"
#include "symkit/ideal.hpp"

namespace symkit {

class InvalidPencil : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A(x) = A_0 x_0 + ... + A_n x_n with symmetric 4x4 matrices over Q(i).
class SymmetricPencil {
 public:
  /// Throws InvalidPencil for asymmetric or all-zero input, and for a
  /// vanishing determinant unless `allow_degenerate` is set.
  explicit SymmetricPencil(std::vector<GaussMatrix> matrices, bool allow_degenerate = false);

  int n() const { return static_cast<int>(matrices_.size()) - 1; }
  const std::vector<GaussMatrix>& matrices() const { return matrices_; }
  const GaussMatrix& matrix(int i) const { return matrices_[static_cast<std::size_t>(i)]; }
  bool is_real() const { return real_; }
  /// x0 .. xn
  const std::vector<std::string>& variables() const { return variables_; }

 private:
  std::vector<GaussMatrix> matrices_;
  std::vector<std::string> variables_;
  bool real_ = true;
};

/// Parses the pencil text format:
///
///     n=4
///     A0:
///     1 0 0 0
///     ...
///
/// Blocks that are not given are zero. `#` starts a comment. Errors are
/// ParseError carrying the line number.
SymmetricPencil parse_pencil(const std::string& text, bool allow_degenerate = false);
std::string format_pencil(const SymmetricPencil& pencil);

/// A(x) as a matrix of linear forms.
PolyMatrix pencil_matrix(const SymmetricPencil& pencil);

/// Throws std::invalid_argument on a dimension mismatch or the zero vector.
GaussMatrix gram_at(const SymmetricPencil& pencil, const VecX<GaussianRational>& point);
int rank_at(const SymmetricPencil& pencil, const VecX<GaussianRational>& point);

struct Quartic {
  MultiPoly f;
  bool degenerate = false;  // det A(x) vanishes identically
};

Quartic symmetroid_quartic(const SymmetricPencil& pencil);

/// All (k+1)-minors of A(x), 1 <= k <= 3. A minor with rows R and columns C
/// equals the one with rows C and columns R, so only R <= C is kept.
IdealBasis minor_ideal(const SymmetricPencil& pencil, int k);

/// Partial derivatives of the quartic (in variable order, zero partials kept).
IdealBasis jacobian_ideal(const SymmetricPencil& pencil);

/// Basis of the directions v with sum v_i df/dx_i = 0 identically; empty
/// when the symmetroid is not a cone.
std::vector<VecX<GaussianRational>> cone_test(const SymmetricPencil& pencil);

/// q_i = y^T A_i y in y0..y3.
std::vector<MultiPoly> web_generators(const SymmetricPencil& pencil);
const std::vector<std::string>& y_variables();

/// y^T G y for a symmetric Gram matrix.
MultiPoly quadratic_form(const GaussMatrix& gram);

VecX<GaussianRational> make_point(std::initializer_list<GaussianRational> coords);

}  // namespace symkit
