#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symkit/eigen_support.hpp"
#include "symkit/ideal.hpp"

namespace symkit {

/// The system has infinitely many solutions.
class PositiveDimensional : public std::runtime_error {
 public:
  explicit PositiveDimensional(const std::string& what) : std::runtime_error(what) {}
};

using Assignment = std::map<std::string, GaussianRational>;

struct AffineSolutions {
  std::vector<Assignment> points;
  bool residual = false;
};

/// Every solution with coordinates in Q(i) of a zero-dimensional system, by
/// back substitution through a lex basis.
AffineSolutions solve_affine(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables);

struct ProjectiveSolutions {
  /// Points scaled so the first nonzero coordinate is 1, in lexicographic
  /// chart order.
  std::vector<VecX<GaussianRational>> points;
  bool residual = false;
};

/// Projective solutions of homogeneous generators in `variables`, solved
/// chart by chart. Throws PositiveDimensional when the zero set is a curve
/// or larger.
ProjectiveSolutions solve_projective(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables);

/// Length of the scheme at a projective point, computed in the affine chart
/// where its first nonzero coordinate is 1.
long projective_local_length(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables,
                             const VecX<GaussianRational>& point);

/// Degree of the zero-dimensional projective scheme (stable value of the
/// Hilbert function).
long projective_degree(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables);

Assignment to_assignment(const std::vector<std::string>& variables, const VecX<GaussianRational>& point);

}  // namespace symkit
