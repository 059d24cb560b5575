#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symkit/pencil.hpp"
#include "symkit/report.hpp"

namespace symkit {

/// A claimed subvariety of the parameter space P^n, by homogeneous
/// generators in x0..xn.
struct ComponentClaim {
  std::string label;
  std::vector<MultiPoly> ideal;
  std::optional<int> expected_rank;
};

/// A claim V(linear forms, rest) written over its linear span: x = basis * u,
/// with the nonlinear generators pulled back to u0..u{m-1}.
struct LinearSection {
  MatX<GaussianRational> basis;
  std::vector<std::string> u;
  std::vector<MultiPoly> rest;
};

LinearSection linear_section(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars);

/// Symmetric matrix G with q = u^T G u for a quadratic form q in `vars`.
MatX<GaussianRational> quadric_gram(const MultiPoly& q, const std::vector<std::string>& vars);

/// Dimension of V(ideal) in P^(vars-1); -1 when empty.
int projective_dimension(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars);

/// Q(i)-points of V(ideal), found by solving against random sparse
/// hyperplanes with coefficients in [-5, 5] (up to `budget` slices). Linear
/// generators are eliminated first, so points of linear spaces are random
/// combinations of a basis with nonzero coefficients. Points are projectively normalized and distinct.
std::vector<VecX<GaussianRational>> sample_points(const std::vector<MultiPoly>& ideal,
                                                  const std::vector<std::string>& vars, std::mt19937_64& rng,
                                                  int wanted = 3, int budget = 50, bool real_only = false);

/// Every partial of the quartic lies in the claimed ideal; with an expected
/// rank r, also every (r+1)-minor, and a sampled point has rank exactly r.
/// Without a Q(i) sample the check degrades to PARTIAL.
Check singular_along(const SymmetricPencil& pencil, const ComponentClaim& claim, std::mt19937_64& rng);

struct Multiplicity {
  /// Length of the minor ideal on a random linear space of complementary
  /// dimension through a point of the component.
  long slice = 0;
  /// Order of vanishing of the minors along a random line through the point.
  long line = 0;
  VecX<GaussianRational> point;
};

/// Both multiplicities of `minors` along the component, each the minimum
/// over `trials` random choices.
Multiplicity component_multiplicity(const std::vector<MultiPoly>& minors, const std::vector<std::string>& vars,
                                    const ComponentClaim& claim, std::mt19937_64& rng, int trials = 3);

struct LocusComponent {
  std::string label;
  bool contained = false;
  Multiplicity multiplicity;
};

/// Verifies each claim lies in the rank <= k locus and measures the
/// multiplicity of the (k+1)-minor ideal along it.
std::vector<LocusComponent> rank_locus_report(const SymmetricPencil& pencil, int k,
                                              const std::vector<ComponentClaim>& claims, std::mt19937_64& rng);

struct KernelBasePoint {
  bool applicable = false;  // point has corank 1 and is singular on the symmetroid
  bool holds = false;       // the kernel vector is a base point of the web
  VecX<GaussianRational> kernel;
};

/// At a corank-1 singular point of the symmetroid, the kernel of A(x) must
/// be a common zero of all quadrics of the web.
KernelBasePoint kernel_base_point_check(const SymmetricPencil& pencil, const VecX<GaussianRational>& point);

}  // namespace symkit
