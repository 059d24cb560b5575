#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symkit/component.hpp"
#include "symkit/pencil.hpp"
#include "symkit/univariate.hpp"

namespace symkit {

enum class Definiteness {
  positive_definite,
  positive_semidefinite,
  indefinite,
  negative_definite,
  negative_semidefinite,
  zero,
};

struct DefinitenessVerdict {
  Definiteness kind = Definiteness::zero;
  int rank = 0;
  int positive = 0;  // eigenvalue counts with multiplicity
  int negative = 0;

  bool psd() const {
    return kind == Definiteness::positive_definite || kind == Definiteness::positive_semidefinite ||
           kind == Definiteness::zero;
  }
  /// `positive_semidefinite_rank_2`
  std::string str() const;
};

/// det(t I - M).
UPoly characteristic_polynomial(const GaussMatrix& m);

/// Exact eigenvalue sign counts from Descartes' rule on the characteristic
/// polynomial, exact because a real symmetric matrix has real eigenvalues.
/// Throws std::invalid_argument for a non-real or non-symmetric matrix.
DefinitenessVerdict definiteness(const GaussMatrix& m);

/// Leading principal minors all positive.
bool sylvester_positive_definite(const GaussMatrix& m);

/// A real point where A(x) is positive definite: first each +-e_i and the
/// all-ones vector, then random rationals with denominators up to 8.
/// nullopt means nothing was found, never that none exists. Throws
/// std::invalid_argument for a non-real pencil.
std::optional<VecX<GaussianRational>> pd_search(const SymmetricPencil& pencil, int budget, std::mt19937_64& rng);

/// B != 0, B positive semidefinite and trace(A_i B) = 0 for all i; then
/// trace(A(x) B) = 0 rules out a positive definite A(x).
bool verify_infeasibility_certificate(const SymmetricPencil& pencil, const GaussMatrix& b);

/// Searches the solution space of trace(A_i B) = 0 (basis elements, their
/// negatives, and pairwise sums and differences) for a verified certificate.
std::optional<GaussMatrix> find_infeasibility_certificate(const SymmetricPencil& pencil);

enum class Membership { interior, boundary, outside };
std::string to_string(Membership m);

/// Classifies a real point against the spectrahedron on the side of the
/// positive definite reference point. Throws std::invalid_argument when
/// A(x_ref) is not definite ("spectrahedron not established").
Membership boundary_membership(const SymmetricPencil& pencil, const VecX<GaussianRational>& x,
                               const VecX<GaussianRational>& x_ref);

/// Real rational points of a real component. A component cut out by linear
/// forms and one quadric is searched for a first point of height at most
/// `height` in its span, then parametrized by lines through it; anything
/// else falls back to real sampling.
std::vector<VecX<GaussianRational>> real_points(const std::vector<MultiPoly>& ideal,
                                                const std::vector<std::string>& vars, std::mt19937_64& rng,
                                                int wanted = 5, int height = 20);

struct ComponentMembership {
  std::string label;
  std::vector<Membership> samples;
  /// All samples share one verdict; unset without samples or on a mix.
  std::optional<Membership> verdict;
};

struct Configuration {
  int kind = 0;  // 1 or 2 of the dichotomy, 0 when neither pattern matches
  bool partial = false;  // some component had no real sample
  ComponentMembership quadric;
  std::vector<ComponentMembership> conics;
};

/// Case 1: Q outside, both conics on the boundary. Case 2: Q and one conic
/// on the boundary, the other conic outside.
Configuration classify_configuration(const SymmetricPencil& pencil, const ComponentClaim& q,
                                     const std::vector<ComponentClaim>& conics, const VecX<GaussianRational>& x_ref,
                                     std::mt19937_64& rng);

}  // namespace symkit
