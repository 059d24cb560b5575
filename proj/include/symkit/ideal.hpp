#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symkit/poly.hpp"

namespace symkit {

enum class OrderKind { grevlex, lex, block };

/// Monomial order on exponent vectors laid out in ring-variable order (the
/// first ring variable is the largest under lex).
struct TermOrder {
  OrderKind kind = OrderKind::grevlex;
  /// For block orders: the first `split` variables form the eliminated block,
  /// ranked strictly above the rest; grevlex inside each block.
  std::size_t split = 0;

  static TermOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static TermOrder lex() { return {OrderKind::lex, 0}; }
  static TermOrder block(std::size_t split) { return {OrderKind::block, split}; }

  /// Returns -1, 0 or 1 as `a` is smaller than, equal to or larger than `b`.
  int compare(const Exponents& a, const Exponents& b) const;
  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGroebner : public std::logic_error {
 public:
  NotGroebner() : std::logic_error("basis is not a Groebner basis; run buchberger() first") {}
};

/// Generators of a polynomial ideal in a ring with an explicit variable order.
struct IdealBasis {
  std::vector<std::string> variables;
  TermOrder order;
  std::vector<MultiPoly> generators;
  bool groebner = false;

  bool is_unit() const;
};

/// Maximum number of S-pair reductions before buchberger gives up.
inline constexpr long kPairBudget = 1'000'000;

/// Reduced Groebner basis (monic, sorted by decreasing leading monomial).
/// `variables` fixes the ring order; empty means the sorted union of the
/// generators' variables.
IdealBasis buchberger(const std::vector<MultiPoly>& gens, TermOrder order = TermOrder::grevlex(),
                      std::vector<std::string> variables = {});

/// Full remainder of multivariate division. Variables of `p` outside the
/// basis ring are appended after the ring variables.
MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis);

bool ideal_contains(const MultiPoly& p, const IdealBasis& groebner_basis);
bool ideal_contains(const MultiPoly& p, const std::vector<MultiPoly>& gens);
bool ideal_contains_all(const std::vector<MultiPoly>& ps, const std::vector<MultiPoly>& gens);
bool ideals_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

/// Generators of the elimination ideal I ∩ k[variables \ drop], computed with
/// a block order that ranks the dropped block first.
IdealBasis eliminate(const std::vector<MultiPoly>& gens, const std::vector<std::string>& drop);

/// Leading monomial of `p` under the basis ring and order.
Exponents leading_exponents(const MultiPoly& p, const IdealBasis& ring);

/// Buchberger's criterion checked directly: every S-polynomial of the
/// basis has zero normal form.
bool satisfies_s_pair_criterion(const IdealBasis& basis);

/// Dimension of the affine variety V(I) in the ring's variables; -1 when I is
/// the unit ideal.
int krull_dimension(const IdealBasis& groebner_basis);

/// Number of standard monomials of the given total degree.
long hilbert_function(const IdealBasis& groebner_basis, int degree);

/// Length of the local ring of the ideal at an affine point (0 when the point
/// is not a zero). Throws std::runtime_error when the point is not isolated.
long local_length(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables,
                  const std::map<std::string, GaussianRational>& point, int max_order = 40);

}  // namespace symkit
