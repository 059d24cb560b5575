#include "symkit/solve.hpp"

#include <algorithm>

#include "symkit/univariate.hpp"

namespace symkit {

namespace {

constexpr const char* kCurveAlarm =
    "base locus is positive dimensional: a base curve forces the symmetroid to be reducible";

bool uses_only(const MultiPoly& p, const std::vector<std::string>& allowed) {
  for (const auto& v : p.support())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  return true;
}

void extend(const IdealBasis& gb, const std::vector<std::string>& vars, std::size_t k, Assignment& partial,
            AffineSolutions& out) {
  // Variables vars[k+1..] are assigned; solve for vars[k].
  const std::string& v = vars[k];
  std::vector<std::string> block(vars.begin() + static_cast<long>(k), vars.end());
  std::map<std::string, MultiPoly> images;
  for (const auto& [name, value] : partial) images.emplace(name, MultiPoly(value));
  UPoly g;
  for (const auto& p : gb.generators) {
    if (!uses_only(p, block)) continue;
    UPoly u = to_univariate(substitute(p, images).trimmed(), v);
    g = gcd(g, u);
  }
  if (g.is_zero()) throw PositiveDimensional(kCurveAlarm);
  if (g.degree() == 0) return;
  RootSet roots = gaussian_rational_roots(g);
  out.residual = out.residual || roots.residual;
  for (const auto& r : roots.roots) {
    partial[v] = r;
    if (k == 0) out.points.push_back(partial);
    else extend(gb, vars, k - 1, partial, out);
    partial.erase(v);
  }
}

}  // namespace

AffineSolutions solve_affine(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables) {
  AffineSolutions out;
  std::vector<MultiPoly> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (variables.empty()) {
    bool consistent = std::all_of(nonzero.begin(), nonzero.end(), [](const MultiPoly& g) { return g.is_zero(); });
    if (consistent) out.points.emplace_back();
    return out;
  }
  IdealBasis dim_check = buchberger(nonzero, TermOrder::grevlex(), variables);
  if (dim_check.is_unit()) return out;
  if (krull_dimension(dim_check) > 0) throw PositiveDimensional(kCurveAlarm);
  IdealBasis lex = buchberger(dim_check.generators, TermOrder::lex(), variables);
  Assignment partial;
  extend(lex, variables, variables.size() - 1, partial, out);
  return out;
}

Assignment to_assignment(const std::vector<std::string>& variables, const VecX<GaussianRational>& point) {
  Assignment a;
  for (std::size_t k = 0; k < variables.size(); ++k) a[variables[k]] = point(static_cast<Eigen::Index>(k));
  return a;
}

ProjectiveSolutions solve_projective(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables) {
  ProjectiveSolutions out;
  const std::size_t n = variables.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::string, MultiPoly> chart;
    for (std::size_t k = 0; k < j; ++k) chart.emplace(variables[k], MultiPoly(0));
    chart.emplace(variables[j], MultiPoly(1));
    std::vector<std::string> free(variables.begin() + static_cast<long>(j) + 1, variables.end());
    std::vector<MultiPoly> local;
    for (const auto& g : gens) local.push_back(substitute(g, chart).trimmed());
    AffineSolutions sols = solve_affine(local, free);
    out.residual = out.residual || sols.residual;
    for (const auto& s : sols.points) {
      VecX<GaussianRational> p = VecX<GaussianRational>::Zero(static_cast<Eigen::Index>(n));
      p(static_cast<Eigen::Index>(j)) = GaussianRational(1);
      for (std::size_t k = j + 1; k < n; ++k) p(static_cast<Eigen::Index>(k)) = s.at(variables[k]);
      out.points.push_back(p);
    }
  }
  return out;
}

long projective_local_length(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables,
                             const VecX<GaussianRational>& point) {
  Eigen::Index j = 0;
  while (j < point.size() && point(j).is_zero()) ++j;
  if (j == point.size()) throw std::invalid_argument("the zero vector is not a projective point");
  GaussianRational inv = point(j).inverse();
  std::map<std::string, MultiPoly> chart{{variables[static_cast<std::size_t>(j)], MultiPoly(1)}};
  std::vector<std::string> free;
  Assignment at;
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (static_cast<Eigen::Index>(k) == j) continue;
    free.push_back(variables[k]);
    at[variables[k]] = point(static_cast<Eigen::Index>(k)) * inv;
  }
  std::vector<MultiPoly> local;
  for (const auto& g : gens) local.push_back(substitute(g, chart));
  return local_length(local, free, at);
}

long projective_degree(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables) {
  IdealBasis gb = buchberger(gens, TermOrder::grevlex(), variables);
  if (gb.is_unit()) return 0;
  if (krull_dimension(gb) > 1) throw PositiveDimensional(kCurveAlarm);
  long previous = -1;
  int repeats = 0;
  for (int d = 1; d < 64; ++d) {
    long h = hilbert_function(gb, d);
    repeats = h == previous ? repeats + 1 : 0;
    if (repeats >= 2 && d > 4) return h;
    previous = h;
  }
  throw std::runtime_error("Hilbert function did not stabilise");
}

}  // namespace symkit
