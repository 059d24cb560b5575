#include "symkit/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "symkit/linalg.hpp"
#include "symkit/random.hpp"

namespace symkit {

namespace {

using GR = GaussianRational;

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

GR trace_product(const GaussMatrix& a, const GaussMatrix& b) {
  GR t(0);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) t += a(r, c) * b(c, r);
  return t;
}

bool is_real_point(const VecX<GR>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_real()) return false;
  return true;
}

// Rational square root, if there is one.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return mpq_class(a, b);
}

// A rational zero of u^T G u whose first m-1 coordinates have height at
// most `height`, solving for the last one.
std::optional<VecX<GR>> first_rational_zero(const MatX<GR>& g, int height) {
  const auto m = g.rows();
  const mpq_class a = g(m - 1, m - 1).re();
  if (sgn(a) == 0) return VecX<GR>::Unit(m, m - 1);
  std::vector<int> v(static_cast<std::size_t>(m - 1), 0);
  for (int h = 1; h <= height; ++h) {
    // Every prefix in [-h, h]^(m-1) with a coordinate of size exactly h.
    std::fill(v.begin(), v.end(), -h);
    for (;;) {
      if (std::any_of(v.begin(), v.end(), [h](int x) { return x == h || x == -h; })) {
        mpq_class b = 0, c = 0;
        for (Eigen::Index i = 0; i < m - 1; ++i) {
          b += 2 * g(i, m - 1).re() * v[static_cast<std::size_t>(i)];
          for (Eigen::Index j = 0; j < m - 1; ++j)
            c += g(i, j).re() * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
        }
        if (auto root = rational_sqrt(b * b - 4 * a * c)) {
          VecX<GR> p(m);
          for (Eigen::Index i = 0; i < m - 1; ++i) p(i) = GR(v[static_cast<std::size_t>(i)]);
          p(m - 1) = GR(mpq_class((-b + *root) / (2 * a)));
          return p;
        }
      }
      std::size_t k = 0;
      while (k < v.size() && v[k] == h) v[k++] = -h;
      if (k == v.size()) break;
      ++v[k];
    }
  }
  return std::nullopt;
}

std::optional<Membership> common_verdict(const std::vector<Membership>& ms) {
  if (ms.empty()) return std::nullopt;
  if (std::all_of(ms.begin(), ms.end(), [&](Membership m) { return m == ms.front(); })) return ms.front();
  return std::nullopt;
}

}  // namespace

std::string DefinitenessVerdict::str() const {
  switch (kind) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite_rank_" + std::to_string(rank);
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite: return "negative_semidefinite_rank_" + std::to_string(rank);
    case Definiteness::zero: return "zero";
  }
  return "?";
}

UPoly characteristic_polynomial(const GaussMatrix& m) {
  PolyMatrix t;
  const MultiPoly var = MultiPoly::variable("t");
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) t(r, c) = (r == c ? var : MultiPoly(0).extended({"t"})) - MultiPoly(m(r, c));
  return to_univariate(determinant_laplace(t), "t");
}

DefinitenessVerdict definiteness(const GaussMatrix& m) {
  if (!is_real(MatX<GR>(m)) || !is_symmetric(MatX<GR>(m)))
    throw std::invalid_argument("definiteness needs a real symmetric matrix");
  UPoly p = characteristic_polynomial(m);
  std::vector<int> at_t, at_minus_t;
  int zeros = 0;
  while (zeros <= p.degree() && p.coeffs[static_cast<std::size_t>(zeros)].is_zero()) ++zeros;
  for (int k = 0; k <= p.degree(); ++k) {
    int s = sgn(p.coeffs[static_cast<std::size_t>(k)].re());
    at_t.push_back(s);
    at_minus_t.push_back(k % 2 ? -s : s);
  }
  DefinitenessVerdict v;
  v.positive = sign_changes(at_t);
  v.negative = sign_changes(at_minus_t);
  v.rank = 4 - zeros;
  if (v.rank == 0) v.kind = Definiteness::zero;
  else if (v.negative == 0) v.kind = v.rank == 4 ? Definiteness::positive_definite : Definiteness::positive_semidefinite;
  else if (v.positive == 0) v.kind = v.rank == 4 ? Definiteness::negative_definite : Definiteness::negative_semidefinite;
  else v.kind = Definiteness::indefinite;
  return v;
}

bool sylvester_positive_definite(const GaussMatrix& m) {
  for (Eigen::Index k = 1; k <= 4; ++k)
    if (sgn(determinant_elimination(MatX<GR>(m.topLeftCorner(k, k))).re()) <= 0) return false;
  return true;
}

std::optional<VecX<GR>> pd_search(const SymmetricPencil& pencil, int budget, std::mt19937_64& rng) {
  if (!pencil.is_real()) throw std::invalid_argument("pd_search needs a real pencil");
  const int size = pencil.n() + 1;
  std::vector<VecX<GR>> canonical;
  for (int i = 0; i < size; ++i) {
    canonical.push_back(VecX<GR>::Unit(size, i));
    canonical.push_back(-VecX<GR>::Unit(size, i));
  }
  canonical.push_back(VecX<GR>::Constant(size, GR(1)));
  auto pd = [&](const VecX<GR>& x) { return definiteness(gram_at(pencil, x)).kind == Definiteness::positive_definite; };
  int tried = 0;
  for (const auto& x : canonical) {
    if (tried++ >= budget) return std::nullopt;
    if (pd(x)) return x;
  }
  while (tried++ < budget) {
    VecX<GR> x(size);
    for (int k = 0; k < size; ++k) x(k) = GR(mpq_class(small_int(rng, -8, 8), small_int(rng, 1, 8)));
    if (!is_zero_vector(x) && pd(x)) return x;
  }
  return std::nullopt;
}

bool verify_infeasibility_certificate(const SymmetricPencil& pencil, const GaussMatrix& b) {
  const MatX<GR> bm = b;
  if (!is_real(bm) || !is_symmetric(bm)) return false;
  DefinitenessVerdict v = definiteness(b);
  if (v.kind == Definiteness::zero || !v.psd()) return false;
  return std::all_of(pencil.matrices().begin(), pencil.matrices().end(),
                     [&](const GaussMatrix& a) { return trace_product(a, b).is_zero(); });
}

std::optional<GaussMatrix> find_infeasibility_certificate(const SymmetricPencil& pencil) {
  if (!pencil.is_real()) return std::nullopt;
  // Unknown B by its entries r <= c.
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c) slots.emplace_back(r, c);
  MatX<GR> system(pencil.n() + 1, 10);
  for (int i = 0; i <= pencil.n(); ++i)
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [r, c] = slots[k];
      system(i, static_cast<Eigen::Index>(k)) = r == c ? pencil.matrix(i)(r, c) : pencil.matrix(i)(r, c) * GR(2);
    }
  MatX<GR> basis = kernel(system);
  auto to_matrix = [&](const VecX<GR>& v) {
    GaussMatrix b;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [r, c] = slots[k];
      b(r, c) = b(c, r) = v(static_cast<Eigen::Index>(k));
    }
    return b;
  };
  std::vector<VecX<GR>> candidates;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    candidates.push_back(basis.col(i));
    candidates.push_back(-basis.col(i));
  }
  for (Eigen::Index i = 0; i < basis.cols(); ++i)
    for (Eigen::Index j = i + 1; j < basis.cols(); ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) candidates.push_back(basis.col(i) * GR(si) + basis.col(j) * GR(sj));
  for (const auto& v : candidates) {
    GaussMatrix b = to_matrix(v);
    if (verify_infeasibility_certificate(pencil, b)) return b;
  }
  return std::nullopt;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside_spectrahedron";
  }
  return "?";
}

Membership boundary_membership(const SymmetricPencil& pencil, const VecX<GR>& x, const VecX<GR>& x_ref) {
  if (!is_real_point(x) || !is_real_point(x_ref)) throw std::invalid_argument("membership needs real points");
  const Definiteness ref = definiteness(gram_at(pencil, x_ref)).kind;
  if (ref != Definiteness::positive_definite && ref != Definiteness::negative_definite)
    throw std::invalid_argument("spectrahedron not established: reference point is not definite");
  GaussMatrix g = gram_at(pencil, x);
  if (ref == Definiteness::negative_definite) g = -g;
  DefinitenessVerdict v = definiteness(g);
  if (v.kind == Definiteness::positive_definite) return Membership::interior;
  if (v.psd()) return Membership::boundary;
  return Membership::outside;
}

std::vector<VecX<GR>> real_points(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars,
                                  std::mt19937_64& rng, int wanted, int height) {
  if (!std::all_of(ideal.begin(), ideal.end(), [](const MultiPoly& g) { return g.is_real(); }))
    throw std::invalid_argument("real point search needs real generators");
  LinearSection sec = linear_section(ideal, vars);
  const bool one_quadric = sec.rest.size() == 1 && sec.rest.front().total_degree() == 2 &&
                           sec.rest.front().is_homogeneous() && sec.basis.cols() >= 2;
  if (!one_quadric) return sample_points(ideal, vars, rng, wanted, 50, true);

  const MatX<GR> g = quadric_gram(sec.rest.front(), sec.u);
  auto first = first_rational_zero(g, height);
  std::vector<VecX<GR>> out;
  if (!first) return out;
  auto accept = [&](const VecX<GR>& u) {
    VecX<GR> x = normalize_projective(sec.basis * u);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  accept(*first);
  const auto m = g.rows();
  for (int attempt = 0; attempt < 20 * wanted && static_cast<int>(out.size()) < wanted; ++attempt) {
    VecX<GR> d(m);
    for (Eigen::Index k = 0; k < m; ++k) d(k) = GR(small_int(rng, -5, 5));
    const GR qd = (d.transpose() * g * d)(0, 0);
    const GR b = (first->transpose() * g * d)(0, 0);
    if (qd.is_zero()) continue;
    // Second intersection of the line first + t d with the quadric.
    VecX<GR> p = *first * qd - d * (b * GR(2));
    if (!is_zero_vector(p)) accept(p);
  }
  return out;
}

Configuration classify_configuration(const SymmetricPencil& pencil, const ComponentClaim& q,
                                     const std::vector<ComponentClaim>& conics, const VecX<GR>& x_ref,
                                     std::mt19937_64& rng) {
  auto measure = [&](const ComponentClaim& c) {
    ComponentMembership out;
    out.label = c.label;
    for (const auto& x : real_points(c.ideal, pencil.variables(), rng))
      out.samples.push_back(boundary_membership(pencil, x, x_ref));
    out.verdict = common_verdict(out.samples);
    return out;
  };
  Configuration out;
  out.quadric = measure(q);
  for (const auto& c : conics) out.conics.push_back(measure(c));
  out.partial = out.quadric.samples.empty() ||
                std::any_of(out.conics.begin(), out.conics.end(), [](const auto& c) { return c.samples.empty(); });
  if (out.conics.size() != 2) return out;
  const auto b = Membership::boundary, o = Membership::outside;
  const auto& c0 = out.conics[0].verdict;
  const auto& c1 = out.conics[1].verdict;
  if (out.quadric.verdict == o && c0 == b && c1 == b) out.kind = 1;
  if (out.quadric.verdict == b && ((c0 == b && c1 == o) || (c0 == o && c1 == b))) out.kind = 2;
  return out;
}

}  // namespace symkit
