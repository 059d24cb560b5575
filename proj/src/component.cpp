#include "symkit/component.hpp"

#include <algorithm>

#include "symkit/ideal.hpp"
#include "symkit/linalg.hpp"
#include "symkit/random.hpp"
#include "symkit/solve.hpp"

namespace symkit {

namespace {

// Slice lengths beyond this are treated as non-isolated.
constexpr int kSliceOrderCap = 12;

bool is_linear(const MultiPoly& p) { return p.total_degree() <= 1; }

// Coefficient matrix of the linear forms among `ideal`.
MatX<GaussianRational> linear_part(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars) {
  std::vector<const MultiPoly*> lin;
  for (const auto& g : ideal)
    if (!g.is_zero() && is_linear(g)) lin.push_back(&g);
  MatX<GaussianRational> m = MatX<GaussianRational>::Zero(static_cast<Eigen::Index>(lin.size()),
                                                          static_cast<Eigen::Index>(vars.size()));
  for (std::size_t r = 0; r < lin.size(); ++r)
    for (std::size_t c = 0; c < vars.size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = lin[r]->coefficient({{vars[c], 1}});
  return m;
}

bool is_real_vector(const VecX<GaussianRational>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_real()) return false;
  return true;
}

MultiPoly random_hyperplane(const std::vector<std::string>& u, std::mt19937_64& rng) {
  const int m = static_cast<int>(u.size());
  auto var = [&](int k) { return MultiPoly::variable(u[static_cast<std::size_t>(k)]); };
  int i = small_int(rng, 0, m - 1);
  if (m == 1) return var(i);
  int j = small_int(rng, 0, m - 2);
  if (j >= i) ++j;
  MultiPoly h = var(i) - var(j) * GaussianRational(small_int(rng, -5, 5));
  if (m > 2 && small_int(rng, 0, 3) == 0) {
    int k = small_int(rng, 0, m - 1);
    if (k != i && k != j) h += var(k) * GaussianRational(small_int(rng, -5, 5));
  }
  return h;
}

// l when g is a scalar multiple of l^k for a linear form l, else g.
MultiPoly linear_root(const MultiPoly& g) {
  const int k = g.total_degree();
  if (k < 2 || !g.is_homogeneous()) return g;
  for (const auto& v : g.support()) {
    if (g.degree_in(v) != k) continue;
    MultiPoly l = g;
    for (int step = 1; step < k; ++step) l = diff(l, v);
    MultiPoly lk = l.pow(static_cast<unsigned>(k));
    const std::map<std::string, std::uint32_t> top{{v, static_cast<std::uint32_t>(k)}};
    return lk * (g.coefficient(top) / lk.coefficient(top)) == g ? l : g;
  }
  return g;
}

VecX<GaussianRational> first_one(const VecX<GaussianRational>& v, Eigen::Index* index) {
  Eigen::Index j = 0;
  while (j < v.size() && v(j).is_zero()) ++j;
  if (index) *index = j;
  return normalize_projective(v);
}

}  // namespace

LinearSection linear_section(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars) {
  LinearSection sec;
  sec.basis = kernel(linear_part(ideal, vars));
  const auto m = sec.basis.cols();
  sec.u = indexed_names("u", static_cast<int>(m));
  std::map<std::string, MultiPoly> images;
  for (std::size_t c = 0; c < vars.size(); ++c) {
    MultiPoly img = MultiPoly(0).extended(sec.u);
    for (Eigen::Index k = 0; k < m; ++k) {
      const auto& a = sec.basis(static_cast<Eigen::Index>(c), k);
      if (!a.is_zero()) img += MultiPoly::variable(sec.u[static_cast<std::size_t>(k)]) * a;
    }
    images.emplace(vars[c], img);
  }
  for (const auto& g : ideal) {
    if (g.is_zero() || is_linear(g)) continue;
    MultiPoly r = substitute(g, images).trimmed();
    if (!r.is_zero()) sec.rest.push_back(r.extended(merge_variables(r.variables(), sec.u)));
  }
  return sec;
}

MatX<GaussianRational> quadric_gram(const MultiPoly& q, const std::vector<std::string>& vars) {
  if (q.total_degree() != 2 || !q.is_homogeneous()) throw std::invalid_argument("not a quadratic form: " + q.str());
  const auto m = static_cast<Eigen::Index>(vars.size());
  MatX<GaussianRational> g(m, m);
  const GaussianRational half(mpq_class(1, 2));
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) {
      const auto& a = vars[static_cast<std::size_t>(r)];
      const auto& b = vars[static_cast<std::size_t>(c)];
      g(r, c) = r == c ? q.coefficient({{a, 2}}) : q.coefficient({{a, 1}, {b, 1}}) * half;
    }
  return g;
}

int projective_dimension(const std::vector<MultiPoly>& ideal, const std::vector<std::string>& vars) {
  IdealBasis gb = buchberger(ideal, TermOrder::grevlex(), vars);
  if (gb.is_unit()) return -1;
  return krull_dimension(gb) - 1;
}

std::vector<VecX<GaussianRational>> sample_points(const std::vector<MultiPoly>& ideal,
                                                  const std::vector<std::string>& vars, std::mt19937_64& rng,
                                                  int wanted, int budget, bool real_only) {
  std::vector<VecX<GaussianRational>> out;
  auto accept = [&](const VecX<GaussianRational>& x) {
    if (is_zero_vector(x)) return;
    if (real_only && !is_real_vector(x)) return;
    VecX<GaussianRational> p = normalize_projective(x);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };

  const LinearSection sec = linear_section(ideal, vars);
  const MatX<GaussianRational>& basis = sec.basis;
  const auto m = basis.cols();
  if (m == 0) return out;
  const std::vector<std::string>& u = sec.u;
  const std::vector<MultiPoly>& rest = sec.rest;

  if (rest.empty()) {
    for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < wanted; ++attempt) {
      VecX<GaussianRational> coeffs(m);
      for (Eigen::Index k = 0; k < m; ++k) {
        int a = small_int(rng, 1, 5);
        coeffs(k) = GaussianRational(small_int(rng, 0, 1) ? a : -a);
      }
      accept(basis * coeffs);
    }
    return out;
  }

  int dim = projective_dimension(rest, u);
  if (dim < 0) return out;
  for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < wanted; ++attempt) {
    std::vector<MultiPoly> system = rest;
    for (int h = 0; h < dim; ++h) system.push_back(random_hyperplane(u, rng).extended(u));
    ProjectiveSolutions sols;
    try {
      sols = solve_projective(system, u);
    } catch (const PositiveDimensional&) {
      continue;
    }
    for (const auto& s : sols.points) accept(basis * s);
  }
  return out;
}

Check singular_along(const SymmetricPencil& pencil, const ComponentClaim& claim, std::mt19937_64& rng) {
  return timed_check(claim.label, [&](Check& c) {
    const auto& vars = pencil.variables();
    IdealBasis gb = buchberger(claim.ideal, TermOrder::grevlex(), vars);
    std::vector<std::string> ideal_text;
    for (const auto& g : claim.ideal) ideal_text.push_back(g.str());
    c.witness["ideal"] = ideal_text;

    bool jac = true;
    for (const auto& g : jacobian_ideal(pencil).generators) jac = jac && ideal_contains(g, gb);
    c.witness["jacobian_contained"] = jac;
    c.status = jac ? Status::pass : Status::fail;
    if (!jac) c.detail = "a partial derivative does not vanish on the component";
    if (!claim.expected_rank) return;

    const int r = *claim.expected_rank;
    bool minors = true;
    if (r < 4)
      for (const auto& g : minor_ideal(pencil, r).generators) minors = minors && ideal_contains(g, gb);
    c.witness["expected_rank"] = r;
    c.witness["minors_contained"] = minors;
    if (!minors) {
      c.status = Status::fail;
      c.detail = "some " + std::to_string(r + 1) + "-minor does not vanish on the component";
      return;
    }
    auto samples = sample_points(claim.ideal, vars, rng);
    int generic = -1;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : samples) {
      int k = rank_at(pencil, p);
      generic = std::max(generic, k);
      pts.push_back({{"point", point_str(p)}, {"rank", k}});
    }
    c.witness["samples"] = pts;
    if (samples.empty()) {
      c.status = jac ? Status::partial : Status::fail;
      c.detail = "no Q(i) point found on the component; containment only";
      return;
    }
    c.witness["generic_rank"] = generic;
    if (generic != r) {
      c.status = Status::fail;
      c.detail = "sampled rank " + std::to_string(generic) + ", expected " + std::to_string(r);
    } else if (jac) {
      c.detail = "rank " + std::to_string(r) + " at " + point_str(samples.front());
    }
  });
}

Multiplicity component_multiplicity(const std::vector<MultiPoly>& minors, const std::vector<std::string>& vars,
                                    const ComponentClaim& claim, std::mt19937_64& rng, int trials) {
  const int n = static_cast<int>(vars.size()) - 1;
  const int dim = projective_dimension(claim.ideal, vars);
  if (dim < 0) throw std::invalid_argument(claim.label + " is empty");
  const int codim = n - dim;
  auto points = sample_points(claim.ideal, vars, rng, trials);
  if (points.empty()) throw std::runtime_error("no Q(i) point found on " + claim.label);

  Multiplicity best;
  best.slice = best.line = -1;
  for (const auto& raw : points) {
    Eigen::Index j = 0;
    VecX<GaussianRational> p = first_one(raw, &j);
    // Tangent space of the claim at p (it contains p itself).
    Assignment at = to_assignment(vars, p);
    MatX<GaussianRational> jac(static_cast<Eigen::Index>(claim.ideal.size()), n + 1);
    for (std::size_t r = 0; r < claim.ideal.size(); ++r)
      for (int k = 0; k <= n; ++k) {
        const auto& v = vars[static_cast<std::size_t>(k)];
        const MultiPoly g = linear_root(claim.ideal[r]);
        jac(static_cast<Eigen::Index>(r), k) =
            std::find(g.variables().begin(), g.variables().end(), v) == g.variables().end()
                ? GaussianRational(0)
                : evaluate(diff(g, v), at);
      }
    const MatX<GaussianRational> tangent = kernel(jac);

    auto length_along = [&](int directions) {
      std::vector<std::string> t = indexed_names("t", directions);
      std::vector<VecX<GaussianRational>> w;
      MatX<GaussianRational> span(n + 1, tangent.cols() + directions);
      for (int attempt = 0;; ++attempt) {
        if (attempt == 50) throw std::runtime_error("no transverse directions found");
        w.clear();
        span.leftCols(tangent.cols()) = tangent;
        for (int l = 0; l < directions; ++l) {
          VecX<GaussianRational> d(n + 1);
          for (int k = 0; k <= n; ++k) d(k) = k == j ? GaussianRational(0) : GaussianRational(small_int(rng, -5, 5));
          span.col(tangent.cols() + l) = d;
          w.push_back(d);
        }
        if (rank(span) == span.cols()) break;
      }
      std::map<std::string, MultiPoly> images;
      for (int k = 0; k <= n; ++k) {
        MultiPoly img = MultiPoly(p(k)).extended(t);
        for (int l = 0; l < directions; ++l)
          if (!w[static_cast<std::size_t>(l)](k).is_zero())
            img += MultiPoly::variable(t[static_cast<std::size_t>(l)]) * w[static_cast<std::size_t>(l)](k);
        images.emplace(vars[static_cast<std::size_t>(k)], img);
      }
      std::vector<MultiPoly> sliced;
      for (const auto& g : minors) sliced.push_back(substitute(g, images).trimmed().extended(t));
      Assignment origin;
      for (const auto& name : t) origin[name] = GaussianRational(0);
      return local_length(sliced, t, origin, kSliceOrderCap);
    };
    // A slice containing a curve of the locus never stabilises; redraw it.
    auto transverse = [&](int directions) {
      for (int attempt = 0; attempt < 6; ++attempt) {
        try {
          return length_along(directions);
        } catch (const std::runtime_error&) {
        }
      }
      throw std::runtime_error("no transverse slice found through " + point_str(p));
    };
    long slice = transverse(codim);
    long line = transverse(1);
    if (best.slice < 0 || slice < best.slice) {
      best.slice = slice;
      best.point = p;
    }
    if (best.line < 0 || line < best.line) best.line = line;
  }
  return best;
}

std::vector<LocusComponent> rank_locus_report(const SymmetricPencil& pencil, int k,
                                              const std::vector<ComponentClaim>& claims, std::mt19937_64& rng) {
  std::vector<MultiPoly> minors = minor_ideal(pencil, k).generators;
  std::vector<LocusComponent> out;
  for (const auto& claim : claims) {
    LocusComponent entry;
    entry.label = claim.label;
    IdealBasis gb = buchberger(claim.ideal, TermOrder::grevlex(), pencil.variables());
    entry.contained = std::all_of(minors.begin(), minors.end(), [&](const MultiPoly& g) { return ideal_contains(g, gb); });
    if (entry.contained) entry.multiplicity = component_multiplicity(minors, pencil.variables(), claim, rng);
    out.push_back(entry);
  }
  return out;
}

KernelBasePoint kernel_base_point_check(const SymmetricPencil& pencil, const VecX<GaussianRational>& point) {
  KernelBasePoint out;
  GaussMatrix g = gram_at(pencil, point);
  if (rank(g) != 3) return out;
  Assignment at = to_assignment(pencil.variables(), point);
  for (const auto& d : jacobian_ideal(pencil).generators)
    if (!evaluate(d, at).is_zero()) return out;
  out.applicable = true;
  out.kernel = normalize_projective(kernel(g).col(0));
  Assignment y = to_assignment(y_variables(), out.kernel);
  out.holds = true;
  for (const auto& q : web_generators(pencil)) out.holds = out.holds && evaluate(q, y).is_zero();
  return out;
}

}  // namespace symkit
