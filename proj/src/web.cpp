#include "symkit/web.hpp"

#include <algorithm>
#include <stdexcept>

#include "symkit/linalg.hpp"
#include "symkit/random.hpp"
#include "symkit/solve.hpp"
#include "symkit/univariate.hpp"

namespace symkit {

namespace {

using GR = GaussianRational;

MatX<GR> stack_rows(const VecX<GR>& a, const VecX<GR>& b) {
  MatX<GR> m(2, a.size());
  m.row(0) = a.transpose();
  m.row(1) = b.transpose();
  return m;
}

// Gram matrix of the product of two linear forms.
GaussMatrix sym_product(const VecX<GR>& a, const VecX<GR>& b) {
  GaussMatrix g;
  const GR half = GR(mpq_class(1, 2));
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) g(r, c) = (a(r) * b(c) + b(r) * a(c)) * half;
  return g;
}

// Intersection of two column spans.
MatX<GR> intersect_spans(const MatX<GR>& u, const MatX<GR>& v) {
  if (u.cols() == 0 || v.cols() == 0) return MatX<GR>(u.rows(), 0);
  MatX<GR> both(u.rows(), u.cols() + v.cols());
  both.leftCols(u.cols()) = u;
  both.rightCols(v.cols()) = -v;
  MatX<GR> k = kernel(both);
  MatX<GR> out = u * k.topRows(u.cols());
  return row_space(out.transpose()).transpose();
}

MatX<GR> column_space(const GaussMatrix& g) { return row_space(MatX<GR>(g)).transpose(); }

// The quadric vanishes on the plane V(h).
bool vanishes_on_plane(const GaussMatrix& g, const VecX<GR>& h) {
  MatX<GR> k = kernel(MatX<GR>(h.transpose()));
  MatX<GR> r = k.transpose() * MatX<GR>(g) * k;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (!r(i, j).is_zero()) return false;
  return true;
}

bool on_plane(const VecX<GR>& h, const VecX<GR>& p) { return (h.transpose() * p)(0, 0).is_zero(); }

PolyMatrix symbolic_combination(const std::vector<GaussMatrix>& members, const std::vector<std::string>& s) {
  PolyMatrix m;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) {
      MultiPoly e = MultiPoly(0).extended(s);
      for (std::size_t i = 0; i < members.size(); ++i)
        if (!members[i](r, c).is_zero()) e += MultiPoly::variable(s[i]) * members[i](r, c);
      m(r, c) = e;
    }
  return m;
}

std::vector<MultiPoly> minors_of(const PolyMatrix& m, int size, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out;
  auto sets = combinations(4, size);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a; b < sets.size(); ++b) {
      MultiPoly d = determinant_laplace(submatrix(m, sets[a], sets[b]));
      if (!d.is_zero()) out.push_back(d.extended(merge_variables(d.variables(), vars)));
    }
  return out;
}

void require_generic_rank2(const std::vector<GaussMatrix>& members, const std::vector<std::string>& s) {
  PolyMatrix g = symbolic_combination(members, s);
  if (!minors_of(g, 3, s).empty()) throw std::invalid_argument("general member has rank above 2");
  if (minors_of(g, 2, s).empty()) throw std::invalid_argument("general member has rank below 2");
}

VecX<GR> nonzero_row(const GaussMatrix& g) {
  for (Eigen::Index r = 0; r < 4; ++r) {
    VecX<GR> row = g.row(r).transpose();
    if (!is_zero_vector(row)) return row;
  }
  throw std::invalid_argument("zero quadric");
}

VecX<GR> solve_second_factor(const GaussMatrix& g, const VecX<GR>& h) {
  // Unknown m with (h m^T + m h^T) / 2 = g, one equation per entry r <= c.
  MatX<GR> a = MatX<GR>::Zero(10, 4);
  VecX<GR> b(10);
  const GR half = GR(mpq_class(1, 2));
  Eigen::Index row = 0;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = r; c < 4; ++c, ++row) {
      a(row, c) += h(r) * half;
      a(row, r) += h(c) * half;
      b(row) = g(r, c);
    }
  auto m = solve_linear(a, b);
  if (!m) throw std::logic_error("rank-2 member does not contain the common plane");
  return *m;
}

}  // namespace

ProjLine ProjLine::through(const VecX<GR>& p, const VecX<GR>& q) { return from_basis(stack_rows(p, q).transpose()); }

ProjLine ProjLine::cut_out(const VecX<GR>& a, const VecX<GR>& b) {
  MatX<GR> k = kernel(stack_rows(a, b));
  if (k.cols() != 2) throw std::invalid_argument("linear forms are dependent");
  return from_basis(k);
}

ProjLine ProjLine::from_basis(const MatX<GR>& basis) {
  if (basis.rows() != 4) throw std::invalid_argument("a line in P^3 needs 4 coordinates");
  MatX<GR> span = row_space(basis.transpose());
  if (span.rows() != 2) throw std::invalid_argument("points do not span a line");
  return ProjLine(span);
}

bool ProjLine::contains(const VecX<GR>& p) const {
  MatX<GR> m(3, 4);
  m.topRows(2) = span_;
  m.row(2) = p.transpose();
  return rank(m) == 2;
}

bool ProjLine::is_real() const { return symkit::is_real(span_); }

ProjLine ProjLine::conj() const { return ProjLine(symkit::conj(span_)); }

MatX<GR> ProjLine::equations() const { return kernel(span_).transpose(); }

std::string ProjLine::str() const { return point_str(point(0)) + "-" + point_str(point(1)); }

bool lines_meet(const ProjLine& a, const ProjLine& b) {
  MatX<GR> m(4, 4);
  m.topRows(2) = a.span();
  m.bottomRows(2) = b.span();
  return determinant_elimination(m).is_zero();
}

bool lines_meet_by_kernel(const ProjLine& a, const ProjLine& b) {
  MatX<GR> m(4, 4);
  m.topRows(2) = a.equations();
  m.bottomRows(2) = b.equations();
  return kernel(m).cols() > 0;
}

int QuadricForm::rank() const { return static_cast<int>(symkit::rank(gram)); }

MatX<GR> QuadricForm::singular_locus() const { return kernel(gram); }

QuadricForm quadric_at(const SymmetricPencil& pencil, const VecX<GR>& x) { return {gram_at(pencil, x)}; }

Rank2Pencil classify_rank2_pencil(const GaussMatrix& q1, const GaussMatrix& q2) {
  const std::vector<std::string> st{"s", "t"};
  if (rank(stack_rows(Eigen::Map<const VecX<GR>>(q1.data(), 16), Eigen::Map<const VecX<GR>>(q2.data(), 16))) < 2)
    throw std::invalid_argument("the two quadrics do not span a pencil");
  require_generic_rank2({q1, q2}, st);

  // Members s*q1 + q2; the member q1 sits at t = 0.
  PolyMatrix g = symbolic_combination({q1, q2}, st);
  UPoly common;
  for (const auto& d : minors_of(g, 2, st)) {
    MultiPoly at_t1 = substitute(d, {{"t", MultiPoly(1)}}).trimmed();
    common = gcd(common, to_univariate(at_t1, "s"));
  }
  Rank2Pencil out;
  const int finite = common.is_zero() ? 0 : squarefree_part(common).degree();
  const bool q1_rank1 = rank(q1) == 1;
  out.rank1_members = finite + (q1_rank1 ? 1 : 0);
  if (out.rank1_members > 2) throw std::logic_error("more than two rank-1 members in a rank-2 pencil");
  out.kind = out.rank1_members + 1;

  if (out.kind == 1) {
    MatX<GR> h = intersect_spans(column_space(q1), column_space(q2));
    if (h.cols() != 1) throw std::logic_error("members of a rank-2 pencil share no plane");
    VecX<GR> hv = normalize_projective(h.col(0));
    out.plane = hv;
    out.line = ProjLine::cut_out(solve_second_factor(q1, hv), solve_second_factor(q2, hv));
  } else {
    const GaussMatrix generic = rank(q1) == 2 ? q1 : rank(q2) == 2 ? q2 : GaussMatrix(q1 + q2);
    out.line = ProjLine::from_basis(kernel(generic));
    if (out.kind == 2) {
      GaussMatrix rank1 = q1;
      if (!q1_rank1) {
        auto roots = gaussian_rational_roots(squarefree_part(common));
        if (roots.roots.size() != 1) throw std::logic_error("rank-1 member is not defined over Q(i)");
        rank1 = q1 * roots.roots.front() + q2;
      }
      out.plane = normalize_projective(nonzero_row(rank1));
    }
  }
  if (out.plane) out.line_in_plane = on_plane(*out.plane, out.line.point(0)) && on_plane(*out.plane, out.line.point(1));
  return out;
}

Rank2System classify_rank2_system(const std::vector<GaussMatrix>& members) {
  Rank2System out;
  if (members.size() == 2) {
    Rank2Pencil p = classify_rank2_pencil(members[0], members[1]);
    out.kind = p.kind;
    out.rank1_points = p.rank1_members;
    out.rank1_hypersurface = p.rank1_members == 2;
    out.plane = p.plane;
    if (p.kind != 1) out.double_line = p.line;
  } else {
    const auto s = indexed_names("s", static_cast<int>(members.size()));
    require_generic_rank2(members, s);
    auto two = minors_of(symbolic_combination(members, s), 2, s);
    const int k = static_cast<int>(members.size()) - 1;
    const int dim = projective_dimension(two, s);
    if (dim < 0) {
      out.kind = 1;
    } else if (dim == k - 1) {
      out.kind = 3;
      out.rank1_hypersurface = true;
    } else if (dim == 0) {
      auto sols = solve_projective(two, s);
      out.rank1_points = static_cast<long>(sols.points.size());
      if (out.rank1_points == 1 && !sols.residual) out.kind = 2;
    }
    MatX<GR> common = column_space(members.front());
    for (std::size_t i = 1; i < members.size(); ++i) common = intersect_spans(common, column_space(members[i]));
    if (common.cols() == 1) {
      VecX<GR> h = normalize_projective(common.col(0));
      if (std::all_of(members.begin(), members.end(), [&](const GaussMatrix& g) { return vanishes_on_plane(g, h); }))
        out.plane = h;
    }
    MatX<GR> stacked(4 * static_cast<Eigen::Index>(members.size()), 4);
    for (std::size_t i = 0; i < members.size(); ++i) stacked.middleRows(4 * static_cast<Eigen::Index>(i), 4) = members[i];
    MatX<GR> sing = kernel(stacked);
    if (sing.cols() == 2) out.double_line = ProjLine::from_basis(sing);
  }
  if (out.plane && out.double_line)
    out.line_in_plane = on_plane(*out.plane, out.double_line->point(0)) && on_plane(*out.plane, out.double_line->point(1));
  return out;
}

std::optional<ProjLine> fat_point_line(const SymmetricPencil& pencil, const VecX<GR>& p) {
  MatX<GR> rows(pencil.n() + 1, 4);
  for (int i = 0; i <= pencil.n(); ++i) rows.row(i) = (pencil.matrix(i) * p).transpose();
  MatX<GR> k = kernel(rows);
  if (k.cols() != 2) return std::nullopt;
  return ProjLine::from_basis(k);
}

BaseLocus web_base_locus(const SymmetricPencil& pencil) {
  std::vector<MultiPoly> gens;
  for (const auto& q : web_generators(pencil))
    if (!q.is_zero()) gens.push_back(q);
  const auto& ys = y_variables();
  ProjectiveSolutions sols;
  try {
    sols = solve_projective(gens, ys);
  } catch (const PositiveDimensional&) {
    throw PositiveDimensional("base locus contains a curve: the symmetroid is reducible");
  }
  BaseLocus out;
  out.residual = sols.residual;
  for (const auto& p : sols.points) {
    BasePoint b;
    b.point = p;
    b.length = projective_local_length(gens, ys, p);
    if (b.length == 2) b.tangent = fat_point_line(pencil, p);
    out.total += b.length;
    out.points.push_back(b);
  }
  out.degree = sols.points.empty() && !sols.residual ? 0 : projective_degree(gens, ys);
  return out;
}

SurfaceLines rank2_surface_lines(const SymmetricPencil& pencil, const ComponentClaim& q, std::mt19937_64& rng,
                                 int budget) {
  const auto& vars = pencil.variables();
  LinearSection sec = linear_section(q.ideal, vars);
  if (sec.basis.cols() != 4 || sec.rest.size() != 1 || sec.rest.front().total_degree() != 2 ||
      !sec.rest.front().is_homogeneous())
    throw std::invalid_argument(q.label + " is not a quadric surface in a 3-space");
  const MultiPoly& f = sec.rest.front();
  const GaussMatrix g = quadric_gram(f, sec.u);
  if (rank(g) != 4) throw std::invalid_argument(q.label + " is not a smooth quadric surface");

  auto form = [&](const VecX<GR>& a, const VecX<GR>& b) { return (a.transpose() * MatX<GR>(g) * b)(0, 0); };
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto pts = sample_points({f}, sec.u, rng, 1, 5);
    if (pts.empty()) continue;
    const VecX<GR> a = pts.front();
    MatX<GR> tangent = kernel(MatX<GR>((MatX<GR>(g) * a).transpose()));
    // Two tangent directions independent modulo a.
    VecX<GR> w1, w2;
    bool found = false;
    for (Eigen::Index i = 0; i < tangent.cols() && !found; ++i)
      for (Eigen::Index j = i + 1; j < tangent.cols() && !found; ++j) {
        MatX<GR> m(4, 3);
        m << a, tangent.col(i), tangent.col(j);
        if (rank(m) == 3) {
          w1 = tangent.col(i);
          w2 = tangent.col(j);
          found = true;
        }
      }
    if (!found) continue;
    const GR c11 = form(w1, w1), c12 = form(w1, w2), c22 = form(w2, w2);
    std::vector<VecX<GR>> dirs;
    if (!c22.is_zero()) {
      UPoly p{{c11, c12 * GR(2), c22}};
      auto roots = gaussian_rational_roots(p);
      for (const auto& b : roots.roots) dirs.push_back(w1 + w2 * b);
    } else if (!c12.is_zero()) {
      dirs.push_back(w2);
      dirs.push_back(w1 * (c12 * GR(2)) - w2 * c11);
    }
    if (dirs.size() != 2) continue;

    const VecX<GR> xa = sec.basis * a;
    auto ruling = [&](const VecX<GR>& d) { return classify_rank2_pencil(gram_at(pencil, xa), gram_at(pencil, sec.basis * d)); };
    SurfaceLines out{ProjLine::through(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 1)),
                     ProjLine::through(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 1)), ruling(dirs[0]), ruling(dirs[1]),
                     xa};
    out.l1 = out.ruling1.line;
    out.l2 = out.ruling2.line;
    return out;
  }
  throw std::runtime_error("no Q(i) ruling of " + q.label + " found; its lines need a field extension");
}

RealityFlags reality_predicates(const ProjLine& l1, const ProjLine& l2) {
  return {lines_meet(l1, l1.conj()), lines_meet(l2, l2.conj()), lines_meet(l1, l2.conj())};
}

bool no_real_points_criterion(const RealityFlags& f) {
  return !f.l1_meets_conj_l2 && (!f.l1_meets_conj_l1 || !f.l2_meets_conj_l2);
}

CyclideVerdict cyclide_check(const SymmetricPencil& pencil, const ComponentClaim& q, std::mt19937_64& rng) {
  CyclideVerdict out{false, true, false, rank2_surface_lines(pencil, q, rng)};
  out.criterion = no_real_points_criterion(reality_predicates(out.lines.l1, out.lines.l2));
  out.applies = pencil.is_real() &&
                std::all_of(q.ideal.begin(), q.ideal.end(), [](const MultiPoly& g) { return g.is_real(); });
  out.consistent = !out.applies || !out.criterion;
  return out;
}

// ---------------------------------------------------------------------------
// Strata of rank-2 quadrics through a base scheme.

const std::vector<std::string>& z_variables() {
  static const std::vector<std::string> zs = indexed_names("z", 6);
  return zs;
}

namespace {

VecX<GR> vec10(const GaussMatrix& g) {
  VecX<GR> v(10);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = r; c < 4; ++c) v(k++) = g(r, c);
  return v;
}

GaussMatrix from_vec10(const VecX<GR>& v) {
  GaussMatrix g;
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = r; c < 4; ++c, ++k) g(r, c) = g(c, r) = v(k);
  return g;
}

// Row of the linear condition p^T G q = 0 on vec10(G).
VecX<GR> bilinear_condition(const VecX<GR>& p, const VecX<GR>& q) {
  VecX<GR> row(10);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = r; c < 4; ++c) row(k++) = r == c ? p(r) * q(r) : p(r) * q(c) + p(c) * q(r);
  return row;
}

MatX<GR> annihilator(std::initializer_list<VecX<GR>> points) {
  MatX<GR> m(static_cast<Eigen::Index>(points.size()), 4);
  Eigen::Index r = 0;
  for (const auto& p : points) m.row(r++) = p.transpose();
  return kernel(m);
}

VecX<GR> random_member(const MatX<GR>& basis, std::mt19937_64& rng) {
  VecX<GR> c(basis.cols());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    int a = small_int(rng, 1, 5);
    c(k) = GR(small_int(rng, 0, 1) ? a : -a);
  }
  return basis * c;
}

class StrataBuilder {
 public:
  explicit StrataBuilder(MatX<GR> basis10) : basis10_(std::move(basis10)) {}

  VecX<GR> coords(const GaussMatrix& g) const {
    auto c = solve_linear(basis10_, vec10(g));
    if (!c) throw std::invalid_argument("quadric does not contain the base scheme");
    return *c;
  }

  // Pairs of planes, one through each of two lines given by their
  // annihilators (4x2 each).
  Stratum segre(std::string label, const MatX<GR>& a, const MatX<GR>& b, std::mt19937_64& rng) const {
    Stratum s;
    s.label = std::move(label);
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) s.span.push_back(sym_product(a.col(r), b.col(c)));
    finish(s, true);
    s.rank2_samples = sampled_rank2(a, b, rng);
    return s;
  }

  // A moving plane from the span `a` together with the fixed plane b.
  Stratum fixed_plane(std::string label, const MatX<GR>& a, const VecX<GR>& b, std::mt19937_64& rng) const {
    Stratum s;
    s.label = std::move(label);
    for (Eigen::Index r = 0; r < a.cols(); ++r) s.span.push_back(sym_product(a.col(r), b));
    finish(s, false);
    s.rank2_samples = sampled_rank2(a, MatX<GR>(b), rng);
    return s;
  }

 private:
  void finish(Stratum& s, bool segre) const {
    const auto& zs = z_variables();
    MatX<GR> m(6, static_cast<Eigen::Index>(s.span.size()));
    for (std::size_t k = 0; k < s.span.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = coords(s.span[k]);
    if (rank(m) != m.cols()) throw std::logic_error(s.label + ": spanning quadrics are dependent");
    auto linear = [&](const VecX<GR>& l) {
      MultiPoly f = MultiPoly(0).extended(zs);
      for (Eigen::Index j = 0; j < 6; ++j)
        if (!l(j).is_zero()) f += MultiPoly::variable(zs[static_cast<std::size_t>(j)]) * l(j);
      return f;
    };
    MatX<GR> forms = kernel(MatX<GR>(m.transpose()));
    for (Eigen::Index k = 0; k < forms.cols(); ++k) s.ideal.push_back(linear(forms.col(k)));
    if (segre) {
      // Coordinates in the span, read off independent rows of m.
      auto pivots = rref(MatX<GR>(m.transpose())).pivots;
      MatX<GR> sub(m.cols(), m.cols());
      MatX<GR> pick = MatX<GR>::Zero(m.cols(), 6);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        sub.row(static_cast<Eigen::Index>(r)) = m.row(pivots[r]);
        pick(static_cast<Eigen::Index>(r), pivots[r]) = GR(1);
      }
      MatX<GR> to_span = inverse(sub) * pick;
      std::vector<MultiPoly> c;
      for (Eigen::Index k = 0; k < 4; ++k) c.push_back(linear(to_span.row(k).transpose()));
      s.ideal.push_back(c[0] * c[3] - c[1] * c[2]);
    }
    s.dimension = projective_dimension(s.ideal, zs);
  }

  static bool sampled_rank2(const MatX<GR>& a, const MatX<GR>& b, std::mt19937_64& rng) {
    for (int k = 0; k < 10; ++k)
      if (rank(sym_product(random_member(a, rng), random_member(b, rng))) != 2) return false;
    return true;
  }

  MatX<GR> basis10_;
};

bool meets_in_line(const Stratum& surface, const Stratum& linear) {
  std::vector<MultiPoly> gens = surface.ideal;
  gens.insert(gens.end(), linear.ideal.begin(), linear.ideal.end());
  IdealBasis gb = buchberger(gens, TermOrder::grevlex(), z_variables());
  if (gb.is_unit() || krull_dimension(gb) != 2) return false;
  for (int d = 1; d <= 4; ++d)
    if (hilbert_function(gb, d) != d + 1) return false;
  return true;
}

// Every rank-2 quadric in the strata space lies on the surface or is
// singular at p1 or p2: each product f*g*h lies in the radical of the
// 3-minor ideal.
std::optional<bool> others_singular(const std::vector<GaussMatrix>& basis, const Stratum& surface,
                                    const VecX<GR>& p1, const VecX<GR>& p2) {
  const auto& zs = z_variables();
  PolyMatrix g = symbolic_combination(basis, zs);
  std::vector<MultiPoly> minors = minors_of(g, 3, zs);
  auto singular_at = [&](const VecX<GR>& p) {
    std::vector<MultiPoly> out;
    for (Eigen::Index r = 0; r < 4; ++r) {
      MultiPoly e = MultiPoly(0).extended(zs);
      for (Eigen::Index c = 0; c < 4; ++c)
        if (!p(c).is_zero()) e += g(r, c) * p(c);
      if (!e.is_zero()) out.push_back(e);
    }
    return out;
  };
  auto s1 = singular_at(p1), s2 = singular_at(p2);
  const std::vector<std::string> vars = merge_variables(zs, {"w"});
  try {
    for (const auto& f : surface.ideal)
      for (const auto& a : s1)
        for (const auto& b : s2) {
          std::vector<MultiPoly> gens;
          for (const auto& m : minors) gens.push_back(m.extended(vars));
          gens.push_back((MultiPoly(1) - MultiPoly::variable("w") * f * a * b).extended(vars));
          if (!buchberger(gens, TermOrder::grevlex(), vars).is_unit()) return false;
        }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return true;
}

}  // namespace

Strata strata_intersections(const BaseLocus& base, std::mt19937_64& rng) {
  Strata out;
  MatX<GR> conditions(4, 10);
  std::vector<VecX<GR>> pts;
  for (const auto& b : base.points) pts.push_back(b.point);
  const bool four = pts.size() == 4 && std::all_of(base.points.begin(), base.points.end(),
                                                   [](const BasePoint& b) { return b.length == 1; });
  out.fat = pts.size() == 2 && std::all_of(base.points.begin(), base.points.end(),
                                           [](const BasePoint& b) { return b.length == 2 && b.tangent; });
  if (base.residual || !(four || out.fat))
    throw std::invalid_argument("strata need four simple base points or two length-2 points");

  std::vector<VecX<GR>> tangents;
  if (four) {
    for (Eigen::Index k = 0; k < 4; ++k) conditions.row(k) = bilinear_condition(pts[k], pts[k]).transpose();
  } else {
    for (std::size_t k = 0; k < 2; ++k) {
      const ProjLine& t = *base.points[k].tangent;
      VecX<GR> dir = rank(stack_rows(t.point(0), pts[k])) == 2 ? t.point(0) : t.point(1);
      tangents.push_back(dir);
      conditions.row(2 * static_cast<Eigen::Index>(k)) = bilinear_condition(pts[k], pts[k]).transpose();
      conditions.row(2 * static_cast<Eigen::Index>(k) + 1) = bilinear_condition(pts[k], dir).transpose();
    }
  }
  MatX<GR> basis10 = kernel(conditions);
  if (basis10.cols() != 6) throw std::invalid_argument("base scheme imposes dependent conditions on quadrics");
  for (Eigen::Index k = 0; k < 6; ++k) out.basis.push_back(from_vec10(basis10.col(k)));
  StrataBuilder build(basis10);

  if (out.fat) {
    MatX<GR> a = annihilator({pts[0], tangents[0]});
    MatX<GR> b = annihilator({pts[1], tangents[1]});
    out.surfaces.push_back(build.segre("X(T1,T2)", a, b, rng));
    out.others_singular = others_singular(out.basis, out.surfaces.front(), pts[0], pts[1]);
    return out;
  }

  MatX<GR> all(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) all.col(k) = pts[static_cast<std::size_t>(k)];
  const auto span = rank(all);
  if (span < 3) throw std::invalid_argument("base points are collinear");
  out.coplanar = span == 3;
  const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairs) {
    std::string label = "X" + std::to_string(p[0] + 1) + std::to_string(p[1] + 1);
    out.surfaces.push_back(build.segre(label, annihilator({pts[p[0]], pts[p[1]]}),
                                       annihilator({pts[p[2]], pts[p[3]]}), rng));
  }
  if (out.coplanar) {
    VecX<GR> plane = kernel(MatX<GR>(all.transpose())).col(0);
    out.linear.push_back(build.fixed_plane("X", MatX<GR>::Identity(4, 4), plane, rng));
    return out;
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<VecX<GR>> others;
    for (int j = 0; j < 4; ++j)
      if (j != i) others.push_back(pts[static_cast<std::size_t>(j)]);
    VecX<GR> plane = annihilator({others[0], others[1], others[2]}).col(0);
    out.linear.push_back(build.fixed_plane("X" + std::to_string(i + 1), annihilator({pts[static_cast<std::size_t>(i)]}),
                                           plane, rng));
  }
  for (const auto& s : out.surfaces)
    for (const auto& l : out.linear) out.meets.push_back({s.label, l.label, meets_in_line(s, l)});
  return out;
}

std::vector<MultiPoly> pull_back(const SymmetricPencil& pencil, const Strata& strata,
                                 const std::vector<MultiPoly>& ideal) {
  MatX<GR> basis10(10, 6);
  for (Eigen::Index k = 0; k < 6; ++k) basis10.col(k) = vec10(strata.basis[static_cast<std::size_t>(k)]);
  const auto& xs = pencil.variables();
  const auto& zs = z_variables();
  std::map<std::string, MultiPoly> images;
  for (const auto& z : zs) images.emplace(z, MultiPoly(0).extended(xs));
  for (int i = 0; i <= pencil.n(); ++i) {
    auto c = solve_linear(basis10, vec10(pencil.matrix(i)));
    if (!c) throw std::invalid_argument("A" + std::to_string(i) + " does not contain the base scheme");
    for (Eigen::Index k = 0; k < 6; ++k)
      if (!(*c)(k).is_zero()) images[zs[static_cast<std::size_t>(k)]] += MultiPoly::variable(xs[static_cast<std::size_t>(i)]) * (*c)(k);
  }
  std::vector<MultiPoly> out;
  for (const auto& f : ideal) {
    MultiPoly g = substitute(f, images).trimmed();
    if (!g.is_zero()) out.push_back(g.extended(merge_variables(g.variables(), xs)));
  }
  return out;
}

}  // namespace symkit
