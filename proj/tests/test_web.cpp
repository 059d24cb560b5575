#include <doctest.h>

#include "support.hpp"
#include "symkit/linalg.hpp"
#include "symkit/random.hpp"
#include "symkit/registry.hpp"
#include "symkit/solve.hpp"
#include "symkit/web.hpp"

using namespace symkit;
using symkit::testing::P;

namespace {

GaussMatrix gram_of(const char* text) {
  MultiPoly q = parse_poly(text).extended(y_variables());
  const auto& ys = y_variables();
  GaussMatrix g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const auto& a = ys[static_cast<std::size_t>(r)];
      const auto& b = ys[static_cast<std::size_t>(c)];
      g(r, c) = r == c ? q.coefficient({{a, 2}}) : q.coefficient({{a, 1}, {b, 1}}) * GR(mpq_class(1, 2));
    }
  return g;
}

VecX<GR> rand_vec(std::mt19937_64& rng, int size = 4) {
  VecX<GR> v(size);
  for (int k = 0; k < size; ++k) v(k) = GR(small_int(rng, -4, 4), small_int(rng, -2, 2));
  return v;
}

GaussMatrix product(const VecX<GR>& a, const VecX<GR>& b) {
  GaussMatrix g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = (a(r) * b(c) + b(r) * a(c)) * GR(mpq_class(1, 2));
  return g;
}

// The quadric restricted to the span of the columns, as a polynomial.
MultiPoly restrict_to(const GaussMatrix& g, const MatX<GR>& span) {
  auto t = indexed_names("t", static_cast<int>(span.cols()));
  std::map<std::string, MultiPoly> images;
  for (int k = 0; k < 4; ++k) {
    MultiPoly e = MultiPoly(0).extended(t);
    for (Eigen::Index j = 0; j < span.cols(); ++j)
      if (!span(k, j).is_zero()) e += MultiPoly::variable(t[static_cast<std::size_t>(j)]) * span(k, j);
    images.emplace(y_variables()[static_cast<std::size_t>(k)], e);
  }
  return substitute(quadratic_form(g), images).trimmed();
}

MatX<GR> stack(const VecX<GR>& a, const VecX<GR>& b) {
  MatX<GR> m(2, 4);
  m << a.transpose(), b.transpose();
  return m;
}

MatX<GR> plane_span(const VecX<GR>& h) { return kernel(MatX<GR>(h.transpose())); }
MatX<GR> line_span(const ProjLine& l) { return l.span().transpose(); }

}  // namespace

TEST_CASE("quadrics of the web") {
  auto ms1 = find_example("max-smooth-1").pencil;
  CHECK(quadric_at(ms1, make_point({1, 0, 0, 0, 0})).poly() == P("y0^2+y1^2+y2^2+y3^2"));
  auto q = quadric_at(ms1, make_point({0, 1, 0, 0, 0}));
  CHECK(q.poly() == P("2*y0*y2"));
  CHECK(q.rank() == 2);

  CHECK(QuadricForm{gram_of("y0^2+y1^2+y2^2")}.singular_locus() == MatX<GR>(VecX<GR>::Unit(4, 3)));
  CHECK(ProjLine::from_basis(QuadricForm{gram_of("2*y0*y2")}.singular_locus()) ==
        ProjLine::cut_out(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 2)));
  auto plane = QuadricForm{gram_of("(y0+I*y1)^2")}.singular_locus();
  CHECK(plane.cols() == 3);
  CHECK(rank(MatX<GR>(make_point({1, GR::i(), 0, 0}).transpose()) * plane) == 0);
}

TEST_CASE("lines are canonical") {
  auto a = make_point({1, GR::i(), 0, 0}), b = make_point({0, 0, 1, 0});
  auto l = ProjLine::through(a, b);
  CHECK(l == ProjLine::through(a * GR(3) + b, b * GR(-2) + a));
  CHECK(l.contains(a + b));
  CHECK_FALSE(l.contains(make_point({0, 0, 0, 1})));
  CHECK_FALSE(l.is_real());
  CHECK(l.conj() == ProjLine::through(make_point({1, -GR::i(), 0, 0}), b));
  CHECK(l.conj().conj() == l);
  CHECK_THROWS_AS(ProjLine::through(a, a * GR(2)), std::invalid_argument);
  CHECK(l.str() == "[1:I:0:0]-[0:0:1:0]");
}

TEST_CASE("line incidence") {
  auto e = [](int k) { return VecX<GR>::Unit(4, k); };
  auto l1 = ProjLine::through(make_point({1, GR::i(), 0, 0}), e(2));
  CHECK(lines_meet(l1, l1.conj()));
  auto real = ProjLine::cut_out(e(0), e(1));
  CHECK(lines_meet(real, real.conj()));
  CHECK_FALSE(lines_meet(ProjLine::cut_out(e(0), e(1)), ProjLine::cut_out(e(2), e(3))));

  std::mt19937_64 rng(11);
  int meeting = 0;
  for (int k = 0; k < 100; ++k) {
    auto p = rand_vec(rng), q = rand_vec(rng), r = rand_vec(rng), s = rand_vec(rng);
    if (k % 2 == 0) s = p * GR(small_int(rng, 1, 3)) + q;  // through a common point of the first line
    if (rank(MatX<GR>(stack(p, q))) < 2 || rank(MatX<GR>(stack(r, s))) < 2) continue;
    auto a = ProjLine::through(p, q), b = ProjLine::through(r, s);
    CHECK(lines_meet(a, b) == lines_meet_by_kernel(a, b));
    meeting += lines_meet(a, b);
  }
  CHECK(meeting >= 40);
}

TEST_CASE("rank-2 pencils: the three cases") {
  auto c1 = classify_rank2_pencil(gram_of("y0*y2"), gram_of("y0*y3"));
  CHECK(c1.kind == 1);
  CHECK(c1.rank1_members == 0);
  CHECK(*c1.plane == VecX<GR>::Unit(4, 0));
  CHECK(c1.line == ProjLine::cut_out(VecX<GR>::Unit(4, 2), VecX<GR>::Unit(4, 3)));
  CHECK_FALSE(c1.line_in_plane);

  auto c2 = classify_rank2_pencil(gram_of("y0^2"), gram_of("y0*y1"));
  CHECK(c2.kind == 2);
  CHECK(c2.rank1_members == 1);
  CHECK(*c2.plane == VecX<GR>::Unit(4, 0));
  CHECK(c2.line == ProjLine::cut_out(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 1)));
  CHECK(c2.line_in_plane);

  auto c3 = classify_rank2_pencil(gram_of("y0^2"), gram_of("y1^2"));
  CHECK(c3.kind == 3);
  CHECK(c3.rank1_members == 2);
  CHECK(c3.line == ProjLine::cut_out(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 1)));

  // Two rank-1 members over an extension: y0^2 + y1^2 and y0*y1.
  CHECK(classify_rank2_pencil(gram_of("y0^2+y1^2"), gram_of("y0*y1")).kind == 3);

  CHECK_THROWS_AS(classify_rank2_pencil(gram_of("y0^2+y1^2+y2^2"), gram_of("y3^2")), std::invalid_argument);
  CHECK_THROWS_AS(classify_rank2_pencil(gram_of("y0*y1"), gram_of("2*y0*y1")), std::invalid_argument);
}

TEST_CASE("trichotomy on constructed pencils") {
  std::mt19937_64 rng(2024);
  int done[4] = {0, 0, 0, 0};
  for (int k = 0; k < 30; ++k) {
    const int want = k % 3 + 1;
    auto h = rand_vec(rng), m1 = rand_vec(rng), m2 = rand_vec(rng);
    MatX<GR> indep(4, 3);
    indep << h, m1, m2;
    if (rank(indep) < 3) continue;
    GaussMatrix q1, q2;
    if (want == 1) {
      q1 = product(h, m1);
      q2 = product(h, m2);
    } else if (want == 2) {
      q1 = product(h, h);
      q2 = product(h, m1);
    } else {
      q1 = product(h, h);
      q2 = product(m1, m1);
    }
    // Hide the generators inside the pencil.
    const GaussMatrix a = q1 * GR(small_int(rng, 1, 3)) + q2, b = q1 - q2 * GR(small_int(rng, 1, 3));
    auto c = classify_rank2_pencil(a, b);
    CHECK(c.kind == want);
    ++done[c.kind];
    for (const GaussMatrix& member : {a, b, GaussMatrix(a + b * GR(3))}) {
      if (c.plane) CHECK(restrict_to(member, plane_span(*c.plane)).is_zero());
      CHECK(restrict_to(member, line_span(c.line)).is_zero());
      if (c.kind > 1) CHECK(rank(MatX<GR>(member) * line_span(c.line)) == 0);  // double along L
    }
    if (c.kind == 1) CHECK_FALSE(c.line_in_plane);
    if (c.kind == 2) CHECK(c.line_in_plane);
  }
  CHECK(done[1] + done[2] + done[3] >= 27);
}

TEST_CASE("rank-2 webs report the observed configuration") {
  std::mt19937_64 rng(5);
  auto h = rand_vec(rng), m1 = rand_vec(rng), m2 = rand_vec(rng), m3 = rand_vec(rng);
  auto w1 = classify_rank2_system({product(h, m1), product(h, m2), product(h, m3)});
  CHECK(w1.kind == 1);
  REQUIRE(w1.plane);
  CHECK(*w1.plane == normalize_projective(h));

  auto w2 = classify_rank2_system({product(h, h), product(h, m1), product(h, m2)});
  CHECK(w2.kind == 2);
  CHECK(w2.rank1_points == 1);
  CHECK(*w2.plane == normalize_projective(h));

  auto w3 = classify_rank2_system({product(h, h), product(h, m1), product(m1, m1)});
  CHECK(w3.kind == 3);
  CHECK(w3.rank1_hypersurface);
  REQUIRE(w3.double_line);
  CHECK(*w3.double_line == ProjLine::cut_out(h, m1));
}

TEST_CASE("web base loci of the examples") {
  auto ms1 = find_example("max-smooth-1").pencil;
  auto base = web_base_locus(ms1);
  CHECK_FALSE(base.residual);
  std::vector<VecX<GR>> want{make_point({1, GR::i(), 0, 0}), make_point({1, -GR::i(), 0, 0}),
                             make_point({0, 0, 1, GR::i()}), make_point({0, 0, 1, -GR::i()})};
  REQUIRE(base.points.size() == 4);
  for (const auto& w : want)
    CHECK(std::any_of(base.points.begin(), base.points.end(), [&](const BasePoint& b) { return b.point == w; }));
  CHECK(base.total == 4);
  CHECK(base.degree == 4);

  auto two = web_base_locus(find_example("two-P3s").pencil);
  REQUIRE(two.points.size() == 2);
  CHECK(two.total == 4);
  for (const auto& b : two.points) {
    CHECK(b.length == 2);
    CHECK(b.tangent);
  }
  CHECK(two.points[0].point == normalize_projective(VecX<GR>(two.points[1].point.unaryExpr([](const GR& z) { return z.conj(); }))));

  CHECK(web_base_locus(find_example("double-P3").pencil).total == 3);

  for (const auto& id : example_ids()) {
    auto pencil = find_example(id).pencil;
    auto bl = web_base_locus(pencil);
    auto gens = web_generators(pencil);
    for (const auto& b : bl.points) {
      auto at = to_assignment(y_variables(), b.point);
      for (const auto& q : gens) CHECK(evaluate(q, at).is_zero());
    }
    CHECK_FALSE(bl.residual);
    CHECK(bl.total == bl.degree);
    CHECK(bl.total == (id == "double-P3" ? 3 : 4));
  }
}

TEST_CASE("a base curve raises the alarm") {
  auto curve = pencil_from_forms(5, {{"x0", "x1", "x3", "x4"}, {"x1", "x2", "x5", "0"}, {"x3", "x5", "0", "0"},
                                     {"x4", "0", "0", "0"}}, true);
  CHECK_THROWS_AS(web_base_locus(curve), PositiveDimensional);
}

TEST_CASE("fat points contain their tangent direction") {
  auto pencil = find_example("two-P3s").pencil;
  for (const auto& b : web_base_locus(pencil).points) {
    REQUIRE(b.tangent);
    for (int k = 0; k < 2; ++k) {
      const auto t = b.tangent->point(k);
      for (const auto& a : pencil.matrices()) {
        CHECK((b.point.transpose() * MatX<GR>(a) * b.point)(0, 0).is_zero());
        CHECK((b.point.transpose() * MatX<GR>(a) * t)(0, 0).is_zero());
      }
    }
  }
}

TEST_CASE("lines of a quadric surface of rank-2 points") {
  std::mt19937_64 rng(3);
  auto ms1 = find_example("max-smooth-1").pencil;
  ComponentClaim q{"Q", {P("x0"), P("x1*x4-x2*x3")}, 2};
  auto lines = rank2_surface_lines(ms1, q, rng);
  auto a = ProjLine::cut_out(VecX<GR>::Unit(4, 0), VecX<GR>::Unit(4, 1));
  auto b = ProjLine::cut_out(VecX<GR>::Unit(4, 2), VecX<GR>::Unit(4, 3));
  CHECK(((lines.l1 == a && lines.l2 == b) || (lines.l1 == b && lines.l2 == a)));
  CHECK(lines.ruling1.kind == 1);
  CHECK(lines.ruling2.kind == 1);

  auto ms2 = find_example("max-smooth-2").pencil;
  ComponentClaim q2{"Q", {P("x1+x3"), P("x0*x4-x2^2-x3^2")}, 2};
  auto l2 = rank2_surface_lines(ms2, q2, rng);
  CHECK_FALSE(l2.l1 == l2.l2);
  // Every sampled member of Q contains L1 and L2.
  for (const auto& p : sample_points(q2.ideal, ms2.variables(), rng, 5)) {
    auto g = gram_at(ms2, p);
    CHECK(rank(g) == 2);
    MultiPoly on1 = restrict_to(g, line_span(l2.l1)), on2 = restrict_to(g, line_span(l2.l2));
    CHECK(on1.is_zero());
    CHECK(on2.is_zero());
  }

  ComponentClaim dp{"double plane", {P("x2+x4"), P("x4^2")}, 2};
  CHECK_THROWS_AS(rank2_surface_lines(find_example("double-plane").pencil, dp, rng), std::invalid_argument);
}

TEST_CASE("reality predicates and the cyclide criterion") {
  auto e = [](int k) { return VecX<GR>::Unit(4, k); };
  auto l1 = ProjLine::through(make_point({1, GR::i(), 0, 0}), make_point({0, 0, 1, GR::i()}));
  auto f = reality_predicates(l1, l1);
  CHECK_FALSE(f.l1_meets_conj_l1);
  CHECK_FALSE(f.l1_meets_conj_l2);
  CHECK(no_real_points_criterion(f));

  auto conj_pair = reality_predicates(l1, l1.conj());
  CHECK(conj_pair.l1_meets_conj_l2);
  CHECK_FALSE(no_real_points_criterion(conj_pair));

  auto real = reality_predicates(ProjLine::cut_out(e(0), e(1)), ProjLine::cut_out(e(2), e(3)));
  CHECK(real.l1_meets_conj_l1);
  CHECK(real.l2_meets_conj_l2);
  CHECK_FALSE(real.l1_meets_conj_l2);
  CHECK_FALSE(no_real_points_criterion(real));

  std::mt19937_64 rng(8);
  ComponentClaim q{"Q", {P("x0"), P("x1*x4-x2*x3")}, 2};
  auto v = cyclide_check(find_example("max-smooth-1").pencil, q, rng);
  CHECK(v.applies);
  CHECK_FALSE(v.criterion);
  CHECK(v.consistent);
}

TEST_CASE("strata through four general points") {
  std::mt19937_64 rng(13);
  auto ms1 = find_example("max-smooth-1").pencil;
  auto strata = strata_intersections(web_base_locus(ms1), rng);
  CHECK_FALSE(strata.coplanar);
  REQUIRE(strata.surfaces.size() == 3);
  REQUIRE(strata.linear.size() == 4);
  for (const auto& s : strata.surfaces) {
    CHECK(s.dimension == 2);
    CHECK(s.rank2_samples);
  }
  for (const auto& l : strata.linear) {
    CHECK(l.dimension == 2);
    CHECK(l.rank2_samples);
  }
  CHECK(strata.meets.size() == 12);
  for (const auto& m : strata.meets) CHECK(m.is_line);

  // The web is a hyperplane in the strata space: one surface is Q, the
  // other two cut it in the extra conics.
  const auto& xs = ms1.variables();
  std::vector<MultiPoly> q{P("x0"), P("x1*x4-x2*x3")};
  std::vector<MultiPoly> c1{P("x1+x4"), P("x2-x3"), P("x0^2-x1^2-x3^2")};
  std::vector<MultiPoly> c2{P("x1-x4"), P("x2+x3"), P("x0^2-x1^2-x3^2")};
  int quadric = 0, conic1 = 0, conic2 = 0;
  for (const auto& s : strata.surfaces) {
    auto back = pull_back(ms1, strata, s.ideal);
    int dim = projective_dimension(back, xs);
    if (dim == 2) quadric += ideals_equal(back, q);
    if (dim == 1) {
      conic1 += ideals_equal(back, c1);
      conic2 += ideals_equal(back, c2);
    }
  }
  CHECK(quadric == 1);
  CHECK(conic1 == 1);
  CHECK(conic2 == 1);
  // The planes meet the web only inside Q.
  for (const auto& l : strata.linear) CHECK(ideal_contains_all(q, pull_back(ms1, strata, l.ideal)));
}

TEST_CASE("strata through coplanar points") {
  std::mt19937_64 rng(14);
  BaseLocus base;
  for (auto p : {make_point({1, 0, 0, 0}), make_point({0, 1, 0, 0}), make_point({0, 0, 1, 0}), make_point({1, 1, 1, 0})})
    base.points.push_back({p, 1, std::nullopt});
  auto strata = strata_intersections(base, rng);
  CHECK(strata.coplanar);
  CHECK(strata.surfaces.size() == 3);
  REQUIRE(strata.linear.size() == 1);
  CHECK(strata.linear.front().dimension == 3);
  CHECK(strata.linear.front().rank2_samples);
  for (const auto& s : strata.surfaces) CHECK(s.dimension == 2);
}

TEST_CASE("strata through two fat points") {
  std::mt19937_64 rng(15);
  auto pencil = find_example("two-P3s").pencil;
  auto strata = strata_intersections(web_base_locus(pencil), rng);
  CHECK(strata.fat);
  REQUIRE(strata.surfaces.size() == 1);
  CHECK(strata.surfaces.front().dimension == 2);
  CHECK(strata.surfaces.front().rank2_samples);
  REQUIRE(strata.others_singular);
  CHECK(*strata.others_singular);
  // The web fills the whole strata space, so the surface pulls back to the
  // quadric surface of rank-2 points.
  auto back = pull_back(pencil, strata, strata.surfaces.front().ideal);
  CHECK(ideals_equal(back, {P("x0-x4"), P("x1"), P("x2^2+x3^2-x4*x5")}));
}

TEST_CASE("unsupported base configurations") {
  std::mt19937_64 rng(16);
  BaseLocus three;
  for (int k = 0; k < 3; ++k) three.points.push_back({VecX<GR>::Unit(4, k), 1, std::nullopt});
  CHECK_THROWS_AS(strata_intersections(three, rng), std::invalid_argument);
}
