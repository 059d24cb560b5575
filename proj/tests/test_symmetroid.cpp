#include <doctest.h>

#include <chrono>

#include "support.hpp"
#include "symkit/component.hpp"
#include "symkit/linalg.hpp"
#include "symkit/registry.hpp"
#include "symkit/solve.hpp"

using namespace symkit;
using symkit::testing::P;

namespace {

std::vector<MultiPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t));
  return out;
}

SymmetricPencil diagonal_pencil() {
  return pencil_from_forms(3, {{"x0", "0", "0", "0"}, {"0", "x1", "0", "0"}, {"0", "0", "x2", "0"},
                               {"0", "0", "0", "x3"}});
}

}  // namespace

TEST_CASE("gram matrices") {
  auto ms1 = find_example("max-smooth-1").pencil;
  CHECK(gram_at(ms1, make_point({1, 0, 0, 0, 0})) == GaussMatrix::Identity());
  auto p = make_point({2, GR::i(), -1, 3, 0});
  CHECK(gram_at(ms1, p * GR(7)) == gram_at(ms1, p) * GR(7));
  CHECK(is_symmetric(MatX<GR>(gram_at(ms1, p))));
  CHECK_THROWS_AS(gram_at(ms1, make_point({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(gram_at(ms1, make_point({0, 0, 0, 0, 0})), std::invalid_argument);

  // Off the double plane, so full rank (sympy agrees).
  auto dp = find_example("double-plane").pencil;
  CHECK(rank_at(dp, make_point({0, 0, 1, 0, -1})) == 4);
}

TEST_CASE("ranks at known points") {
  CHECK(rank_at(find_example("max-smooth-1").pencil, make_point({0, 1, 0, 0, 0})) == 2);
  CHECK(rank_at(find_example("double-plane").pencil, make_point({1, 1, 0, 1, 0})) == 1);
  CHECK(rank_at(find_example("double-P3").pencil, make_point({1, 0, 0, 1, 1, 0})) == 1);
}

TEST_CASE("quartics") {
  auto d = symmetroid_quartic(pencil_from_forms(0, {{"x0", "0", "0", "0"}, {"0", "x0", "0", "0"},
                                                    {"0", "0", "x0", "0"}, {"0", "0", "0", "x0"}}));
  CHECK(d.f == P("x0^4"));
  auto two = symmetroid_quartic(find_example("two-P3s").pencil).f;
  CHECK(two.is_real());
  CHECK(two.conj() == two);
  CHECK(two == P("-x0*x2^2*x5-x0*x3^2*x5+x0*x4*x5^2-x1^2*x5^2+x2^4+2*x2^2*x3^2-x2^2*x4*x5+x3^4-x3^2*x4*x5"));
  for (const auto& id : example_ids()) {
    auto f = symmetroid_quartic(find_example(id).pencil);
    CHECK(!f.degenerate);
    CHECK(f.f.is_homogeneous());
    CHECK(f.f.total_degree() == 4);
    MultiPoly euler;
    for (const auto& v : f.f.variables()) euler += MultiPoly::variable(v) * diff(f.f, v);
    CHECK(euler == MultiPoly(4) * f.f);
  }
  std::vector<GaussMatrix> zero(2, GaussMatrix::Zero());
  zero[0](0, 0) = 1;
  CHECK_THROWS_AS(SymmetricPencil{zero}, InvalidPencil);
  CHECK(symmetroid_quartic(SymmetricPencil(zero, true)).degenerate);
}

TEST_CASE("minor ideals") {
  auto dp3 = find_example("double-P3").pencil;
  auto m3 = minor_ideal(dp3, 3);
  CHECK(m3.generators.size() == 1);
  CHECK(m3.generators[0] == symmetroid_quartic(dp3).f);
  CHECK(minor_ideal(dp3, 2).generators.size() <= 36);

  auto dp = find_example("double-plane").pencil;
  for (const auto& g : minor_ideal(dp, 2).generators) CHECK(ideal_contains(g, polys({"x2+x4", "x4^2"})));
  for (const auto& g : minor_ideal(dp3, 1).generators)
    CHECK(ideal_contains(g, polys({"x1", "x2", "x5", "x0*x4-x3^2"})));
  CHECK_THROWS(minor_ideal(dp, 4));
}

TEST_CASE("jacobian ideals") {
  auto dp3 = find_example("double-P3").pencil;
  auto jac = jacobian_ideal(dp3);
  CHECK(jac.generators.size() == 6);
  for (const auto& g : jac.generators) CHECK(ideal_contains(g, polys({"x2^2", "x5"})));
  auto ms2 = find_example("max-smooth-2").pencil;
  for (const auto& g : jacobian_ideal(ms2).generators)
    CHECK(ideal_contains(g, polys({"x1+x3", "x0*x4-x2^2-x3^2"})));
}

TEST_CASE("cone test") {
  CHECK(cone_test(find_example("max-smooth-1").pencil).empty());
  CHECK(cone_test(find_example("double-plane").pencil).empty());
  auto ms1 = find_example("max-smooth-1").pencil;
  auto mats = ms1.matrices();
  mats.push_back(GaussMatrix::Zero());
  auto cone = cone_test(SymmetricPencil(mats));
  REQUIRE(cone.size() == 1);
  CHECK(normalize_projective(cone[0]) == make_point({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("pencil file format") {
  auto dp3 = find_example("double-P3").pencil;
  auto text = format_pencil(dp3);
  auto back = parse_pencil(text);
  CHECK(back.matrices() == dp3.matrices());
  CHECK(format_pencil(back) == text);

  auto diag = parse_pencil("# diagonal\nn=3\nA0:\n1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"
                           "A1: 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0\n"
                           "A2: 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0\n"
                           "A3: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n");
  CHECK(diag.matrices() == diagonal_pencil().matrices());
  CHECK(diag.is_real());

  auto bad_line = [](const std::string& text) {
    try {
      parse_pencil(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(bad_line("n=1\nA0:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 x\n") == 6);
  CHECK(bad_line("m=1\n") == 1);
  CHECK(bad_line("n=1\n\nA0:\n1 2 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n") == 3);
  CHECK(bad_line("n=1\nA2:\n") == 2);
  CHECK(bad_line("n=1\nA0:\n1 0 0 0\n") == 3);
}

TEST_CASE("singular_along on known components") {
  std::mt19937_64 rng(1);
  auto ms1 = find_example("max-smooth-1").pencil;
  auto c1 = singular_along(ms1, {"Q", polys({"x0", "x1*x4-x2*x3"}), 2}, rng);
  CHECK(c1.status == Status::pass);
  CHECK(c1.witness["generic_rank"] == 2);

  auto two = find_example("two-P3s").pencil;
  auto c2 = singular_along(two, {"P3-", polys({"x2-I*x3", "x5"}), 3}, rng);
  CHECK(c2.status == Status::pass);

  auto dp3 = find_example("double-P3").pencil;
  CHECK(singular_along(dp3, {"H1", polys({"x0", "x1", "x2"}), std::nullopt}, rng).status == Status::pass);
  CHECK(singular_along(dp3, {"H1", polys({"x0", "x1", "x2"}), 2}, rng).status == Status::pass);
  // wrong rank claims fail
  CHECK(singular_along(ms1, {"Q", polys({"x0", "x1*x4-x2*x3"}), 1}, rng).status == Status::fail);
  CHECK(singular_along(ms1, {"x0", polys({"x0"}), std::nullopt}, rng).status == Status::fail);
}

TEST_CASE("rank-2 locus multiplicities") {
  std::mt19937_64 rng(5);
  auto dp3 = find_example("double-P3").pencil;
  auto report = rank_locus_report(dp3, 2,
                                  {{"H1", polys({"x0", "x1", "x2"}), 2},
                                   {"H2", polys({"x2", "x4", "x5"}), 2},
                                   {"H3", polys({"x1", "x2", "x5"}), 2}},
                                  rng);
  REQUIRE(report.size() == 3);
  std::vector<long> slice, line;
  for (const auto& e : report) {
    CHECK(e.contained);
    slice.push_back(e.multiplicity.slice);
    line.push_back(e.multiplicity.line);
  }
  CHECK(slice == std::vector<long>{1, 3, 6});
  CHECK(line == std::vector<long>{1, 1, 1});

  auto dp = find_example("double-plane").pencil;
  auto dbl = rank_locus_report(dp, 2, {{"double plane", polys({"x2+x4", "x4^2"}), 2}}, rng);
  CHECK(dbl[0].contained);
  CHECK(dbl[0].multiplicity.slice == 2);

  auto diag = rank_locus_report(diagonal_pencil(), 2,
                                {{"01", polys({"x0", "x1"}), 2}, {"02", polys({"x0", "x2"}), 2},
                                 {"03", polys({"x0", "x3"}), 2}, {"12", polys({"x1", "x2"}), 2},
                                 {"13", polys({"x1", "x3"}), 2}, {"23", polys({"x2", "x3"}), 2}},
                                rng);
  for (const auto& e : diag) {
    CHECK(e.contained);
    CHECK(e.multiplicity.slice == 1);
  }
  auto not_in = rank_locus_report(diagonal_pencil(), 2, {{"0", polys({"x0"}), 2}}, rng);
  CHECK(!not_in[0].contained);
}

TEST_CASE("rank equals minor vanishing at random points") {
  std::mt19937_64 rng(17);
  for (const auto& id : example_ids()) {
    auto pencil = find_example(id).pencil;
    std::vector<IdealBasis> minors;
    for (int k = 1; k <= 3; ++k) minors.push_back(minor_ideal(pencil, k));
    // half the points come from rank-deficient loci so both directions are exercised
    std::vector<VecX<GR>> pts;
    for (int t = 0; t < 25; ++t) {
      VecX<GR> v(pencil.n() + 1);
      for (int i = 0; i <= pencil.n(); ++i) v(i) = symkit::testing::random_gr(rng, 4, t % 2 == 0);
      if (is_zero_vector(v)) v(0) = 1;
      pts.push_back(v);
    }
    auto low = sample_points(minor_ideal(pencil, 2).generators, pencil.variables(), rng, 25, 60);
    pts.insert(pts.end(), low.begin(), low.end());
    for (const auto& p : pts) {
      int r = rank_at(pencil, p);
      auto at = to_assignment(pencil.variables(), p);
      for (int k = 1; k <= 3; ++k) {
        bool vanish = std::all_of(minors[static_cast<std::size_t>(k - 1)].generators.begin(),
                                  minors[static_cast<std::size_t>(k - 1)].generators.end(),
                                  [&](const MultiPoly& g) { return evaluate(g, at).is_zero(); });
        CHECK((r <= k) == vanish);
      }
      if (pencil.is_real()) CHECK(rank_at(pencil, p.unaryExpr([](const GR& z) { return z.conj(); })) == r);
    }
  }
}

TEST_CASE("kernel of a corank-1 singular point is a base point") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (const auto& [id, ideal] : std::vector<std::pair<std::string, std::vector<MultiPoly>>>{
           {"two-P3s", polys({"x2-I*x3", "x5"})},
           {"two-P3s", polys({"x2+I*x3", "x5"})},
           {"double-P3", polys({"x2", "x5"})}}) {
    auto pencil = find_example(id).pencil;
    for (const auto& p : sample_points(ideal, pencil.variables(), rng, 5)) {
      auto k = kernel_base_point_check(pencil, p);
      if (!k.applicable) continue;
      ++checked;
      CHECK(k.holds);
    }
  }
  CHECK(checked >= 10);
}
