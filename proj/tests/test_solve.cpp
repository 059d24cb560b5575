#include <doctest.h>

#include "support.hpp"
#include "symkit/solve.hpp"
#include "symkit/univariate.hpp"

using namespace symkit;
using symkit::testing::P;

namespace {

std::vector<MultiPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t));
  return out;
}

VecX<GR> point(std::initializer_list<GR> xs) {
  VecX<GR> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const auto& x : xs) v(k++) = x;
  return v;
}

bool contains(const std::vector<VecX<GR>>& pts, const VecX<GR>& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const VecX<GR>& q) { return q == p; });
}

const std::vector<std::string> kY{"y0", "y1", "y2", "y3"};

}  // namespace

TEST_CASE("univariate arithmetic") {
  UPoly a{{GR(-1), GR(0), GR(1)}};  // t^2 - 1
  UPoly b{{GR(1), GR(1)}};          // t + 1
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == UPoly{{GR(-1), GR(1)}});
  CHECK(gcd(a, b) == b);
  CHECK(squarefree_part(a * a) == a);
  CHECK(to_univariate(P("t^2-1"), "t") == a);
  CHECK_THROWS(to_univariate(P("t*s"), "t"));
}

TEST_CASE("gaussian integer factorization") {
  std::vector<std::pair<GaussInt, int>> f;
  CHECK(factor({mpz_class(5), mpz_class(0)}, f));
  CHECK(f.size() == 2);
  CHECK(factor({mpz_class(12), mpz_class(0)}, f));
  GaussInt prod{1, 0};
  for (const auto& [p, e] : f)
    for (int k = 0; k < e; ++k) prod = prod * p;
  CHECK(prod.norm() == 144);
  CHECK(gcd(GaussInt{5, 0}, GaussInt{2, 1}).norm() == 5);
}

TEST_CASE("roots in Q(i)") {
  auto r = gaussian_rational_roots(to_univariate(P("t^2+1"), "t"));
  CHECK(r.roots.size() == 2);
  CHECK(!r.residual);
  auto s = gaussian_rational_roots(to_univariate(P("(4*t^2+9)*(t-3/5)^2*(t^2-2)"), "t"));
  CHECK(s.roots.size() == 3);
  CHECK(s.residual);
  auto z = gaussian_rational_roots(to_univariate(P("t^3*(t-(2+I)/3)"), "t"));
  CHECK(z.roots.size() == 2);
  CHECK(std::find(z.roots.begin(), z.roots.end(), GR(mpq_class(2, 3), mpq_class(1, 3))) != z.roots.end());
  auto big = gaussian_rational_roots(to_univariate(P("(t-(1001+12*I)/17)*(t+123456/7)"), "t"));
  CHECK(big.roots.size() == 2);
  CHECK(!big.residual);
}

TEST_CASE("affine solving") {
  auto sol = solve_affine(polys({"x^2+y^2-1", "x-y"}), {"x", "y"});
  CHECK(sol.points.empty());
  CHECK(sol.residual);
  auto two = solve_affine(polys({"x^2+y^2-2", "x-y"}), {"x", "y"});
  CHECK(two.points.size() == 2);
  CHECK(!two.residual);
  CHECK_THROWS_AS(solve_affine(polys({"x*y"}), {"x", "y"}), PositiveDimensional);
}

TEST_CASE("projective solving") {
  auto origin = solve_projective(polys({"y0", "y1", "y2"}), kY);
  CHECK(origin.points.size() == 1);
  CHECK(origin.points[0] == point({0, 0, 0, 1}));

  auto conj_pair = solve_projective(polys({"y0^2+y1^2", "y2", "y3"}), kY);
  CHECK(conj_pair.points.size() == 2);
  CHECK(contains(conj_pair.points, point({1, GR::i(), 0, 0})));
  CHECK(contains(conj_pair.points, point({1, -GR::i(), 0, 0})));

  auto web = polys({"y0^2+y1^2+y2^2+y3^2", "y0*y2", "y0*y3", "y1*y2", "y1*y3"});
  auto four = solve_projective(web, kY);
  CHECK(four.points.size() == 4);
  CHECK(!four.residual);
  for (const auto& p : {point({1, GR::i(), 0, 0}), point({1, -GR::i(), 0, 0}), point({0, 0, 1, GR::i()}),
                        point({0, 0, 1, -GR::i()})}) {
    CHECK(contains(four.points, p));
    for (const auto& g : web) CHECK(evaluate(g, to_assignment(kY, p)).is_zero());
    CHECK(projective_local_length(web, kY, p) == 1);
  }
  CHECK(projective_degree(web, kY) == 4);

  CHECK_THROWS_AS(solve_projective(polys({"y0", "y1"}), kY), PositiveDimensional);
}

TEST_CASE("fat points") {
  // two length-2 schemes: y0^2 = y1 = y2 = 0 at [0:0:0:1] and y3 = y2^2 = y1 = 0 at [1:0:0:0]
  auto gens = polys({"y1", "y0*y2", "y0^2*y3", "y2^2*y0", "y0*y3*y2", "y2^2", "y0^2"});
  auto fat = polys({"y1", "y2^2", "y0^2", "y0*y2"});
  auto sols = solve_projective(fat, kY);
  CHECK(sols.points.size() == 1);
  CHECK(projective_local_length(fat, kY, sols.points[0]) == 3);
  CHECK(projective_degree(fat, kY) == 3);
  CHECK(projective_degree(polys({"y1", "y0*y3", "y0^2", "y2*y3"}), kY) >= 1);
  (void)gens;
}
