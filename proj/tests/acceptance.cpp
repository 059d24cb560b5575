// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "symkit/commands.hpp"
#include "symkit/component.hpp"
#include "symkit/linalg.hpp"
#include "symkit/random.hpp"
#include "symkit/registry.hpp"
#include "symkit/solve.hpp"
#include "symkit/spectra.hpp"
#include "symkit/web.hpp"

using namespace symkit;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

const Check& check_of(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::out_of_range("no check " + id);
}

std::string failing(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (c.status != Status::pass) out += " " + c.id + "=" + to_string(c.status) + " (" + c.detail + ")";
  return out;
}

Outcome whole_report(const std::string& id, const std::vector<std::string>& required) {
  auto r = cmd_verify(id, 1);
  for (const auto& name : required) check_of(r, name);
  if (!r.all_pass()) return {false, id + ":" + failing(r)};
  return {true, id + ": " + std::to_string(r.checks.size()) + " checks"};
}

SymmetricPencil fixture(const std::string& name) {
  std::ifstream in(std::string(SYMKIT_TEST_DATA) + "/" + name);
  std::stringstream text;
  text << in.rdbuf();
  return parse_pencil(text.str());
}

VecX<GaussianRational> rand_vec(std::mt19937_64& rng) {
  VecX<GaussianRational> v(4);
  for (int k = 0; k < 4; ++k) v(k) = GaussianRational(small_int(rng, -4, 4), small_int(rng, -2, 2));
  return v;
}

GaussMatrix product(const VecX<GaussianRational>& a, const VecX<GaussianRational>& b) {
  GaussMatrix g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = (a(r) * b(c) + b(r) * a(c)) * GaussianRational(mpq_class(1, 2));
  return g;
}

bool vanishes_on(const GaussMatrix& g, const MatX<GaussianRational>& span) {
  return rank(MatX<GaussianRational>(span.transpose() * g * span)) == 0;
}

Outcome trichotomy(std::mt19937_64& rng) {
  int agreed = 0;
  for (int k = 0; k < 30; ++k) {
    const int want = k % 3 + 1;
    VecX<GaussianRational> h, m1, m2;
    MatX<GaussianRational> indep(4, 3);
    do {
      h = rand_vec(rng), m1 = rand_vec(rng), m2 = rand_vec(rng);
      indep << h, m1, m2;
    } while (rank(indep) < 3);
    GaussMatrix q1 = want == 1 ? product(h, m1) : product(h, h);
    GaussMatrix q2 = want == 1 ? product(h, m2) : want == 2 ? product(h, m1) : product(m1, m1);
    const GaussMatrix a = q1 * GaussianRational(2) + q2, b = q1 - q2 * GaussianRational(3);
    auto c = classify_rank2_pencil(a, b);
    bool ok = c.kind == want && c.line_in_plane == (want == 2) && c.plane.has_value() == (want < 3);
    MatX<GaussianRational> line = c.line.span().transpose();
    for (const GaussMatrix& member : {a, b, GaussMatrix(a + b * GaussianRational(5))}) {
      if (c.plane) ok = ok && vanishes_on(member, kernel(MatX<GaussianRational>(c.plane->transpose())));
      ok = ok && vanishes_on(member, line);
      if (want > 1) ok = ok && rank(MatX<GaussianRational>(member * line)) == 0;
    }
    agreed += ok;
  }
  return {agreed == 30, std::to_string(agreed) + "/30 pencils"};
}

Outcome kernel_points(std::mt19937_64& rng) {
  int applicable = 0, held = 0;
  const std::vector<std::pair<std::string, std::vector<const char*>>> loci{
      {"two-P3s", {"x2-I*x3", "x5"}}, {"two-P3s", {"x2+I*x3", "x5"}}, {"double-P3", {"x2", "x5"}}};
  for (const auto& [id, gens] : loci) {
    auto pencil = find_example(id).pencil;
    std::vector<MultiPoly> ideal;
    for (const char* g : gens) ideal.push_back(parse_poly(g));
    for (const auto& p : sample_points(ideal, pencil.variables(), rng, 8)) {
      auto k = kernel_base_point_check(pencil, p);
      applicable += k.applicable;
      held += k.applicable && k.holds;
    }
  }
  return {applicable >= 10 && held == applicable,
          std::to_string(held) + "/" + std::to_string(applicable) + " corank-1 singular points"};
}

Outcome rank_minors(std::mt19937_64& rng) {
  long points = 0, agree = 0;
  for (const auto& id : example_ids()) {
    auto pencil = find_example(id).pencil;
    std::vector<IdealBasis> minors;
    for (int k = 1; k <= 3; ++k) minors.push_back(minor_ideal(pencil, k));
    auto pts = sample_points(minor_ideal(pencil, 2).generators, pencil.variables(), rng, 25, 60);
    pts.resize(std::min<std::size_t>(pts.size(), 25));
    while (pts.size() < 50) {
      VecX<GaussianRational> v(pencil.n() + 1);
      for (int i = 0; i <= pencil.n(); ++i) v(i) = GaussianRational(small_int(rng, -4, 4), small_int(rng, -2, 2));
      if (!is_zero_vector(v)) pts.push_back(v);
    }
    for (const auto& p : pts) {
      int r = rank_at(pencil, p);
      auto at = to_assignment(pencil.variables(), p);
      bool ok = true;
      for (int k = 1; k <= 3; ++k) {
        const auto& g = minors[static_cast<std::size_t>(k - 1)].generators;
        bool vanish = std::all_of(g.begin(), g.end(), [&](const MultiPoly& m) { return evaluate(m, at).is_zero(); });
        ok = ok && (r <= k) == vanish;
      }
      ++points;
      agree += ok;
    }
  }
  return {agree == points, std::to_string(agree) + "/" + std::to_string(points) + " points"};
}

Outcome euler() {
  std::vector<SymmetricPencil> all;
  for (const auto& id : example_ids()) all.push_back(find_example(id).pencil);
  for (const char* f : {"diagonal.pencil", "padded.pencil", "base_curve.pencil"}) all.push_back(fixture(f));
  int ok = 0;
  for (const auto& p : all) {
    auto q = symmetroid_quartic(p);
    MultiPoly e;
    for (const auto& v : p.variables()) e += MultiPoly::variable(v) * diff(q.f, v);
    ok += !q.degenerate && e == q.f * MultiPoly(GaussianRational(4));
  }
  return {ok == static_cast<int>(all.size()), std::to_string(ok) + "/" + std::to_string(all.size()) + " quartics"};
}

Outcome sylvester(std::mt19937_64& rng) {
  int agree = 0;
  for (int k = 0; k < 200; ++k) {
    GaussMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) m(r, c) = m(c, r) = GaussianRational(mpq_class(small_int(rng, -6, 6), small_int(rng, 1, 4)));
    // tilt half of them towards definiteness
    if (k % 2) m += GaussMatrix::Identity() * GaussianRational(small_int(rng, 4, 12));
    agree += (definiteness(m).kind == Definiteness::positive_definite) == sylvester_positive_definite(m);
  }
  return {agree == 200, std::to_string(agree) + "/200 matrices"};
}

Outcome property_suites() {
  std::mt19937_64 rng(8);
  std::vector<std::pair<std::string, Outcome>> parts{{"trichotomy", trichotomy(rng)},
                                                     {"kernel points", kernel_points(rng)},
                                                     {"rank vs minors", rank_minors(rng)},
                                                     {"euler", euler()},
                                                     {"sylvester", sylvester(rng)}};
  Outcome out{true, ""};
  for (const auto& [name, o] : parts) {
    out.ok = out.ok && o.ok;
    out.detail += (out.detail.empty() ? "" : "; ") + name + " " + o.detail;
  }
  return out;
}

Outcome negative_controls() {
  bool cone = cone_test(fixture("padded.pencil")).size() == 2;
  bool alarm = false;
  try {
    web_base_locus(fixture("base_curve.pencil"));
  } catch (const PositiveDimensional&) {
    alarm = true;
  }
  auto neg = lambda_family(GaussianRational(-1));
  GaussMatrix indefinite = GaussMatrix::Zero();
  indefinite(0, 0) = -1;
  indefinite(1, 1) = 1;
  bool rejects = !verify_infeasibility_certificate(neg, GaussMatrix::Zero()) &&
                 !verify_infeasibility_certificate(neg, indefinite);
  return {cone && alarm && rejects, std::string("cone ") + (cone ? "found" : "missed") + ", alarm " +
                                        (alarm ? "raised" : "silent") + ", bad certificates " +
                                        (rejects ? "rejected" : "accepted")};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 2,
       [] {
         auto c = check_of(cmd_verify("double-P3", 1), "jacobian_in_double_3space");
         return Outcome{c.status == Status::pass, "double-P3 " + c.detail};
       }},
      {2, 10,
       [] {
         auto c = check_of(cmd_verify("double-P3", 1), "rank2_multiplicities");
         return Outcome{c.status == Status::pass, "double-P3 H1,H2,H3 contained; " + c.detail};
       }},
      {3, 10,
       [] {
         return whole_report("max-smooth-1", {"singular_along_Q", "base_locus", "extra_conics",
                                              "positive_definite_point", "configuration"});
       }},
      {4, 10, [] { return whole_report("max-smooth-2", {"singular_along_Q", "configuration"}); }},
      {5, 10,
       [] {
         auto a = whole_report("lambda-family(1)", {"positive_definite_point", "conic_real_points"});
         auto b = whole_report("lambda-family(-1)", {"infeasibility_certificate", "conic_real_points"});
         return Outcome{a.ok && b.ok, a.detail + "; " + b.detail};
       }},
      {6, 10,
       [] {
         return whole_report("two-P3s", {"singular_along_P3_minus", "singular_along_P3_plus", "singular_along_Q",
                                         "base_locus", "real_points_of_Q_semidefinite"});
       }},
      {7, 5, [] { return whole_report("double-plane", {"double_plane_in_rank2_locus", "rank1_conic"}); }},
      {8, 30, property_suites},
      {9, 5, negative_controls},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << o.detail << " (" << secs
              << " s, limit " << c.limit << " s)\n";
  }
  return all ? 0 : 1;
}
