#include "symkit/commands.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "symkit/component.hpp"
#include "symkit/linalg.hpp"
#include "symkit/registry.hpp"
#include "symkit/solve.hpp"
#include "symkit/spectra.hpp"
#include "symkit/web.hpp"

namespace symkit {

namespace {

using GR = GaussianRational;
using Ideal = std::vector<MultiPoly>;
using nlohmann::json;

Ideal polys(std::initializer_list<const char*> texts) {
  Ideal out;
  for (const char* t : texts) out.push_back(parse_poly(t));
  return out;
}

std::string ideal_str(const Ideal& ideal) {
  std::string s = "<";
  for (std::size_t k = 0; k < ideal.size(); ++k) s += (k ? ", " : "") + ideal[k].str();
  return s + ">";
}

std::string pt(const VecX<GR>& p) { return point_str(normalize_projective(p)); }

json points_json(const std::vector<VecX<GR>>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(pt(p));
  return out;
}

void pass_if(Check& c, bool ok, const std::string& detail = "") {
  c.status = ok ? Status::pass : Status::fail;
  c.detail = detail;
}

// Shared state of one verification run.
struct Run {
  VerificationReport report;
  std::mt19937_64 rng;
  SymmetricPencil pencil;

  Run(const std::string& id, std::uint64_t seed, SymmetricPencil p) : rng(seed), pencil(std::move(p)) {
    report.id = id;
    report.seed = seed;
    report.version = tool_version();
  }

  void add(const std::string& id, const std::function<void(Check&)>& body) {
    report.checks.push_back(timed_check(id, body));
  }
};

void quartic_check(Run& run, const std::string& note = "") {
  run.add("quartic", [&](Check& c) {
    auto q = symmetroid_quartic(run.pencil);
    MultiPoly euler;
    for (const auto& v : run.pencil.variables()) euler += MultiPoly::variable(v) * diff(q.f, v);
    const bool homogeneous_quartic = !q.degenerate && euler == q.f * MultiPoly(GR(4));
    c.witness["f"] = q.f.str();
    c.witness["euler_relation"] = homogeneous_quartic;
    if (!note.empty()) c.witness["note"] = note;
    pass_if(c, homogeneous_quartic, q.degenerate ? "determinant vanishes identically" : "nonzero quartic");
  });
}

void singular_check(Run& run, const std::string& id, const ComponentClaim& claim) {
  run.add(id, [&](Check& c) {
    auto r = singular_along(run.pencil, claim, run.rng);
    c.status = r.status;
    c.detail = r.detail;
    c.witness = r.witness;
  });
}

void jacobian_check(Run& run, const std::string& id, const Ideal& ideal) {
  run.add(id, [&](Check& c) {
    auto jac = jacobian_ideal(run.pencil);
    int reduced = 0;
    for (const auto& g : jac.generators) reduced += ideal_contains(g, ideal);
    c.witness["ideal"] = ideal_str(ideal);
    c.witness["partials_reduced_to_zero"] = reduced;
    c.witness["partials"] = jac.generators.size();
    pass_if(c, reduced == static_cast<int>(jac.generators.size()),
            std::to_string(reduced) + "/" + std::to_string(jac.generators.size()) + " partials in " +
                ideal_str(ideal));
  });
}

// Expected points are compared projectively; an empty list skips that part.
void base_locus_check(Run& run, const std::string& id, const std::vector<VecX<GR>>& expected, long total,
                      std::optional<long> point_length = std::nullopt) {
  run.add(id, [&, expected, total, point_length](Check& c) {
    auto base = web_base_locus(run.pencil);
    std::set<std::string> got, want;
    json pts = json::array();
    bool lengths_ok = true;
    for (const auto& b : base.points) {
      got.insert(pt(b.point));
      pts.push_back({{"point", pt(b.point)}, {"length", b.length}});
      if (point_length) lengths_ok = lengths_ok && b.length == *point_length;
    }
    for (const auto& p : expected) want.insert(pt(p));
    c.witness["points"] = pts;
    c.witness["total_length"] = base.total;
    c.witness["degree"] = base.degree;
    c.witness["residual"] = base.residual;
    const bool ok = (expected.empty() || got == want) && lengths_ok && base.total == total &&
                    base.degree == total && !base.residual;
    pass_if(c, ok, std::to_string(base.points.size()) + " points of total length " + std::to_string(base.total));
  });
}

// The strata of rank-2 quadrics through the base scheme, pulled back to the
// pencil, split into surfaces (dimension 2) and conics (dimension 1).
struct PulledBack {
  std::vector<ComponentClaim> conics;
  std::vector<Ideal> surfaces;
};

PulledBack pulled_back_strata(const SymmetricPencil& pencil, const Strata& strata) {
  PulledBack out;
  int k = 0;
  for (const auto& s : strata.surfaces) {
    auto back = pull_back(pencil, strata, s.ideal);
    auto reduced = buchberger(back, TermOrder::grevlex(), pencil.variables()).generators;
    int dim = projective_dimension(reduced, pencil.variables());
    if (dim == 1) out.conics.push_back({"C" + std::to_string(++k), reduced, 2});
    if (dim == 2) out.surfaces.push_back(reduced);
  }
  return out;
}

void extra_conics_check(Run& run, std::vector<ComponentClaim>& conics, const Ideal& q,
                        const std::vector<ComponentClaim>& expected = {}) {
  run.add("extra_conics", [&](Check& c) {
    auto strata = strata_intersections(web_base_locus(run.pencil), run.rng);
    auto back = pulled_back_strata(run.pencil, strata);
    conics = back.conics;
    json list = json::array();
    bool singular = true;
    for (const auto& conic : conics) {
      auto s = singular_along(run.pencil, conic, run.rng);
      singular = singular && s.status == Status::pass;
      list.push_back({{"ideal", ideal_str(conic.ideal)}, {"singular_along", to_string(s.status)}});
    }
    bool q_found = std::any_of(back.surfaces.begin(), back.surfaces.end(),
                               [&](const Ideal& s) { return ideals_equal(s, q); });
    int matched = 0;
    for (const auto& e : expected)
      matched += std::any_of(conics.begin(), conics.end(),
                             [&](const ComponentClaim& got) { return ideals_equal(got.ideal, e.ideal); });
    c.witness["conics"] = list;
    c.witness["quadric_among_strata"] = q_found;
    c.witness["strata_surfaces"] = strata.surfaces.size();
    c.witness["linear_strata"] = strata.linear.size();
    if (!expected.empty()) c.witness["match_written_conics"] = matched;
    const bool ok = conics.size() == 2 && singular && q_found && matched == static_cast<int>(expected.size());
    pass_if(c, ok, std::to_string(conics.size()) + " conics of rank-2 points besides the quadric");
  });
}

void surface_lines_check(Run& run, const ComponentClaim& q) {
  run.add("surface_lines", [&](Check& c) {
    auto lines = rank2_surface_lines(run.pencil, q, run.rng);
    // L1 u L2 lies in the base locus of the quadric of every point of Q.
    bool contained = true;
    auto pts = sample_points(q.ideal, run.pencil.variables(), run.rng, 3);
    for (const auto& x : pts) {
      auto form = quadric_at(run.pencil, x).poly();
      for (const auto* l : {&lines.l1, &lines.l2})
        for (const auto& y : {l->point(0), l->point(1), VecX<GR>(l->point(0) + l->point(1))})
          contained = contained && evaluate(form, to_assignment(y_variables(), y)).is_zero();
    }
    c.witness["l1"] = lines.l1.str();
    c.witness["l2"] = lines.l2.str();
    c.witness["samples"] = points_json(pts);
    pass_if(c, !(lines.l1 == lines.l2) && contained && pts.size() >= 3,
            "L1 = " + lines.l1.str() + ", L2 = " + lines.l2.str());
  });
  run.add("cyclide_criterion", [&](Check& c) {
    auto v = cyclide_check(run.pencil, q, run.rng);
    c.witness["criterion"] = v.criterion;
    c.witness["applies"] = v.applies;
    pass_if(c, v.consistent,
            std::string("no-real-points criterion ") + (v.criterion ? "holds" : "fails") +
                (v.applies ? " for a real quadric of a real pencil" : ""));
  });
}

std::optional<VecX<GR>> pd_check(Run& run, const std::optional<VecX<GR>>& expected, int budget = 200) {
  std::optional<VecX<GR>> found;
  run.add("positive_definite_point", [&](Check& c) {
    found = pd_search(run.pencil, budget, run.rng);
    if (found) c.witness["point"] = pt(*found);
    const bool ok = found && (!expected || normalize_projective(*found) == normalize_projective(*expected));
    pass_if(c, ok, found ? "A(x) positive definite at " + pt(*found) : "none within budget");
  });
  return found;
}

void configuration_check(Run& run, const ComponentClaim& q, const std::vector<ComponentClaim>& conics,
                         const std::optional<VecX<GR>>& ref, int expected_case) {
  run.add("configuration", [&](Check& c) {
    if (!ref) throw std::invalid_argument("spectrahedron not established");
    if (conics.size() != 2) throw std::invalid_argument("the two extra conics were not found");
    auto conf = classify_configuration(run.pencil, q, conics, *ref, run.rng);
    auto membership = [](const ComponentMembership& m) {
      json samples = json::array();
      for (auto s : m.samples) samples.push_back(to_string(s));
      return json{{"label", m.label}, {"verdict", m.verdict ? to_string(*m.verdict) : "mixed"}, {"samples", samples}};
    };
    c.witness["case"] = conf.kind;
    c.witness["quadric"] = membership(conf.quadric);
    c.witness["conics"] = json::array();
    for (const auto& m : conf.conics) c.witness["conics"].push_back(membership(m));
    c.witness["grade"] = "evidence: finitely many sampled real points";
    c.witness["assumption"] = "general symmetroid, unverified";
    if (conf.partial) {
      c.status = Status::partial;
      c.detail = "some component has no real sample";
      return;
    }
    pass_if(c, conf.kind == expected_case, "case " + std::to_string(conf.kind));
  });
}

void conic_real_points_check(Run& run, const std::vector<ComponentClaim>& conics, bool expect_points) {
  run.add("conic_real_points", [&](Check& c) {
    if (conics.size() != 2) throw std::invalid_argument("the two extra conics were not found");
    json list = json::array();
    bool ok = true;
    for (const auto& conic : conics) {
      auto pts = real_points(conic.ideal, run.pencil.variables(), run.rng, 5, 20);
      list.push_back({{"ideal", ideal_str(conic.ideal)}, {"points", points_json(pts)}});
      ok = ok && (expect_points ? pts.size() == 5 : pts.empty());
    }
    c.witness["conics"] = list;
    c.witness["height"] = 20;
    pass_if(c, ok, expect_points ? "both conics have real points" : "no real point of height <= 20 on either conic");
  });
}

const char* bound_note = "dimension bound attained by this instance; the bound itself is not computed";

std::vector<ComponentClaim> formula_conics(const GR& lambda) {
  const std::string l = "(" + lambda.str() + ")*x0^2-x1^2-x3^2";
  return {{"C+", {parse_poly("x1+x4"), parse_poly("x2-x3"), parse_poly(l)}, 2},
          {"C-", {parse_poly("x1-x4"), parse_poly("x2+x3"), parse_poly(l)}, 2}};
}

void smooth_quadric_checks(Run& run, const ComponentClaim& q, const std::vector<VecX<GR>>& base,
                           const std::vector<ComponentClaim>& written_conics, std::vector<ComponentClaim>& conics) {
  quartic_check(run, bound_note);
  singular_check(run, "singular_along_Q", q);
  base_locus_check(run, "base_locus", base, 4, 1);
  extra_conics_check(run, conics, q.ideal, written_conics);
  surface_lines_check(run, q);
}

VerificationReport verify_lambda(Run& run, const GR& lambda, bool named) {
  ComponentClaim q{"Q", polys({"x0", "x1*x4-x2*x3"}), 2};
  std::vector<ComponentClaim> conics;
  std::vector<VecX<GR>> base{make_point({1, GR::i(), 0, 0}), make_point({1, -GR::i(), 0, 0}),
                             make_point({0, 0, 1, GR::i()}), make_point({0, 0, 1, -GR::i()})};
  smooth_quadric_checks(run, q, base, formula_conics(lambda), conics);
  if (lambda.re() > 0) {
    auto ref = pd_check(run, named ? std::optional(make_point({1, 0, 0, 0, 0})) : std::nullopt);
    conic_real_points_check(run, conics, true);
    configuration_check(run, q, conics, ref, 1);
  } else {
    run.add("infeasibility_certificate", [&](Check& c) {
      auto b = find_infeasibility_certificate(run.pencil);
      if (b) {
        json rows = json::array();
        for (int r = 0; r < 4; ++r) {
          json row = json::array();
          for (int k = 0; k < 4; ++k) row.push_back((*b)(r, k).str());
          rows.push_back(row);
        }
        c.witness["B"] = rows;
      }
      pass_if(c, b && verify_infeasibility_certificate(run.pencil, *b),
              b ? "B psd, nonzero, trace(A_i B) = 0 for all i" : "no certificate found");
    });
    conic_real_points_check(run, conics, false);
  }
  return run.report;
}

VerificationReport verify_max_smooth_2(Run& run) {
  ComponentClaim q{"Q", polys({"x1+x3", "x0*x4-x2^2-x3^2"}), 2};
  std::vector<ComponentClaim> conics;
  smooth_quadric_checks(run, q, {}, {}, conics);
  auto ref = pd_check(run, std::nullopt);
  run.add("boundary_point", [&](Check& c) {
    if (!ref) throw std::invalid_argument("spectrahedron not established");
    auto e0 = make_point({1, 0, 0, 0, 0});
    auto m = boundary_membership(run.pencil, e0, *ref);
    c.witness["point"] = pt(e0);
    c.witness["definiteness"] = definiteness(gram_at(run.pencil, e0)).str();
    pass_if(c, m == Membership::boundary, pt(e0) + " is " + to_string(m));
  });
  configuration_check(run, q, conics, ref, 2);
  return run.report;
}

VerificationReport verify_double_p3(Run& run) {
  quartic_check(run, bound_note);
  jacobian_check(run, "jacobian_in_double_3space", polys({"x2^2", "x5"}));
  singular_check(run, "singular_along_H1", {"H1", polys({"x0", "x1", "x2"}), 2});
  run.add("rank2_multiplicities", [&](Check& c) {
    auto report = rank_locus_report(run.pencil, 2,
                                    {{"H1", polys({"x0", "x1", "x2"}), 2},
                                     {"H2", polys({"x2", "x4", "x5"}), 2},
                                     {"H3", polys({"x1", "x2", "x5"}), 2}},
                                    run.rng);
    std::vector<long> slice, line;
    bool contained = true;
    for (const auto& e : report) {
      contained = contained && e.contained;
      slice.push_back(e.multiplicity.slice);
      line.push_back(e.multiplicity.line);
    }
    c.witness["contained"] = contained;
    c.witness["slice_length"] = slice;
    c.witness["generic_line_order"] = line;
    c.witness["convention"] = "slice length of the 3-minor ideal on a complementary linear space";
    pass_if(c, contained && slice == std::vector<long>{1, 3, 6},
            "slice lengths (" + std::to_string(slice[0]) + "," + std::to_string(slice[1]) + "," +
                std::to_string(slice[2]) + "), generic-line orders (" + std::to_string(line[0]) + "," +
                std::to_string(line[1]) + "," + std::to_string(line[2]) + ")");
  });
  singular_check(run, "rank1_conic", {"C", polys({"x1", "x2", "x5", "x0*x4-x3^2"}), 1});
  base_locus_check(run, "base_locus", {}, 3);
  run.add("not_a_cone", [&](Check& c) { pass_if(c, cone_test(run.pencil).empty()); });
  return run.report;
}

VerificationReport verify_two_p3s(Run& run) {
  quartic_check(run, bound_note);
  singular_check(run, "singular_along_P3_minus", {"P3-", polys({"x2-I*x3", "x5"}), 3});
  singular_check(run, "singular_along_P3_plus", {"P3+", polys({"x2+I*x3", "x5"}), 3});
  ComponentClaim q{"Q", polys({"x0-x4", "x1", "x2^2+x3^2-x4*x5"}), 2};
  singular_check(run, "singular_along_Q", q);
  run.add("base_locus", [&](Check& c) {
    auto base = web_base_locus(run.pencil);
    json pts = json::array();
    for (const auto& b : base.points)
      pts.push_back({{"point", pt(b.point)},
                     {"length", b.length},
                     {"tangent", b.tangent ? b.tangent->str() : std::string()}});
    c.witness["points"] = pts;
    c.witness["total_length"] = base.total;
    bool ok = base.points.size() == 2 && base.total == 4 && !base.residual;
    if (ok) {
      const auto& a = base.points[0];
      const auto& b = base.points[1];
      VecX<GR> conj_a = a.point.unaryExpr([](const GR& z) { return z.conj(); });
      ok = a.length == 2 && b.length == 2 && normalize_projective(conj_a) == normalize_projective(b.point) &&
           !(normalize_projective(a.point) == normalize_projective(b.point));
    }
    pass_if(c, ok, "two length-2 schemes at conjugate points");
  });
  run.add("fat_strata", [&](Check& c) {
    auto strata = strata_intersections(web_base_locus(run.pencil), run.rng);
    auto back = pulled_back_strata(run.pencil, strata);
    bool q_found = std::any_of(back.surfaces.begin(), back.surfaces.end(),
                               [&](const Ideal& s) { return ideals_equal(s, q.ideal); });
    c.witness["others_singular"] = strata.others_singular.value_or(false);
    c.witness["surfaces"] = strata.surfaces.size();
    pass_if(c, strata.fat && strata.others_singular.value_or(false) && q_found,
            "the only rank-2 surface through the fat points pulls back to Q");
  });
  run.add("real_points_of_Q_semidefinite", [&](Check& c) {
    auto ref = pd_search(run.pencil, 200, run.rng);
    if (!ref) throw std::invalid_argument("spectrahedron not established");
    auto pts = real_points(q.ideal, run.pencil.variables(), run.rng, 5);
    bool ok = pts.size() == 5;
    json list = json::array();
    for (const auto& x : pts) {
      auto m = boundary_membership(run.pencil, x, *ref);
      ok = ok && m != Membership::outside;
      list.push_back({{"point", pt(x)}, {"membership", to_string(m)}});
    }
    c.witness["reference"] = pt(*ref);
    c.witness["points"] = list;
    pass_if(c, ok, std::to_string(pts.size()) + " real points, all semidefinite");
  });
  return run.report;
}

VerificationReport verify_double_plane(Run& run) {
  quartic_check(run);
  run.add("double_plane_in_rank2_locus", [&](Check& c) {
    auto r = rank_locus_report(run.pencil, 2, {{"double plane", polys({"x2+x4", "x4^2"}), 2}}, run.rng);
    c.witness["contained"] = r[0].contained;
    c.witness["slice_length"] = r[0].multiplicity.slice;
    c.witness["generic_line_order"] = r[0].multiplicity.line;
    pass_if(c, r[0].contained && r[0].multiplicity.slice == 2,
            "3-minors vanish on V(x2+x4, x4^2), slice length " + std::to_string(r[0].multiplicity.slice));
  });
  singular_check(run, "rank1_conic", {"C", polys({"x2", "x4", "x0*x3-x1^2"}), 1});
  base_locus_check(run, "base_locus", {}, 4);
  return run.report;
}

}  // namespace

VerificationReport cmd_verify(const std::string& id, std::uint64_t seed) {
  auto entry = find_example(id);
  Run run(entry.id, seed, entry.pencil);
  if (entry.lambda) return verify_lambda(run, *entry.lambda, false);
  if (entry.id == "max-smooth-1") return verify_lambda(run, GR(1), true);
  if (entry.id == "max-smooth-2") return verify_max_smooth_2(run);
  if (entry.id == "double-P3") return verify_double_p3(run);
  if (entry.id == "two-P3s") return verify_two_p3s(run);
  if (entry.id == "double-plane") return verify_double_plane(run);
  throw UnknownExample(id);
}

VerificationReport cmd_analyze(const SymmetricPencil& pencil, std::uint64_t seed, int budget, const std::string& id) {
  Run run(id, seed, pencil);
  quartic_check(run);
  run.add("cone_test", [&](Check& c) {
    auto vertices = cone_test(run.pencil);
    c.witness["vertices"] = points_json(vertices);
    c.status = Status::pass;
    c.detail = vertices.empty() ? "not a cone" : "cone, vertex spanned by " + c.witness["vertices"].dump();
  });
  run.add("base_locus", [&](Check& c) {
    try {
      auto base = web_base_locus(run.pencil);
      json pts = json::array();
      for (const auto& b : base.points) pts.push_back({{"point", pt(b.point)}, {"length", b.length}});
      c.witness["points"] = pts;
      c.witness["total_length"] = base.total;
      c.witness["residual"] = base.residual;
      pass_if(c, true,
              base.points.empty() ? "empty"
                                  : std::to_string(base.points.size()) + " points of total length " +
                                        std::to_string(base.total) + (base.residual ? " (plus points outside Q(i))" : ""));
    } catch (const PositiveDimensional& e) {
      // fewer than four quadrics always share a curve
      if (run.pencil.n() < 3) {
        pass_if(c, true, "a curve, as for any system of fewer than four quadrics");
        return;
      }
      c.witness["alarm"] = "positive-dimensional";
      pass_if(c, false, e.what());
    }
  });
  run.add("ranks", [&](Check& c) {
    // coordinate points, then random real points
    std::vector<VecX<GR>> pts;
    const int m = run.pencil.n() + 1;
    for (int i = 0; i < m; ++i) pts.push_back(VecX<GR>::Unit(m, i));
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int t = 0; t < 5; ++t) {
      VecX<GR> v(m);
      do {
        for (int i = 0; i < m; ++i) v(i) = GR(coord(run.rng));
      } while (is_zero_vector(v));
      pts.push_back(v);
    }
    json list = json::array();
    for (const auto& p : pts) list.push_back({{"point", pt(p)}, {"rank", rank_at(run.pencil, p)}});
    c.witness["ranks"] = list;
    pass_if(c, true, std::to_string(pts.size()) + " points");
  });
  run.add("spectrahedral", [&](Check& c) {
    if (!run.pencil.is_real()) {
      pass_if(c, true, "not applicable: the pencil is not real");
      return;
    }
    if (auto x = pd_search(run.pencil, budget, run.rng)) {
      c.witness["point"] = pt(*x);
      pass_if(c, true, "spectrahedral, A(x) positive definite at " + pt(*x));
      return;
    }
    if (auto b = find_infeasibility_certificate(run.pencil)) {
      pass_if(c, true, "not spectrahedral, certified by a dual witness");
      return;
    }
    c.status = Status::partial;
    c.detail = "unknown: no positive definite point within budget and no certificate";
  });
  return run.report;
}

}  // namespace symkit
