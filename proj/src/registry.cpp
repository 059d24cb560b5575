#include "symkit/registry.hpp"

namespace symkit {

SymmetricPencil pencil_from_forms(int n, const std::vector<std::vector<std::string>>& rows, bool allow_degenerate) {
  std::vector<GaussMatrix> matrices(static_cast<std::size_t>(n + 1), GaussMatrix::Zero());
  auto vars = indexed_names("x", n + 1);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      MultiPoly form = parse_poly(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      for (int i = 0; i <= n; ++i)
        matrices[static_cast<std::size_t>(i)](r, c) = form.coefficient({{vars[static_cast<std::size_t>(i)], 1}});
    }
  }
  return SymmetricPencil(std::move(matrices), allow_degenerate);
}

SymmetricPencil lambda_family(const GaussianRational& lambda) {
  std::string l = "(" + lambda.str() + ")*x0";
  return pencil_from_forms(4, {{"x0", "0", "x1", "x2"}, {"0", "x0", "x3", "x4"}, {"x1", "x3", l, "0"},
                               {"x2", "x4", "0", l}});
}

std::vector<std::string> example_ids() {
  return {"double-plane", "max-smooth-1", "max-smooth-2", "double-P3", "two-P3s", "lambda-family(1)",
          "lambda-family(-1)"};
}

ExampleEntry find_example(const std::string& id) {
  if (id == "double-plane")
    return {id, "threefold in P4 with a double plane of rank-2 points and a conic of rank-1 points",
            pencil_from_forms(4, {{"x0", "x1", "x2", "0"}, {"x1", "x3", "0", "x4"}, {"x2", "0", "0", "x2+x4"},
                                  {"0", "x4", "x2+x4", "0"}}),
            std::nullopt};
  if (id == "max-smooth-1")
    return {id, "spectrahedral threefold in P4 singular along a smooth quadric disjoint from the spectrahedron",
            pencil_from_forms(4, {{"x0", "0", "x1", "x2"}, {"0", "x0", "x3", "x4"}, {"x1", "x3", "x0", "0"},
                                  {"x2", "x4", "0", "x0"}}),
            std::nullopt};
  if (id == "max-smooth-2")
    return {id, "spectrahedral threefold in P4 singular along a smooth quadric on the spectrahedral boundary",
            pencil_from_forms(4, {{"x0", "0", "x1", "x2"}, {"0", "x0", "x2", "x3"}, {"x1", "x2", "x4", "0"},
                                  {"x2", "x3", "0", "x4"}}),
            std::nullopt};
  if (id == "double-P3")
    return {id, "fourfold in P5 singular along a double 3-space",
            pencil_from_forms(5, {{"x0+x1", "x0+x2", "x3", "x2"}, {"x0+x2", "x0-x1", "x3", "x2"},
                                  {"x3", "x3", "x4", "x5"}, {"x2", "x2", "x5", "0"}}),
            std::nullopt};
  if (id == "two-P3s")
    return {id, "fourfold in P5 singular along two complex conjugate 3-spaces",
            pencil_from_forms(5, {{"x0", "x1", "x2", "x3"}, {"x1", "x4", "-x3", "x2"}, {"x2", "-x3", "x5", "0"},
                                  {"x3", "x2", "0", "x5"}}),
            std::nullopt};
  const std::string prefix = "lambda-family(";
  if (id.rfind(prefix, 0) == 0 && id.back() == ')') {
    GaussianRational lambda;
    try {
      lambda = GaussianRational::parse(id.substr(prefix.size(), id.size() - prefix.size() - 1));
    } catch (const std::exception&) {
      throw UnknownExample(id);
    }
    if (!lambda.is_real() || lambda.is_zero()) throw UnknownExample(id);
    return {"lambda-family(" + lambda.str() + ")", "threefold in P4 from the lambda family of smooth-quadric pencils",
            lambda_family(lambda), lambda};
  }
  throw UnknownExample(id);
}

}  // namespace symkit
