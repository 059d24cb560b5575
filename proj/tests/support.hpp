#pragma once

#include <random>

#include "symkit/poly.hpp"

namespace symkit::testing {

inline GaussianRational random_gr(std::mt19937_64& rng, int height = 5, bool complex = true) {
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  GaussianRational z(mpq_class(num(rng), den(rng)));
  if (complex) z += GaussianRational(mpq_class(0), mpq_class(num(rng), den(rng)));
  return z;
}

inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms = 6,
                             int max_degree = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly m(random_gr(rng));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m *= MultiPoly::variable(vars[pick(rng)]);
    p += m;
  }
  return p;
}

inline std::map<std::string, GaussianRational> random_point(std::mt19937_64& rng,
                                                           const std::vector<std::string>& vars,
                                                           bool complex = true) {
  std::map<std::string, GaussianRational> pt;
  for (const auto& v : vars) pt[v] = random_gr(rng, 7, complex);
  return pt;
}

inline MultiPoly P(const char* text) { return parse_poly(text); }

}  // namespace symkit::testing
