#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symkit/pencil.hpp"

namespace symkit {

class UnknownExample : public std::invalid_argument {
 public:
  explicit UnknownExample(const std::string& id) : std::invalid_argument("unknown example '" + id + "'") {}
};

struct ExampleEntry {
  std::string id;
  std::string summary;
  SymmetricPencil pencil;
  std::optional<GaussianRational> lambda;  // set for the lambda family
};

/// Pencil from a 4x4 array of linear forms in x0..xn.
SymmetricPencil pencil_from_forms(int n, const std::vector<std::vector<std::string>>& rows,
                                  bool allow_degenerate = false);

/// The lambda family [[x0,0,x1,x2],[0,x0,x3,x4],[x1,x3,l*x0,0],[x2,x4,0,l*x0]].
SymmetricPencil lambda_family(const GaussianRational& lambda);

/// Named ids, with the lambda family listed at lambda = 1 and -1.
std::vector<std::string> example_ids();

/// Accepts the named ids and `lambda-family(<q>)` for a rational q.
ExampleEntry find_example(const std::string& id);

}  // namespace symkit
