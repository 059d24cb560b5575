#include "symkit/pencil.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "symkit/linalg.hpp"

namespace symkit {

SymmetricPencil::SymmetricPencil(std::vector<GaussMatrix> matrices, bool allow_degenerate)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw InvalidPencil("a pencil needs at least one matrix");
  bool any_nonzero = false;
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const MatX<GaussianRational> m = matrices_[i];
    if (!is_symmetric(m)) throw InvalidPencil("A" + std::to_string(i) + " is not symmetric");
    real_ = real_ && symkit::is_real(m);
    for (Eigen::Index r = 0; r < 4; ++r)
      for (Eigen::Index c = 0; c < 4; ++c) any_nonzero = any_nonzero || !matrices_[i](r, c).is_zero();
  }
  if (!any_nonzero) throw InvalidPencil("all matrices of the pencil are zero");
  variables_ = indexed_names("x", static_cast<int>(matrices_.size()));
  if (!allow_degenerate && symmetroid_quartic(*this).degenerate)
    throw InvalidPencil("det A(x) vanishes identically");
}

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back({w, number});
  }
  return out;
}

int parse_index(const std::string& digits, int line) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected a nonnegative integer, got '" + digits + "'", line);
  return std::stoi(digits);
}

}  // namespace

SymmetricPencil parse_pencil(const std::string& text, bool allow_degenerate) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty pencil file", 0);
  const Token& head = tokens.front();
  if (head.text.rfind("n=", 0) != 0) throw ParseError("expected header 'n=<int>'", head.line);
  int n = parse_index(head.text.substr(2), head.line);
  if (n < 1 || n > 64) throw ParseError("n must lie in 1..64", head.line);

  std::vector<GaussMatrix> matrices(static_cast<std::size_t>(n + 1), GaussMatrix::Zero());
  std::set<int> seen;
  std::size_t pos = 1;
  while (pos < tokens.size()) {
    const Token& label = tokens[pos++];
    if (label.text.size() < 3 || label.text.front() != 'A' || label.text.back() != ':')
      throw ParseError("expected a block label 'A<i>:', got '" + label.text + "'", label.line);
    int i = parse_index(label.text.substr(1, label.text.size() - 2), label.line);
    if (i > n) throw ParseError("block A" + std::to_string(i) + " exceeds n=" + std::to_string(n), label.line);
    if (!seen.insert(i).second) throw ParseError("duplicate block A" + std::to_string(i), label.line);
    GaussMatrix& m = matrices[static_cast<std::size_t>(i)];
    for (int k = 0; k < 16; ++k) {
      if (pos >= tokens.size()) throw ParseError("block A" + std::to_string(i) + " has fewer than 16 entries",
                                                 tokens.back().line);
      const Token& entry = tokens[pos++];
      try {
        m(k / 4, k % 4) = GaussianRational::parse(entry.text);
      } catch (const ParseError& e) {
        throw ParseError("bad entry '" + entry.text + "': " + e.what(), entry.line);
      }
    }
    if (!is_symmetric(MatX<GaussianRational>(m)))
      throw ParseError("block A" + std::to_string(i) + " is not symmetric", label.line);
  }
  try {
    return SymmetricPencil(std::move(matrices), allow_degenerate);
  } catch (const InvalidPencil& e) {
    throw ParseError(e.what(), head.line);
  }
}

std::string format_pencil(const SymmetricPencil& pencil) {
  std::ostringstream out;
  out << "n=" << pencil.n() << '\n';
  for (int i = 0; i <= pencil.n(); ++i) {
    out << 'A' << i << ":\n";
    for (Eigen::Index r = 0; r < 4; ++r) {
      for (Eigen::Index c = 0; c < 4; ++c) out << (c ? " " : "") << pencil.matrix(i)(r, c).str();
      out << '\n';
    }
  }
  return out.str();
}

PolyMatrix pencil_matrix(const SymmetricPencil& pencil) {
  PolyMatrix m;
  const auto& vars = pencil.variables();
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      MultiPoly entry = MultiPoly(0).extended(vars);
      for (int i = 0; i <= pencil.n(); ++i) {
        const auto& a = pencil.matrix(i)(r, c);
        if (!a.is_zero()) entry += MultiPoly::variable(vars[static_cast<std::size_t>(i)]) * a;
      }
      m(r, c) = entry;
    }
  }
  return m;
}

GaussMatrix gram_at(const SymmetricPencil& pencil, const VecX<GaussianRational>& point) {
  if (point.size() != pencil.n() + 1)
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, pencil needs " +
                                std::to_string(pencil.n() + 1));
  bool nonzero = false;
  GaussMatrix g = GaussMatrix::Zero();
  for (int i = 0; i <= pencil.n(); ++i) {
    const auto& c = point(i);
    if (c.is_zero()) continue;
    nonzero = true;
    g += pencil.matrix(i) * c;
  }
  if (!nonzero) throw std::invalid_argument("the zero vector is not a projective point");
  return g;
}

int rank_at(const SymmetricPencil& pencil, const VecX<GaussianRational>& point) {
  return static_cast<int>(rank(gram_at(pencil, point)));
}

Quartic symmetroid_quartic(const SymmetricPencil& pencil) {
  Quartic q;
  q.f = determinant_laplace(pencil_matrix(pencil));
  q.f = q.f.extended(merge_variables(q.f.variables(), pencil.variables()));
  q.degenerate = q.f.is_zero();
  return q;
}

IdealBasis minor_ideal(const SymmetricPencil& pencil, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("minor_ideal needs 1 <= k <= 3");
  PolyMatrix m = pencil_matrix(pencil);
  IdealBasis out;
  out.variables = pencil.variables();
  auto sets = combinations(4, k + 1);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a; b < sets.size(); ++b) {
      MultiPoly d = determinant_laplace(submatrix(m, sets[a], sets[b]));
      if (!d.is_zero()) out.generators.push_back(d.extended(merge_variables(d.variables(), out.variables)));
    }
  }
  return out;
}

IdealBasis jacobian_ideal(const SymmetricPencil& pencil) {
  MultiPoly f = symmetroid_quartic(pencil).f;
  IdealBasis out;
  out.variables = pencil.variables();
  for (const auto& v : out.variables) out.generators.push_back(diff(f, v));
  return out;
}

std::vector<VecX<GaussianRational>> cone_test(const SymmetricPencil& pencil) {
  IdealBasis jac = jacobian_ideal(pencil);
  std::vector<Exponents> monomials;
  for (const auto& g : jac.generators)
    for (const auto& [e, c] : g.terms())
      if (std::find(monomials.begin(), monomials.end(), e) == monomials.end()) monomials.push_back(e);
  const auto cols = static_cast<Eigen::Index>(jac.generators.size());
  MatX<GaussianRational> system = MatX<GaussianRational>::Zero(static_cast<Eigen::Index>(monomials.size()), cols);
  for (Eigen::Index i = 0; i < cols; ++i) {
    for (const auto& [e, c] : jac.generators[static_cast<std::size_t>(i)].terms()) {
      auto row = std::find(monomials.begin(), monomials.end(), e) - monomials.begin();
      system(row, i) = c;
    }
  }
  MatX<GaussianRational> k = kernel(system);
  std::vector<VecX<GaussianRational>> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.push_back(k.col(c));
  return out;
}

const std::vector<std::string>& y_variables() {
  static const std::vector<std::string> ys = indexed_names("y", 4);
  return ys;
}

MultiPoly quadratic_form(const GaussMatrix& gram) {
  const auto& ys = y_variables();
  MultiPoly q = MultiPoly(0).extended(ys);
  for (int r = 0; r < 4; ++r) {
    for (int c = r; c < 4; ++c) {
      const auto& a = gram(r, c);
      if (a.is_zero()) continue;
      GaussianRational coef = r == c ? a : a * GaussianRational(2);
      q += MultiPoly::variable(ys[static_cast<std::size_t>(r)]) * MultiPoly::variable(ys[static_cast<std::size_t>(c)]) *
           coef;
    }
  }
  return q;
}

std::vector<MultiPoly> web_generators(const SymmetricPencil& pencil) {
  std::vector<MultiPoly> out;
  for (const auto& a : pencil.matrices()) out.push_back(quadratic_form(a));
  return out;
}

VecX<GaussianRational> make_point(std::initializer_list<GaussianRational> coords) {
  VecX<GaussianRational> v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (const auto& c : coords) v(k++) = c;
  return v;
}

}  // namespace symkit
