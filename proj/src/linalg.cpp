#include "symkit/linalg.hpp"

#include <stdexcept>

namespace symkit {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

VecX<GaussianRational> normalize_projective(const VecX<GaussianRational>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!v(k).is_zero()) {
      GaussianRational inv = v(k).inverse();
      VecX<GaussianRational> out = v;
      for (Eigen::Index j = 0; j < out.size(); ++j) out(j) *= inv;
      return out;
    }
  }
  throw std::invalid_argument("the zero vector is not a projective point");
}

bool is_symmetric(const MatX<GaussianRational>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

bool is_real(const MatX<GaussianRational>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_real()) return false;
  return true;
}

MatX<GaussianRational> conj(const MatX<GaussianRational>& m) {
  MatX<GaussianRational> out = m;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
  return out;
}

bool is_zero_vector(const VecX<GaussianRational>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) return false;
  return true;
}

std::string point_str(const VecX<GaussianRational>& p) {
  std::string out = "[";
  for (Eigen::Index k = 0; k < p.size(); ++k) out += (k ? ":" : "") + p(k).str();
  return out + "]";
}

}  // namespace symkit
