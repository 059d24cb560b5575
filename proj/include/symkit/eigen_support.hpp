#pragma once

#include <Eigen/Core>

#include "symkit/gaussian_rational.hpp"
#include "symkit/poly.hpp"

// Exact scalars have no rounding: epsilon and dummy_precision are zero and the
// costs are only there to steer Eigen's expression evaluator.
namespace Eigen {

template <>
struct NumTraits<symkit::GaussianRational> : GenericNumTraits<symkit::GaussianRational> {
  using Real = symkit::GaussianRational;
  using NonInteger = symkit::GaussianRational;
  using Literal = symkit::GaussianRational;
  using Nested = symkit::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<symkit::MultiPoly> : GenericNumTraits<symkit::MultiPoly> {
  using Real = symkit::MultiPoly;
  using NonInteger = symkit::MultiPoly;
  using Literal = symkit::MultiPoly;
  using Nested = symkit::MultiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 50,
    AddCost = 200,
    MulCost = 800
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace symkit {

template <typename Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using GaussMatrix = Mat4<GaussianRational>;
using GaussVector = Vec4<GaussianRational>;
using PolyMatrix = Mat4<MultiPoly>;

}  // namespace symkit
