#pragma once

#include <Eigen/Core>

namespace moo {

using Eigen::Index;

/// Dense column vector of the given scalar type.
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense matrix of the given scalar type.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXd = Vector<double>;
using MatrixXd = Matrix<double>;

/// Tolerance the simplex-sum invariant is held to after construction.
inline constexpr double kSimplexSumTol = 1e-9;

/// Largest deviation of an input's sum from 1 that constructors normalize
/// away; anything worse is rejected as a real error.
inline constexpr double kSimplexInputTol = 1e-6;

}  // namespace moo
