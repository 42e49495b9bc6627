#pragma once

#include <vector>

#include "moo/problem.hpp"

namespace moo {

/// VLMOP2 benchmark: two exponential bowls anchored at +/- 1/sqrt(d) * 1,
/// objectives in [0, 1), non-convex Pareto front.
///
///   f1 = 1 - exp(-sum_i (theta_i - 1/sqrt(d))^2)
///   f2 = 1 - exp(-sum_i (theta_i + 1/sqrt(d))^2)
class Vlmop2 : public Problem {
public:
    explicit Vlmop2(Index dimension = 10);

    /// Coordinate value of the two anchor points, 1/sqrt(d).
    double anchor() const { return anchor_; }

protected:
    VectorXd evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const override;
    MatrixXd gradient_impl(const Eigen::Ref<const VectorXd>& theta) const override;

private:
    double anchor_;
};

/// Equally spaced points on the Pareto set: all coordinates equal to c with
/// c sweeping [-1/sqrt(d), 1/sqrt(d)], endpoints included.
std::vector<VectorXd> vlmop2_pareto_set(Index dimension, int num_points);

}  // namespace moo
