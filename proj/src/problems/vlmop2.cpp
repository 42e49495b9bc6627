#include "moo/problems/vlmop2.hpp"

#include <cmath>

namespace moo {

Vlmop2::Vlmop2(Index dimension)
    : Problem(2, dimension), anchor_(1.0 / std::sqrt(static_cast<double>(dimension))) {
    if (dimension < 1) throw ValidationError("Vlmop2: dimension must be >= 1");
}

VectorXd Vlmop2::evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const {
    const double s1 = (theta.array() - anchor_).square().sum();
    const double s2 = (theta.array() + anchor_).square().sum();
    VectorXd f(2);
    f << 1.0 - std::exp(-s1), 1.0 - std::exp(-s2);
    return f;
}

MatrixXd Vlmop2::gradient_impl(const Eigen::Ref<const VectorXd>& theta) const {
    const double s1 = (theta.array() - anchor_).square().sum();
    const double s2 = (theta.array() + anchor_).square().sum();
    MatrixXd jac(2, dimension());
    jac.row(0) = 2.0 * std::exp(-s1) * (theta.array() - anchor_).matrix().transpose();
    jac.row(1) = 2.0 * std::exp(-s2) * (theta.array() + anchor_).matrix().transpose();
    return jac;
}

std::vector<VectorXd> vlmop2_pareto_set(Index dimension, int num_points) {
    if (num_points < 2) throw ValidationError("vlmop2_pareto_set: need at least 2 points");
    const double anchor = 1.0 / std::sqrt(static_cast<double>(dimension));
    std::vector<VectorXd> points;
    points.reserve(static_cast<std::size_t>(num_points));
    for (int k = 0; k < num_points; ++k) {
        const double c =
            -anchor + 2.0 * anchor * static_cast<double>(k) / static_cast<double>(num_points - 1);
        points.push_back(VectorXd::Constant(dimension, c));
    }
    return points;
}

}  // namespace moo
