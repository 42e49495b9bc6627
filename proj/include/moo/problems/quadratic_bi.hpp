#pragma once

#include <utility>

#include "moo/problem.hpp"
#include "moo/simplex.hpp"

namespace moo {

/// Convex bi-objective oracle problem: f_i(theta) = s_i * ||theta - a_i||^2
/// with distinct anchors a_1 != a_2 and positive scales. Its Tchebycheff
/// optimum has a cheap independent oracle (see quadratic_tch_optimum), which
/// makes it the reference problem for convergence-rate and convexity checks.
class QuadraticBiObjective : public Problem {
public:
    QuadraticBiObjective(VectorXd anchor1, VectorXd anchor2, double scale1 = 1.0,
                         double scale2 = 1.0);

    const VectorXd& anchor1() const { return anchor1_; }
    const VectorXd& anchor2() const { return anchor2_; }
    double scale1() const { return scale1_; }
    double scale2() const { return scale2_; }

protected:
    VectorXd evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const override;
    MatrixXd gradient_impl(const Eigen::Ref<const VectorXd>& theta) const override;

private:
    VectorXd anchor1_;
    VectorXd anchor2_;
    double scale1_;
    double scale2_;
};

/// Minimizer and minimum of max_i w_i f_i for the quadratic bi-objective.
///
/// The optimum lies on the segment between the two anchors; golden-section
/// search on that segment resolves the parameter to 1e-10.
std::pair<VectorXd, double> quadratic_tch_optimum(const QuadraticBiObjective& problem,
                                                  const PreferenceVector& w);

}  // namespace moo
