#include "moo/problems/quadratic_bi.hpp"

#include <cmath>

namespace moo {

QuadraticBiObjective::QuadraticBiObjective(VectorXd anchor1, VectorXd anchor2, double scale1,
                                           double scale2)
    : Problem(2, anchor1.size()),
      anchor1_(std::move(anchor1)),
      anchor2_(std::move(anchor2)),
      scale1_(scale1),
      scale2_(scale2) {
    if (anchor1_.size() != anchor2_.size())
        throw DimensionError("QuadraticBiObjective: anchors of different lengths");
    if (!anchor1_.allFinite() || !anchor2_.allFinite())
        throw ValidationError("QuadraticBiObjective: non-finite anchor");
    if ((anchor1_.array() == anchor2_.array()).all())
        throw ValidationError("QuadraticBiObjective: anchors must be distinct");
    if (!(scale1_ > 0.0) || !(scale2_ > 0.0))
        throw ValidationError("QuadraticBiObjective: scales must be positive");
}

VectorXd QuadraticBiObjective::evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const {
    VectorXd f(2);
    f << scale1_ * (theta - anchor1_).squaredNorm(), scale2_ * (theta - anchor2_).squaredNorm();
    return f;
}

MatrixXd QuadraticBiObjective::gradient_impl(const Eigen::Ref<const VectorXd>& theta) const {
    MatrixXd jac(2, dimension());
    jac.row(0) = 2.0 * scale1_ * (theta - anchor1_).transpose();
    jac.row(1) = 2.0 * scale2_ * (theta - anchor2_).transpose();
    return jac;
}

std::pair<VectorXd, double> quadratic_tch_optimum(const QuadraticBiObjective& problem,
                                                  const PreferenceVector& w) {
    if (w.size() != 2) throw DimensionError("quadratic_tch_optimum: preference must have length 2");
    const VectorXd& a1 = problem.anchor1();
    const VectorXd gap = problem.anchor2() - a1;
    const double gap_sq = gap.squaredNorm();

    // Along theta(t) = a1 + t * (a2 - a1), w1 f1 grows and w2 f2 shrinks, so
    // the max of the two is unimodal in t.
    const auto value = [&](double t) {
        const double f1 = problem.scale1() * t * t * gap_sq;
        const double f2 = problem.scale2() * (1.0 - t) * (1.0 - t) * gap_sq;
        return std::max(w[0] * f1, w[1] * f2);
    };

    constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
    double lo = 0.0, hi = 1.0;
    double t1 = hi - inv_phi * (hi - lo);
    double t2 = lo + inv_phi * (hi - lo);
    double v1 = value(t1), v2 = value(t2);
    while (hi - lo > 1e-10) {
        if (v1 < v2) {
            hi = t2;
            t2 = t1;
            v2 = v1;
            t1 = hi - inv_phi * (hi - lo);
            v1 = value(t1);
        } else {
            lo = t1;
            t1 = t2;
            v1 = v2;
            t2 = lo + inv_phi * (hi - lo);
            v2 = value(t2);
        }
    }
    const double t = 0.5 * (lo + hi);
    return {a1 + t * gap, value(t)};
}

}  // namespace moo
