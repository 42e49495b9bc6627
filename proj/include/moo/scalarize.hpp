#pragma once

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "moo/errors.hpp"
#include "moo/simplex.hpp"
#include "moo/types.hpp"

namespace moo {

/// Reference point weakly dominated by every attainable objective vector.
/// Defaults to the origin, which is valid whenever objectives are nonnegative.
class NadirPoint {
public:
    explicit NadirPoint(VectorXd z) : z_(std::move(z)) {
        if (!z_.allFinite()) throw ValidationError("NadirPoint: non-finite entry");
    }

    static NadirPoint zeros(Index m) { return NadirPoint(VectorXd::Zero(m)); }

    const VectorXd& coeffs() const { return z_; }
    Index size() const { return z_.size(); }

private:
    VectorXd z_;
};

/// Positive smoothing scale of the log-sum-exp scalarizer.
class SmoothingScale {
public:
    explicit SmoothingScale(double mu) : mu_(mu) {
        if (!(mu > 0.0)) throw ValidationError("SmoothingScale: mu must be positive");
    }

    double value() const { return mu_; }

private:
    double mu_;
};

/// Max-shifted log(sum(exp(x_i))); overflow-safe for any input scale.
template <typename Derived>
typename Derived::Scalar log_sum_exp(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const Scalar shift = x.maxCoeff();
    return shift + std::log((x.array() - shift).exp().sum());
}

/// Max-shifted softmax; entries strictly positive and summing to 1.
template <typename Derived>
Vector<typename Derived::Scalar> softmax(const Eigen::MatrixBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    const Scalar shift = x.maxCoeff();
    Vector<Scalar> e = (x.array() - shift).exp().matrix();
    return e / e.sum();
}

namespace detail {

inline void check_scalarizer_sizes(Index f_size, const PreferenceVector& w, const char* what) {
    if (f_size != w.size()) throw DimensionError(std::string(what) + ": f/w length mismatch");
}

}  // namespace detail

/// Linear scalarization: sum of preference-weighted objectives.
inline double ls_value(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w) {
    detail::check_scalarizer_sizes(f.size(), w, "ls_value");
    return w.coeffs().dot(f);
}

/// Tchebycheff scalarization: worst preference-weighted objective above the
/// nadir point. Requires f >= z componentwise.
inline double tch_value(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                        const NadirPoint& z) {
    detail::check_scalarizer_sizes(f.size(), w, "tch_value");
    if (z.size() != f.size()) throw DimensionError("tch_value: f/z length mismatch");
    if ((f.array() < z.coeffs().array()).any())
        throw ValidationError("tch_value: objective below nadir point");
    return (w.coeffs().array() * (f.array() - z.coeffs().array())).maxCoeff();
}

inline double tch_value(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w) {
    return tch_value(f, w, NadirPoint::zeros(f.size()));
}

/// Index of the worst preference-weighted objective; ties break to the lowest
/// index. The vanilla Tchebycheff descent direction is w[i] * grad f[i] at
/// this index.
inline Index tch_subgradient_index(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                                   const NadirPoint& z) {
    detail::check_scalarizer_sizes(f.size(), w, "tch_subgradient_index");
    if (z.size() != f.size()) throw DimensionError("tch_subgradient_index: f/z length mismatch");
    if ((f.array() < z.coeffs().array()).any())
        throw ValidationError("tch_subgradient_index: objective below nadir point");
    Index best = 0;
    double best_value = w[0] * (f[0] - z.coeffs()[0]);
    for (Index i = 1; i < f.size(); ++i) {
        const double value = w[i] * (f[i] - z.coeffs()[i]);
        if (value > best_value) {
            best = i;
            best_value = value;
        }
    }
    return best;
}

/// Smooth Tchebycheff scalarization: mu * log sum exp(w_i f_i / mu).
inline double stch_value(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                         SmoothingScale mu) {
    detail::check_scalarizer_sizes(f.size(), w, "stch_value");
    return mu.value() * log_sum_exp(((w.coeffs().array() * f.array()) / mu.value()).matrix());
}

/// Gradient-combination weights of the smooth Tchebycheff scalarizer:
/// softmax of w_i f_i / mu, determined solely by the current losses.
inline SimplexWeights stch_weights(const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                                   SmoothingScale mu) {
    detail::check_scalarizer_sizes(f.size(), w, "stch_weights");
    return SimplexWeights(softmax(((w.coeffs().array() * f.array()) / mu.value()).matrix()));
}

/// Combined descent direction: sum_i coeffs_i * w_i * jacobian_row_i.
inline VectorXd composite_gradient(const Eigen::Ref<const MatrixXd>& jacobian,
                                   const SimplexWeights& coeffs, const PreferenceVector& w) {
    if (jacobian.rows() != coeffs.size() || jacobian.rows() != w.size())
        throw DimensionError("composite_gradient: Jacobian row count mismatch");
    return jacobian.transpose() * coeffs.coeffs().cwiseProduct(w.coeffs());
}

}  // namespace moo
