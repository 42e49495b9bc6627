#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "moo/errors.hpp"
#include "moo/types.hpp"

namespace moo {

/// A multi-objective problem: m objective functions over R^d.
///
/// evaluate() and gradient() are deterministic functions of theta.
/// stochastic_gradient() is deterministic given (theta, seed, round); for
/// deterministic problems it returns the exact values and gradients.
/// Instances are immutable after construction and safe to share across
/// threads.
class Problem {
public:
    virtual ~Problem() = default;

    Index num_objectives() const { return num_objectives_; }
    Index dimension() const { return dimension_; }
    virtual bool is_stochastic() const { return false; }

    /// Objective values f(theta), length m.
    VectorXd evaluate(const Eigen::Ref<const VectorXd>& theta) const {
        check_theta(theta);
        VectorXd f = evaluate_impl(theta);
        if (!f.allFinite()) throw NumericError("evaluate: non-finite objective value");
        return f;
    }

    /// Jacobian with row i = grad f_i(theta); shape m x d.
    MatrixXd gradient(const Eigen::Ref<const VectorXd>& theta) const {
        check_theta(theta);
        MatrixXd jac = gradient_impl(theta);
        if (!jac.allFinite()) throw NumericError("gradient: non-finite gradient value");
        return jac;
    }

    /// Objective values and Jacobian estimated on a batch keyed by
    /// (seed, round); identical inputs produce identical outputs.
    std::pair<VectorXd, MatrixXd> stochastic_gradient(const Eigen::Ref<const VectorXd>& theta,
                                                      std::uint64_t seed, int round) const {
        check_theta(theta);
        auto [f, jac] = stochastic_gradient_impl(theta, seed, round);
        if (!f.allFinite() || !jac.allFinite())
            throw NumericError("stochastic_gradient: non-finite value");
        return {std::move(f), std::move(jac)};
    }

protected:
    Problem(Index num_objectives, Index dimension)
        : num_objectives_(num_objectives), dimension_(dimension) {}

    virtual VectorXd evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const = 0;
    virtual MatrixXd gradient_impl(const Eigen::Ref<const VectorXd>& theta) const = 0;

    /// Deterministic problems fall back to the exact values and gradients.
    virtual std::pair<VectorXd, MatrixXd> stochastic_gradient_impl(
        const Eigen::Ref<const VectorXd>& theta, std::uint64_t /*seed*/, int /*round*/) const {
        return {evaluate_impl(theta), gradient_impl(theta)};
    }

private:
    void check_theta(const Eigen::Ref<const VectorXd>& theta) const {
        if (theta.size() != dimension_)
            throw DimensionError("Problem: theta length does not match problem dimension");
        if (!theta.allFinite()) throw ValidationError("Problem: non-finite theta");
    }

    Index num_objectives_;
    Index dimension_;
};

}  // namespace moo
