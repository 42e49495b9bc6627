#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "moo/errors.hpp"
#include "moo/types.hpp"

namespace moo {

namespace detail {

/// Shared constructor logic for simplex-constrained vectors: entries must be
/// finite and nonnegative, and the sum may deviate from 1 by at most
/// kSimplexInputTol before the input is rejected instead of normalized.
inline VectorXd checked_simplex(VectorXd v, Index min_size, const char* what) {
    if (v.size() < min_size) throw DimensionError(std::string(what) + ": too few entries");
    if (!v.allFinite()) throw ValidationError(std::string(what) + ": non-finite entry");
    if ((v.array() < 0.0).any()) throw ValidationError(std::string(what) + ": negative entry");
    const double sum = v.sum();
    if (std::abs(sum - 1.0) > kSimplexInputTol)
        throw ValidationError(std::string(what) + ": entries do not sum to 1");
    if (sum != 1.0) v /= sum;
    return v;
}

}  // namespace detail

/// Weights on the probability simplex: nonnegative entries summing to one
/// within kSimplexSumTol. Inputs off by at most kSimplexInputTol are
/// normalized on construction; anything worse is rejected.
class SimplexWeights {
public:
    explicit SimplexWeights(VectorXd lambda)
        : lambda_(detail::checked_simplex(std::move(lambda), 1, "SimplexWeights")) {}

    static SimplexWeights uniform(Index m) {
        return SimplexWeights(VectorXd::Constant(m, 1.0 / static_cast<double>(m)));
    }

    /// One unit of mass on component `i`, zero elsewhere.
    static SimplexWeights unit(Index m, Index i) {
        VectorXd v = VectorXd::Zero(m);
        v[i] = 1.0;
        return SimplexWeights(std::move(v));
    }

    const VectorXd& coeffs() const { return lambda_; }
    Index size() const { return lambda_.size(); }
    double operator[](Index i) const { return lambda_[i]; }

private:
    VectorXd lambda_;
};

/// User preference over m >= 2 objectives; simplex invariants as above.
class PreferenceVector {
public:
    explicit PreferenceVector(VectorXd w)
        : w_(detail::checked_simplex(std::move(w), 2, "PreferenceVector")) {}

    static PreferenceVector uniform(Index m) {
        return PreferenceVector(VectorXd::Constant(m, 1.0 / static_cast<double>(m)));
    }

    const VectorXd& coeffs() const { return w_; }
    Index size() const { return w_.size(); }
    double operator[](Index i) const { return w_[i]; }

private:
    VectorXd w_;
};

/// Euclidean projection onto the probability simplex.
///
/// Sort-based O(m log m) algorithm: sort descending, find the largest prefix
/// whose shifted entries stay positive, subtract the prefix threshold and
/// clamp at zero. Idempotent on simplex members.
template <typename Derived>
Vector<typename Derived::Scalar> project_to_simplex(const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    if (v.size() < 2) throw DimensionError("project_to_simplex: need at least 2 entries");
    if (!v.allFinite()) throw ValidationError("project_to_simplex: non-finite entry");

    Vector<Scalar> sorted = v;
    std::sort(sorted.data(), sorted.data() + sorted.size(), std::greater<Scalar>());

    Scalar prefix_sum = 0;
    Scalar threshold = 0;
    for (Index j = 0; j < sorted.size(); ++j) {
        prefix_sum += sorted[j];
        const Scalar candidate = (prefix_sum - Scalar(1)) / static_cast<Scalar>(j + 1);
        if (sorted[j] - candidate > Scalar(0)) threshold = candidate;
    }
    return (v.array() - threshold).cwiseMax(Scalar(0)).matrix();
}

/// Projection returning the simplex-constrained strong type.
inline SimplexWeights project_simplex(const Eigen::Ref<const VectorXd>& v) {
    return SimplexWeights(project_to_simplex(v));
}

}  // namespace moo
