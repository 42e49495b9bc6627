#pragma once

#include <Eigen/Core>

#include "moo/errors.hpp"

namespace moo {

/// Outcome of comparing two objective vectors under minimization.
///
/// Comparisons are exact IEEE comparisons with no epsilon, which keeps the
/// relation antisymmetric and archive semantics deterministic.
enum class Dominance {
    StrictDominates,  ///< first vector strictly smaller in every component
    DominatesWeak,    ///< nowhere larger, strictly smaller somewhere (not everywhere)
    Equal,            ///< componentwise identical
    Incomparable,     ///< each vector wins some component
    DominatedWeak,    ///< mirror of DominatesWeak
    StrictDominated,  ///< mirror of StrictDominates
};

/// Classifies the dominance relation of `fa` against `fb`.
///
/// Both arguments must be finite vectors of equal length.
template <typename DerivedA, typename DerivedB>
Dominance dominance(const Eigen::MatrixBase<DerivedA>& fa, const Eigen::MatrixBase<DerivedB>& fb) {
    if (fa.size() != fb.size())
        throw DimensionError("dominance: objective vectors of different lengths");
    if (fa.rows() != 1 && fa.cols() != 1)
        throw DimensionError("dominance: expected vectors, got matrices");
    if (!fa.allFinite() || !fb.allFinite())
        throw ValidationError("dominance: non-finite objective value");

    Eigen::Index below = 0;
    Eigen::Index above = 0;
    for (Eigen::Index i = 0; i < fa.size(); ++i) {
        if (fa(i) < fb(i)) ++below;
        if (fa(i) > fb(i)) ++above;
    }
    const Eigen::Index m = fa.size();
    if (above == 0) {
        if (below == m) return Dominance::StrictDominates;
        if (below > 0) return Dominance::DominatesWeak;
        return Dominance::Equal;
    }
    if (below == 0) {
        if (above == m) return Dominance::StrictDominated;
        return Dominance::DominatedWeak;
    }
    return Dominance::Incomparable;
}

/// Weak Pareto dominance: `fa` nowhere larger than `fb` and strictly smaller
/// on at least one component (strict dominance included).
template <typename DerivedA, typename DerivedB>
bool pareto_dominates(const Eigen::MatrixBase<DerivedA>& fa,
                      const Eigen::MatrixBase<DerivedB>& fb) {
    const Dominance rel = dominance(fa, fb);
    return rel == Dominance::StrictDominates || rel == Dominance::DominatesWeak;
}

}  // namespace moo
