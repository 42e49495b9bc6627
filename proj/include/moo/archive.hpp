#pragma once

#include <vector>

#include "moo/problem.hpp"
#include "moo/simplex.hpp"
#include "moo/types.hpp"

namespace moo {

/// One retained iterate: its round index, decision vector, objective vector,
/// and redistributed weight (always >= 1: the unit weight plus any mass
/// inherited from iterates it dominates).
struct ArchiveEntry {
    int round = 0;
    VectorXd theta;
    VectorXd objectives;
    double weight = 1.0;
};

/// Archive of mutually non-dominated iterates with weight redistribution.
///
/// Each inserted iterate carries a unit weight. An iterate weakly dominated
/// by archive members is discarded and its unit weight split equally over
/// those members; an iterate that weakly dominates archive members inherits
/// their accumulated weight and evicts them. Total weight therefore always
/// equals the number of inserts, so the adaptive output below is a convex
/// combination of archive members.
///
/// Membership scans are naive O(|archive|) per insert, which is all that desk
/// scale needs. Single-owner mutable structure: not safe for concurrent
/// mutation, safe to move between threads whole.
class ParetoArchive {
public:
    ParetoArchive() = default;

    /// With `merge_duplicates`, a candidate whose objective vector exactly
    /// equals an existing entry's folds its unit weight into that entry
    /// instead of coexisting, bounding archive growth on plateaus.
    explicit ParetoArchive(bool merge_duplicates) : merge_duplicates_(merge_duplicates) {}

    /// Inserts the iterate of round `round`; rounds must arrive in order
    /// 1, 2, 3, ... with finite objective vectors of a fixed length.
    void insert(int round, const Eigen::Ref<const VectorXd>& theta,
                const Eigen::Ref<const VectorXd>& objectives);

    /// Adaptive online-to-batch output: (1/T) * sum of weight * theta over
    /// archive members, where T is the number of inserts so far.
    VectorXd output() const;

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    int inserted_count() const { return inserted_; }
    std::size_t size() const { return entries_.size(); }

    /// Sum of entry weights; equals inserted_count() up to rounding of the
    /// equal splits.
    double total_weight() const;

private:
    std::vector<ArchiveEntry> entries_;
    int inserted_ = 0;
    bool merge_duplicates_ = false;
};

/// Verifies the adaptive-output inequality
///
///   sum_i lambda_i w_i f_i(theta_tilde)
///     <= (1/T) sum_t sum_i lambda_i w_i f_i(theta_t) + slack
///
/// for every supplied lambda, re-evaluating the objectives at the adaptive
/// output. `iterate_objectives` must hold f(theta_t) for rounds 1..T of this
/// archive. The inequality is guaranteed for convex objectives only.
bool check_lemma_b1(const Problem& problem, const ParetoArchive& archive,
                    const std::vector<VectorXd>& iterate_objectives,
                    const std::vector<SimplexWeights>& lambdas, const PreferenceVector& w,
                    double slack = 1e-9);

}  // namespace moo
