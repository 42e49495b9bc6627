#include "moo/archive.hpp"

#include <algorithm>

#include "moo/dominance.hpp"
#include "moo/errors.hpp"

namespace moo {

void ParetoArchive::insert(int round, const Eigen::Ref<const VectorXd>& theta,
                           const Eigen::Ref<const VectorXd>& objectives) {
    if (round != inserted_ + 1) throw ValidationError("ParetoArchive: rounds must arrive in order");
    if (!objectives.allFinite() || !theta.allFinite())
        throw ValidationError("ParetoArchive: non-finite insert");
    if (!entries_.empty()) {
        if (objectives.size() != entries_.front().objectives.size() ||
            theta.size() != entries_.front().theta.size())
            throw DimensionError("ParetoArchive: insert does not match existing entries");
    }
    inserted_ = round;

    if (merge_duplicates_) {
        for (ArchiveEntry& entry : entries_) {
            if (entry.objectives.size() == objectives.size() &&
                (entry.objectives.array() == objectives.array()).all()) {
                entry.weight += 1.0;
                return;
            }
        }
    }

    // Entries weakly dominating the candidate: discard it and split its unit
    // weight equally among them.
    std::vector<std::size_t> dominators;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (pareto_dominates(entries_[i].objectives, objectives)) dominators.push_back(i);
    }
    if (!dominators.empty()) {
        const double share = 1.0 / static_cast<double>(dominators.size());
        for (std::size_t i : dominators) entries_[i].weight += share;
        return;
    }

    // Otherwise the candidate joins with a unit weight, inheriting the weight
    // of every entry it weakly dominates before those are evicted.
    ArchiveEntry candidate{round, theta, objectives, 1.0};
    double inherited = 0.0;
    const auto dominated = [&](const ArchiveEntry& entry) {
        if (pareto_dominates(objectives, entry.objectives)) {
            inherited += entry.weight;
            return true;
        }
        return false;
    };
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(), dominated), entries_.end());
    candidate.weight += inherited;
    entries_.push_back(std::move(candidate));
}

VectorXd ParetoArchive::output() const {
    if (inserted_ == 0) throw ValidationError("ParetoArchive: output of empty archive");
    VectorXd sum = VectorXd::Zero(entries_.front().theta.size());
    for (const ArchiveEntry& entry : entries_) sum += entry.weight * entry.theta;
    return sum / static_cast<double>(inserted_);
}

double ParetoArchive::total_weight() const {
    double sum = 0.0;
    for (const ArchiveEntry& entry : entries_) sum += entry.weight;
    return sum;
}

bool check_lemma_b1(const Problem& problem, const ParetoArchive& archive,
                    const std::vector<VectorXd>& iterate_objectives,
                    const std::vector<SimplexWeights>& lambdas, const PreferenceVector& w,
                    double slack) {
    if (archive.inserted_count() == 0)
        throw ValidationError("check_lemma_b1: empty archive");
    if (iterate_objectives.size() != static_cast<std::size_t>(archive.inserted_count()))
        throw DimensionError("check_lemma_b1: iterate list does not cover rounds 1..T");

    const double rounds = static_cast<double>(archive.inserted_count());
    VectorXd mean_objectives = VectorXd::Zero(w.size());
    for (const VectorXd& f : iterate_objectives) {
        if (f.size() != w.size()) throw DimensionError("check_lemma_b1: objective length mismatch");
        mean_objectives += f;
    }
    mean_objectives /= rounds;

    const VectorXd f_tilde = problem.evaluate(archive.output());
    for (const SimplexWeights& lambda : lambdas) {
        if (lambda.size() != w.size())
            throw DimensionError("check_lemma_b1: lambda length mismatch");
        const VectorXd weights = lambda.coeffs().cwiseProduct(w.coeffs());
        if (weights.dot(f_tilde) > weights.dot(mean_objectives) + slack) return false;
    }
    return true;
}

}  // namespace moo
