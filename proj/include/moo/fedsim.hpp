#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moo/problems/fed_logreg.hpp"
#include "moo/solver.hpp"

namespace moo {

/// Federated training configuration. Each communication round, every client
/// runs `local_steps` gradient steps from the shared global model; the server
/// combines the resulting deltas with the current adversarial weights.
struct FedConfig {
    Method method = Method::OmdGd;
    int rounds = 300;
    int local_steps = 10;
    double local_step_size = 0.1;
    double eta_lambda = 1.0;
    double mu = 0.1;  ///< STCH only
    std::uint64_t seed = 0;
    int batch_size = 0;  ///< 0 = full-batch local steps
    double init_scale = 0.1;
};

/// Test-set metrics of one candidate solution.
struct FedSolutionMetrics {
    std::string solution;  ///< "last", "theta_bar", or "theta_tilde"
    VectorXd theta;
    VectorXd client_test_losses;
    VectorXd client_test_accuracies;
    double agnostic_loss = 0.0;
    double accuracy_parity = 0.0;
    double average_accuracy = 0.0;
};

struct FedRoundRow {
    int round = 0;
    double worst_train_loss = 0.0;
    VectorXd lambda;  ///< aggregation weights used this round
};

struct FedMetrics {
    std::vector<FedRoundRow> trace;
    std::vector<FedSolutionMetrics> solutions;

    const FedSolutionMetrics& solution(const std::string& name) const;
    /// Metrics of the method's canonical output: the archive-weighted average
    /// for adaptive methods, the uniform average for Omd methods, and the
    /// last iterate for the plain scalarizers.
    const FedSolutionMetrics& canonical() const { return solutions.front(); }
};

/// Worst-case fairness metric: the maximum entry.
double agnostic_loss(const Eigen::Ref<const VectorXd>& client_losses);

/// Dispersion fairness metric: population standard deviation of the entries.
double accuracy_parity(const Eigen::Ref<const VectorXd>& client_accuracies);

/// Runs federated training of the shared model over the problem's clients
/// with a uniform preference, and reports fairness metrics for every
/// candidate solution the method defines.
FedMetrics run_federated(const FedLogReg& problem, const FedConfig& config);

}  // namespace moo
