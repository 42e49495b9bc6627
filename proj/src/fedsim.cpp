#include "moo/fedsim.hpp"

#include <cmath>
#include <utility>

#include "moo/archive.hpp"
#include "moo/errors.hpp"
#include "moo/rng.hpp"

namespace moo {

double agnostic_loss(const Eigen::Ref<const VectorXd>& client_losses) {
    if (client_losses.size() == 0) throw ValidationError("agnostic_loss: empty input");
    if (!client_losses.allFinite()) throw ValidationError("agnostic_loss: non-finite entry");
    return client_losses.maxCoeff();
}

double accuracy_parity(const Eigen::Ref<const VectorXd>& client_accuracies) {
    if (client_accuracies.size() == 0) throw ValidationError("accuracy_parity: empty input");
    const double mean = client_accuracies.mean();
    const double variance =
        (client_accuracies.array() - mean).square().sum() /
        static_cast<double>(client_accuracies.size());
    return std::sqrt(variance);
}

const FedSolutionMetrics& FedMetrics::solution(const std::string& name) const {
    for (const FedSolutionMetrics& entry : solutions)
        if (entry.solution == name) return entry;
    throw ValidationError("FedMetrics: no solution named " + name);
}

namespace {

void validate(const FedConfig& config) {
    if (config.rounds < 1) throw ValidationError("FedConfig: rounds must be >= 1");
    if (config.local_steps < 1) throw ValidationError("FedConfig: local_steps must be >= 1");
    if (!(config.local_step_size > 0.0))
        throw ValidationError("FedConfig: local_step_size must be > 0");
    if (!(config.eta_lambda >= 0.0)) throw ValidationError("FedConfig: eta_lambda must be >= 0");
    if (config.method == Method::STCH && !(config.mu > 0.0))
        throw ValidationError("FedConfig: mu must be > 0 for stch");
}

FedSolutionMetrics evaluate_solution(const FedLogReg& problem, const std::string& name,
                                     const VectorXd& theta) {
    const int m = problem.num_clients();
    FedSolutionMetrics metrics;
    metrics.solution = name;
    metrics.theta = theta;
    metrics.client_test_losses.resize(m);
    metrics.client_test_accuracies.resize(m);
    for (int i = 0; i < m; ++i) {
        metrics.client_test_losses[i] = problem.client_test_loss(i, theta);
        metrics.client_test_accuracies[i] = problem.client_test_accuracy(i, theta);
    }
    metrics.agnostic_loss = agnostic_loss(metrics.client_test_losses);
    metrics.accuracy_parity = accuracy_parity(metrics.client_test_accuracies);
    metrics.average_accuracy = metrics.client_test_accuracies.mean();
    return metrics;
}

VectorXd client_train_losses(const FedLogReg& problem, const VectorXd& theta) {
    VectorXd losses(problem.num_clients());
    for (int i = 0; i < problem.num_clients(); ++i)
        losses[i] = problem.client_train_loss(i, theta);
    return losses;
}

}  // namespace

FedMetrics run_federated(const FedLogReg& problem, const FedConfig& config) {
    validate(config);
    const int m = problem.num_clients();
    const Index d = problem.dimension();
    const int rounds = config.rounds;
    const int local_steps = config.local_steps;

    // Degenerate single-client run: plain (stochastic) gradient descent with
    // trivial aggregation; no simplex machinery involved.
    const bool degenerate = m < 2;
    const PreferenceVector w =
        degenerate ? PreferenceVector::uniform(2) : PreferenceVector::uniform(m);
    const NadirPoint z = NadirPoint::zeros(m);
    SimplexWeights lambda = SimplexWeights::uniform(std::max(m, 2));

    Rng init_rng(config.seed, /*stream=*/0, /*index=*/0);
    VectorXd theta = config.init_scale * normal_vector(init_rng, d);

    FedMetrics metrics;
    metrics.trace.reserve(static_cast<std::size_t>(rounds));
    ParetoArchive archive;
    VectorXd theta_sum = VectorXd::Zero(d);
    VectorXd pre_losses = client_train_losses(problem, theta);

    for (int t = 1; t <= rounds; ++t) {
        // Aggregation weights for this round, from the freshest losses.
        VectorXd round_lambda;
        if (degenerate) {
            round_lambda = VectorXd::Ones(1);
        } else {
            switch (config.method) {
                case Method::TCH:
                    round_lambda =
                        SimplexWeights::unit(m, tch_subgradient_index(pre_losses, w, z)).coeffs();
                    break;
                case Method::STCH:
                    round_lambda = stch_weights(pre_losses, w, SmoothingScale(config.mu)).coeffs();
                    break;
                case Method::LS:
                    round_lambda = SimplexWeights::uniform(m).coeffs();
                    break;
                default:
                    round_lambda = lambda.coeffs();
                    break;
            }
        }

        // Local training: every client walks from the shared model.
        MatrixXd deltas(m, d);
        for (int i = 0; i < m; ++i) {
            VectorXd local = theta;
            for (int s = 0; s < local_steps; ++s) {
                const std::int64_t step = static_cast<std::int64_t>(t - 1) * local_steps + s;
                auto [loss, grad] = problem.client_batch_loss_gradient(i, local, config.seed, step);
                (void)loss;
                local -= config.local_step_size * grad;
            }
            deltas.row(i) = (local - theta).transpose();
        }

        // Server aggregation: deltas weighted by m * lambda_i * w_i, which
        // reduces to plain averaging under uniform lambda.
        VectorXd combined = VectorXd::Zero(d);
        for (int i = 0; i < m; ++i) {
            const double weight =
                degenerate ? 1.0 : static_cast<double>(m) * round_lambda[i] * w[i];
            combined += weight * deltas.row(i).transpose();
        }
        theta += combined;
        if (!theta.allFinite()) throw NumericError("run_federated: non-finite global model");

        const VectorXd post_losses = client_train_losses(problem, theta);
        theta_sum += theta;
        if (method_is_adaptive(config.method)) archive.insert(t, theta, post_losses);
        metrics.trace.push_back({t, post_losses.maxCoeff(), round_lambda});

        // End-of-round losses drive the adversarial-weight update.
        if (!degenerate && method_is_omd(config.method)) {
            lambda = method_uses_eg(config.method)
                         ? update_lambda_eg(lambda, post_losses, w, config.eta_lambda)
                         : update_lambda_pgd(lambda, post_losses, w, config.eta_lambda);
        }
        pre_losses = post_losses;
    }

    // Canonical solution first: archive output for adaptive methods, uniform
    // average for Omd methods, final model for the plain scalarizers.
    const VectorXd theta_bar = theta_sum / static_cast<double>(rounds);
    if (method_is_adaptive(config.method)) {
        metrics.solutions.push_back(evaluate_solution(problem, "theta_tilde", archive.output()));
        metrics.solutions.push_back(evaluate_solution(problem, "theta_bar", theta_bar));
        metrics.solutions.push_back(evaluate_solution(problem, "last", theta));
    } else if (method_is_omd(config.method)) {
        metrics.solutions.push_back(evaluate_solution(problem, "theta_bar", theta_bar));
        metrics.solutions.push_back(evaluate_solution(problem, "last", theta));
    } else {
        metrics.solutions.push_back(evaluate_solution(problem, "last", theta));
        metrics.solutions.push_back(evaluate_solution(problem, "theta_bar", theta_bar));
    }
    return metrics;
}

}  // namespace moo
