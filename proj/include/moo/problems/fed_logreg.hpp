#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "moo/problem.hpp"

namespace moo {

/// How client datasets differ from one another.
enum class Heterogeneity {
    Rotation,      ///< per-client rotation of the latent cluster means
    PartialClass,  ///< each client samples from a subset of the latent clusters
};

/// Generation recipe for the synthetic federated logistic-regression problem.
///
/// Samples come from a mixture of latent Gaussian clusters placed on a circle
/// in the first two feature dimensions; even clusters carry label +1, odd
/// clusters -1. Rotation mode rotates each client's cluster means by its
/// assigned angle; partial-class mode restricts each client to
/// `classes_per_client` clusters.
struct FedLogRegSpec {
    int clients = 10;
    int samples_per_client = 200;
    int feature_dim = 5;
    Heterogeneity mode = Heterogeneity::Rotation;
    int classes_per_client = 2;  ///< partial-class mode only
    /// Rotation angles per client (degrees). Empty selects the default
    /// pattern: 70% of clients at 0, 20% at 90, the rest at 180.
    std::vector<double> rotation_angles_deg;
    int latent_clusters = 10;
    double cluster_radius = 2.0;
    double noise = 0.6;
    double l2_reg = 1e-3;
    int batch_size = 0;  ///< 0 = full batch
    double train_fraction = 0.8;
};

/// Federated logistic regression: objective i is client i's mean logistic
/// training loss plus an L2 ridge term, so every objective is convex and
/// nonnegative. The decision vector has length feature_dim + 1 (bias last).
class FedLogReg : public Problem {
public:
    static FedLogReg generate(const FedLogRegSpec& spec, std::uint64_t seed);

    bool is_stochastic() const override { return true; }

    int num_clients() const { return static_cast<int>(clients_.size()); }
    double l2_reg() const { return spec_.l2_reg; }
    const FedLogRegSpec& spec() const { return spec_; }

    /// Full-batch training loss / gradient of one client's objective.
    double client_train_loss(int client, const Eigen::Ref<const VectorXd>& theta) const;
    VectorXd client_train_gradient(int client, const Eigen::Ref<const VectorXd>& theta) const;

    /// Loss and gradient on the mini-batch selected for `global_step`.
    /// Batches walk a per-epoch shuffled permutation, so the batches of one
    /// epoch are disjoint and cover the client's training data exactly once.
    std::pair<double, VectorXd> client_batch_loss_gradient(
        int client, const Eigen::Ref<const VectorXd>& theta, std::uint64_t seed,
        std::int64_t global_step) const;

    /// Index set of the batch used at `global_step` (exposed for tests).
    std::vector<int> batch_indices(int client, std::uint64_t seed, std::int64_t global_step) const;

    int train_size(int client) const;

    /// Unregularized metrics on the held-out 20% split.
    double client_test_loss(int client, const Eigen::Ref<const VectorXd>& theta) const;
    double client_test_accuracy(int client, const Eigen::Ref<const VectorXd>& theta) const;

    /// Plain CSV dump: client_id,label,feature_1..feature_k (raw features,
    /// train rows then test rows per client).
    void export_csv(std::ostream& out) const;

protected:
    VectorXd evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const override;
    MatrixXd gradient_impl(const Eigen::Ref<const VectorXd>& theta) const override;
    std::pair<VectorXd, MatrixXd> stochastic_gradient_impl(const Eigen::Ref<const VectorXd>& theta,
                                                           std::uint64_t seed,
                                                           int round) const override;

private:
    struct ClientData {
        MatrixXd train_x;  ///< lifted rows [features, 1]
        VectorXd train_y;  ///< labels in {-1, +1}
        MatrixXd test_x;
        VectorXd test_y;
    };

    FedLogReg(FedLogRegSpec spec, std::vector<ClientData> clients);

    FedLogRegSpec spec_;
    std::vector<ClientData> clients_;
};

}  // namespace moo
