#include "moo/problems/fed_logreg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "moo/csv.hpp"
#include "moo/rng.hpp"

namespace moo {

namespace {

// Rng stream ids; batch shuffles use kShuffle combined with (client, epoch).
constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kClusterStream = 2;
constexpr std::uint64_t kShuffleStream = 3;

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

std::vector<int> shuffled_indices(int n, Rng rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i + 1)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    return idx;
}

}  // namespace

FedLogReg::FedLogReg(FedLogRegSpec spec, std::vector<ClientData> clients)
    : Problem(static_cast<Index>(clients.size()), spec.feature_dim + 1),
      spec_(std::move(spec)),
      clients_(std::move(clients)) {}

FedLogReg FedLogReg::generate(const FedLogRegSpec& spec, std::uint64_t seed) {
    // A single client is allowed so the federated simulator can run its
    // degenerate plain-descent case; multi-objective solves still require
    // m >= 2 through the preference-vector contract.
    if (spec.clients < 1) throw ValidationError("FedLogReg: need at least 1 client");
    if (spec.samples_per_client < 10)
        throw ValidationError("FedLogReg: need at least 10 samples per client");
    if (spec.feature_dim < 2) throw ValidationError("FedLogReg: feature_dim must be >= 2");
    if (spec.latent_clusters < 2) throw ValidationError("FedLogReg: need at least 2 clusters");
    if (spec.mode == Heterogeneity::PartialClass &&
        (spec.classes_per_client < 1 || spec.classes_per_client > spec.latent_clusters))
        throw ValidationError("FedLogReg: classes_per_client out of range");
    if (!spec.rotation_angles_deg.empty() &&
        spec.rotation_angles_deg.size() != static_cast<std::size_t>(spec.clients))
        throw ValidationError("FedLogReg: rotation angle count does not match clients");
    if (spec.l2_reg < 0.0) throw ValidationError("FedLogReg: l2_reg must be >= 0");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw ValidationError("FedLogReg: train_fraction must be in (0, 1)");

    std::vector<double> angles = spec.rotation_angles_deg;
    if (spec.mode == Heterogeneity::Rotation && angles.empty()) {
        // Default mix: 70% unrotated, 20% at 45 degrees, the rest at 90. A
        // linear model cannot fit fully opposed rotations at all, so the
        // default keeps the conflict real but learnable.
        const int n0 = static_cast<int>(std::lround(0.7 * spec.clients));
        const int n45 = static_cast<int>(std::lround(0.2 * spec.clients));
        angles.assign(static_cast<std::size_t>(spec.clients), 90.0);
        for (int i = 0; i < spec.clients; ++i) {
            if (i < n0)
                angles[static_cast<std::size_t>(i)] = 0.0;
            else if (i < n0 + n45)
                angles[static_cast<std::size_t>(i)] = 45.0;
        }
    }

    const int k = spec.latent_clusters;
    const int dim = spec.feature_dim;
    constexpr double pi = 3.14159265358979323846;

    std::vector<ClientData> clients;
    clients.reserve(static_cast<std::size_t>(spec.clients));
    for (int c = 0; c < spec.clients; ++c) {
        // Clusters this client samples from.
        std::vector<int> allowed(static_cast<std::size_t>(k));
        std::iota(allowed.begin(), allowed.end(), 0);
        if (spec.mode == Heterogeneity::PartialClass) {
            allowed = shuffled_indices(k, Rng(seed, kClusterStream, static_cast<std::uint64_t>(c)));
            allowed.resize(static_cast<std::size_t>(spec.classes_per_client));
            std::sort(allowed.begin(), allowed.end());
        }
        const double angle = (spec.mode == Heterogeneity::Rotation && !angles.empty())
                                 ? angles[static_cast<std::size_t>(c)] * pi / 180.0
                                 : 0.0;
        const double cos_a = std::cos(angle);
        const double sin_a = std::sin(angle);

        Rng rng(seed, kDataStream, static_cast<std::uint64_t>(c));
        const int n = spec.samples_per_client;
        MatrixXd x(n, dim + 1);
        VectorXd y(n);
        for (int j = 0; j < n; ++j) {
            const int cluster = allowed[rng.uniform_below(allowed.size())];
            // Cluster means sit on a circle in the first two dims; upper-half
            // clusters carry label +1, lower-half -1, so each client's data is
            // linearly separable while rotations put clients' separators in
            // conflict.
            const double phase = 2.0 * pi * (cluster + 0.5) / k;
            const double mx = spec.cluster_radius * std::cos(phase);
            const double my = spec.cluster_radius * std::sin(phase);
            VectorXd mean = VectorXd::Zero(dim);
            mean[0] = cos_a * mx - sin_a * my;
            mean[1] = sin_a * mx + cos_a * my;
            x.row(j).head(dim) = (mean + spec.noise * normal_vector(rng, dim)).transpose();
            x(j, dim) = 1.0;  // bias
            y[j] = std::sin(phase) > 0.0 ? 1.0 : -1.0;
        }
        const int n_train = std::max(1, static_cast<int>(std::lround(spec.train_fraction * n)));
        ClientData data;
        data.train_x = x.topRows(n_train);
        data.train_y = y.head(n_train);
        data.test_x = x.bottomRows(n - n_train);
        data.test_y = y.tail(n - n_train);
        clients.push_back(std::move(data));
    }
    return FedLogReg(spec, std::move(clients));
}

namespace {

double mean_logistic_loss(const MatrixXd& x, const VectorXd& y,
                          const Eigen::Ref<const VectorXd>& theta) {
    const VectorXd margins = x * theta;
    double total = 0.0;
    for (Index j = 0; j < y.size(); ++j) total += softplus(-y[j] * margins[j]);
    return total / static_cast<double>(y.size());
}

VectorXd mean_logistic_gradient(const MatrixXd& x, const VectorXd& y,
                                const Eigen::Ref<const VectorXd>& theta) {
    const VectorXd margins = x * theta;
    VectorXd coeff(y.size());
    for (Index j = 0; j < y.size(); ++j) coeff[j] = -y[j] * sigmoid(-y[j] * margins[j]);
    return x.transpose() * coeff / static_cast<double>(y.size());
}

}  // namespace

double FedLogReg::client_train_loss(int client, const Eigen::Ref<const VectorXd>& theta) const {
    const ClientData& data = clients_[static_cast<std::size_t>(client)];
    return mean_logistic_loss(data.train_x, data.train_y, theta) +
           0.5 * spec_.l2_reg * theta.squaredNorm();
}

VectorXd FedLogReg::client_train_gradient(int client,
                                          const Eigen::Ref<const VectorXd>& theta) const {
    const ClientData& data = clients_[static_cast<std::size_t>(client)];
    return mean_logistic_gradient(data.train_x, data.train_y, theta) + spec_.l2_reg * theta;
}

int FedLogReg::train_size(int client) const {
    return static_cast<int>(clients_[static_cast<std::size_t>(client)].train_y.size());
}

std::vector<int> FedLogReg::batch_indices(int client, std::uint64_t seed,
                                          std::int64_t global_step) const {
    const int n = train_size(client);
    const int batch = (spec_.batch_size <= 0 || spec_.batch_size >= n) ? n : spec_.batch_size;
    const auto steps_per_epoch = static_cast<std::int64_t>((n + batch - 1) / batch);
    const std::int64_t epoch = global_step / steps_per_epoch;
    const std::int64_t slot = global_step % steps_per_epoch;

    const std::uint64_t shuffle_key =
        Rng::key(Rng::key(seed, kShuffleStream, static_cast<std::uint64_t>(client)),
                 static_cast<std::uint64_t>(epoch), 0);
    std::vector<int> order = shuffled_indices(n, Rng(shuffle_key));
    const auto begin = static_cast<std::size_t>(slot * batch);
    const auto end = std::min(static_cast<std::size_t>(n), begin + static_cast<std::size_t>(batch));
    return {order.begin() + static_cast<std::ptrdiff_t>(begin),
            order.begin() + static_cast<std::ptrdiff_t>(end)};
}

std::pair<double, VectorXd> FedLogReg::client_batch_loss_gradient(
    int client, const Eigen::Ref<const VectorXd>& theta, std::uint64_t seed,
    std::int64_t global_step) const {
    const ClientData& data = clients_[static_cast<std::size_t>(client)];
    const int n = train_size(client);
    if (spec_.batch_size <= 0 || spec_.batch_size >= n) {
        return {client_train_loss(client, theta), client_train_gradient(client, theta)};
    }
    const std::vector<int> idx = batch_indices(client, seed, global_step);
    MatrixXd x(static_cast<Index>(idx.size()), data.train_x.cols());
    VectorXd y(static_cast<Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        x.row(static_cast<Index>(j)) = data.train_x.row(idx[j]);
        y[static_cast<Index>(j)] = data.train_y[idx[j]];
    }
    const double loss = mean_logistic_loss(x, y, theta) + 0.5 * spec_.l2_reg * theta.squaredNorm();
    const VectorXd grad = mean_logistic_gradient(x, y, theta) + spec_.l2_reg * theta;
    return {loss, grad};
}

double FedLogReg::client_test_loss(int client, const Eigen::Ref<const VectorXd>& theta) const {
    const ClientData& data = clients_[static_cast<std::size_t>(client)];
    return mean_logistic_loss(data.test_x, data.test_y, theta);
}

double FedLogReg::client_test_accuracy(int client,
                                       const Eigen::Ref<const VectorXd>& theta) const {
    const ClientData& data = clients_[static_cast<std::size_t>(client)];
    const VectorXd margins = data.test_x * theta;
    Index correct = 0;
    for (Index j = 0; j < data.test_y.size(); ++j) {
        const double predicted = margins[j] >= 0.0 ? 1.0 : -1.0;
        if (predicted == data.test_y[j]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(data.test_y.size());
}

VectorXd FedLogReg::evaluate_impl(const Eigen::Ref<const VectorXd>& theta) const {
    VectorXd f(num_objectives());
    for (int i = 0; i < num_clients(); ++i) f[i] = client_train_loss(i, theta);
    return f;
}

MatrixXd FedLogReg::gradient_impl(const Eigen::Ref<const VectorXd>& theta) const {
    MatrixXd jac(num_objectives(), dimension());
    for (int i = 0; i < num_clients(); ++i) jac.row(i) = client_train_gradient(i, theta).transpose();
    return jac;
}

std::pair<VectorXd, MatrixXd> FedLogReg::stochastic_gradient_impl(
    const Eigen::Ref<const VectorXd>& theta, std::uint64_t seed, int round) const {
    VectorXd f(num_objectives());
    MatrixXd jac(num_objectives(), dimension());
    for (int i = 0; i < num_clients(); ++i) {
        auto [loss, grad] = client_batch_loss_gradient(i, theta, seed, round - 1);
        f[i] = loss;
        jac.row(i) = grad.transpose();
    }
    return {f, jac};
}

void FedLogReg::export_csv(std::ostream& out) const {
    const int dim = spec_.feature_dim;
    out << "client_id,label";
    for (int j = 1; j <= dim; ++j) out << ",feature_" << j;
    out << "\n";
    const auto dump = [&](int client, const MatrixXd& x, const VectorXd& y) {
        for (Index r = 0; r < y.size(); ++r) {
            out << client << ',' << static_cast<int>(y[r]);
            for (int j = 0; j < dim; ++j) out << ',' << csv::format_double(x(r, j));
            out << "\n";
        }
    };
    for (int c = 0; c < num_clients(); ++c) {
        dump(c, clients_[static_cast<std::size_t>(c)].train_x,
             clients_[static_cast<std::size_t>(c)].train_y);
        dump(c, clients_[static_cast<std::size_t>(c)].test_x,
             clients_[static_cast<std::size_t>(c)].test_y);
    }
}

}  // namespace moo
