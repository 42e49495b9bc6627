#include <doctest.h>

#include <cmath>

#include "moo/fedsim.hpp"
#include "moo/rng.hpp"
#include "oracles.hpp"

using namespace moo;

TEST_CASE("agnostic_loss and accuracy_parity") {
    VectorXd losses(3);
    losses << 0.2, 0.5, 0.3;
    CHECK(agnostic_loss(losses) == 0.5);
    VectorXd single(1);
    single << 0.7;
    CHECK(agnostic_loss(single) == 0.7);
    CHECK(agnostic_loss(VectorXd::Constant(4, 0.31)) == 0.31);
    CHECK_THROWS_AS(agnostic_loss(VectorXd()), ValidationError);

    CHECK(accuracy_parity(VectorXd::Constant(5, 0.8)) == 0.0);
    VectorXd accs(3);
    accs << 0.9, 0.8, 0.7;
    CHECK(accuracy_parity(accs) == doctest::Approx(std::sqrt(0.02 / 3.0)).epsilon(1e-12));
    VectorXd two(2);
    two << 1.0, 0.0;
    CHECK(accuracy_parity(two) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(accuracy_parity(VectorXd()), ValidationError);
}

TEST_CASE("the worst loss dominates every weighted average of client losses") {
    Rng rng(67, 0, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const Index m = 1 + static_cast<Index>(rng.uniform_below(8));
        VectorXd losses(m);
        for (Index i = 0; i < m; ++i) losses[i] = 3.0 * rng.uniform();
        const VectorXd weights = oracles::random_simplex_point(rng, std::max<Index>(m, 1));
        CHECK(weights.head(m).dot(losses) <= agnostic_loss(losses) + 1e-12);
    }
}

TEST_CASE("single client with one local step reproduces plain gradient descent") {
    FedLogRegSpec spec;
    spec.clients = 1;
    spec.samples_per_client = 40;
    spec.feature_dim = 3;
    const FedLogReg problem = FedLogReg::generate(spec, 2);

    FedConfig config;
    config.method = Method::OmdGd;
    config.rounds = 25;
    config.local_steps = 1;
    config.local_step_size = 0.2;
    config.eta_lambda = 0.0;
    config.seed = 2;
    const FedMetrics metrics = run_federated(problem, config);

    // hand-rolled descent with the same init stream and batch keys
    Rng init(2, 0, 0);
    VectorXd theta = config.init_scale * normal_vector(init, problem.dimension());
    for (int t = 1; t <= config.rounds; ++t) {
        const auto [loss, grad] = problem.client_batch_loss_gradient(
            0, theta, config.seed, static_cast<std::int64_t>(t - 1));
        theta -= config.local_step_size * grad;
    }
    CHECK(metrics.solution("last").theta == theta);
    CHECK(metrics.solution("last").accuracy_parity == 0.0);
    CHECK(metrics.trace.front().lambda.size() == 1);
}

TEST_CASE("zero weight step keeps the aggregation uniform throughout") {
    FedLogRegSpec spec;
    spec.clients = 4;
    spec.samples_per_client = 30;
    const FedLogReg problem = FedLogReg::generate(spec, 5);

    FedConfig config;
    config.method = Method::OmdGd;
    config.rounds = 12;
    config.local_steps = 2;
    config.eta_lambda = 0.0;
    config.seed = 5;
    const FedMetrics metrics = run_federated(problem, config);
    for (const FedRoundRow& row : metrics.trace) {
        CHECK((row.lambda.array() == 0.25).all());
    }
}

TEST_CASE("homogeneous clients keep lambda near uniform") {
    FedLogRegSpec spec;
    spec.clients = 5;
    spec.samples_per_client = 300;
    spec.rotation_angles_deg.assign(5, 0.0);
    const FedLogReg problem = FedLogReg::generate(spec, 8);

    FedConfig config;
    config.method = Method::OmdGd;
    config.rounds = 150;
    config.local_steps = 5;
    config.local_step_size = 0.1;
    config.eta_lambda = 1.0;
    config.seed = 8;
    const FedMetrics metrics = run_federated(problem, config);
    double worst_deviation = 0.0;
    for (const FedRoundRow& row : metrics.trace)
        worst_deviation =
            std::max(worst_deviation, (row.lambda.array() - 0.2).abs().maxCoeff());
    CHECK(worst_deviation <= 0.05);
}

TEST_CASE("federated runs are reproducible bit for bit") {
    FedLogRegSpec spec;
    spec.clients = 3;
    spec.samples_per_client = 40;
    const FedLogReg problem = FedLogReg::generate(spec, 13);

    FedConfig config;
    config.method = Method::AdaOmdEg;
    config.rounds = 30;
    config.local_steps = 3;
    config.seed = 13;
    const FedMetrics a = run_federated(problem, config);
    const FedMetrics b = run_federated(problem, config);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t t = 0; t < a.trace.size(); ++t) {
        CHECK(a.trace[t].worst_train_loss == b.trace[t].worst_train_loss);
        CHECK(a.trace[t].lambda == b.trace[t].lambda);
    }
    CHECK(a.solution("theta_tilde").theta == b.solution("theta_tilde").theta);
    CHECK(a.solution("theta_bar").theta == b.solution("theta_bar").theta);
}

TEST_CASE("adaptive methods report all three candidate solutions") {
    FedLogRegSpec spec;
    spec.clients = 3;
    spec.samples_per_client = 30;
    const FedLogReg problem = FedLogReg::generate(spec, 17);

    FedConfig config;
    config.method = Method::AdaOmdGd;
    config.rounds = 10;
    config.local_steps = 2;
    config.seed = 17;
    const FedMetrics metrics = run_federated(problem, config);
    CHECK(metrics.canonical().solution == "theta_tilde");
    CHECK(metrics.solutions.size() == 3);
    CHECK_THROWS_AS(metrics.solution("nope"), ValidationError);

    config.method = Method::LS;
    CHECK(run_federated(problem, config).canonical().solution == "last");
    config.method = Method::OmdEg;
    CHECK(run_federated(problem, config).canonical().solution == "theta_bar");
}

TEST_CASE("federated configuration is validated") {
    FedLogRegSpec spec;
    spec.clients = 2;
    spec.samples_per_client = 20;
    const FedLogReg problem = FedLogReg::generate(spec, 1);
    FedConfig config;
    config.rounds = 0;
    CHECK_THROWS_AS(run_federated(problem, config), ValidationError);
    config.rounds = 5;
    config.local_steps = 0;
    CHECK_THROWS_AS(run_federated(problem, config), ValidationError);
    config.local_steps = 2;
    config.eta_lambda = -0.5;
    CHECK_THROWS_AS(run_federated(problem, config), ValidationError);
}
