#include <doctest.h>

#include "moo/simplex.hpp"
#include "moo/rng.hpp"
#include "oracles.hpp"

using namespace moo;

TEST_CASE("projection is the identity on simplex members") {
    VectorXd uniform = VectorXd::Constant(3, 1.0 / 3.0);
    const VectorXd projected = project_to_simplex(uniform);
    CHECK(projected == uniform);

    VectorXd interior(4);
    interior << 0.1, 0.2, 0.3, 0.4;
    CHECK((project_to_simplex(interior) - interior).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("projection snaps exterior points to the nearest vertex or face") {
    VectorXd v(2);
    v << 2, 0;
    VectorXd expected(2);
    expected << 1, 0;
    CHECK(project_to_simplex(v) == expected);
}

TEST_CASE("projection matches the KKT solution on the 2-simplex") {
    VectorXd v(2);
    v << 0.6, 0.8;
    const VectorXd projected = project_to_simplex(v);
    CHECK(projected[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(projected[1] == doctest::Approx(0.6).epsilon(1e-12));

    // Dense sweep of the 2-simplex confirms no closer feasible point.
    const double reference = (projected - v).norm();
    for (int k = 0; k <= 200000; ++k) {
        const double t = static_cast<double>(k) / 200000.0;
        VectorXd s(2);
        s << t, 1.0 - t;
        CHECK((s - v).norm() >= reference - 1e-9);
    }
}

TEST_CASE("projection satisfies simplex invariants and optimality") {
    Rng rng(3, 0, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng.uniform_below(7));
        VectorXd v(dim);
        for (Index i = 0; i < dim; ++i) v[i] = 3.0 * rng.normal();
        const VectorXd p = project_to_simplex(v);
        CHECK(std::abs(p.sum() - 1.0) <= kSimplexSumTol);
        CHECK(p.minCoeff() >= 0.0);
        // idempotent
        CHECK((project_to_simplex(p) - p).cwiseAbs().maxCoeff() <= 1e-15);
    }

    // No random simplex point may be closer to v than the projection.
    Rng point_rng(4, 0, 0);
    VectorXd v(5);
    for (Index i = 0; i < 5; ++i) v[i] = 2.0 * point_rng.normal();
    const VectorXd p = project_to_simplex(v);
    for (int trial = 0; trial < 1000; ++trial) {
        const VectorXd s = oracles::random_simplex_point(point_rng, 5);
        CHECK((p - v).norm() <= (s - v).norm() + 1e-9);
    }
}

TEST_CASE("projection agrees with the support-enumeration oracle") {
    Rng rng(5, 0, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        VectorXd v(5);
        for (Index i = 0; i < 5; ++i) v[i] = 4.0 * rng.normal();
        const VectorXd fast = project_to_simplex(v);
        const VectorXd exact = oracles::simplex_projection_bruteforce(v);
        CHECK((fast - exact).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("projection rejects bad inputs") {
    VectorXd one(1);
    one << 1.0;
    CHECK_THROWS_AS(project_to_simplex(one), DimensionError);
    VectorXd bad(2);
    bad << 1.0, std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(project_to_simplex(bad), ValidationError);
}

TEST_CASE("weight constructors normalize small deviations and reject large ones") {
    VectorXd near(2);
    near << 0.5, 0.5 + 1e-7;
    const PreferenceVector w(near);
    CHECK(std::abs(w.coeffs().sum() - 1.0) <= kSimplexSumTol);

    VectorXd off(2);
    off << 0.5, 0.501;
    CHECK_THROWS_AS(PreferenceVector{off}, ValidationError);

    VectorXd negative(2);
    negative << 1.1, -0.1;
    CHECK_THROWS_AS(SimplexWeights{negative}, ValidationError);

    VectorXd single(1);
    single << 1.0;
    CHECK_THROWS_AS(PreferenceVector{single}, DimensionError);
    CHECK(SimplexWeights(single).size() == 1);  // lambda may be degenerate, preferences may not

    CHECK(PreferenceVector::uniform(4).coeffs().sum() == doctest::Approx(1.0).epsilon(1e-15));
    const SimplexWeights hot = SimplexWeights::unit(3, 1);
    CHECK(hot[0] == 0.0);
    CHECK(hot[1] == 1.0);
}
