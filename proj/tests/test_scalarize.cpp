#include <doctest.h>

#include <cmath>

#include "moo/rng.hpp"
#include "moo/scalarize.hpp"
#include "oracles.hpp"

using namespace moo;

namespace {

VectorXd vec2(double a, double b) {
    VectorXd v(2);
    v << a, b;
    return v;
}

PreferenceVector pref2(double a, double b) { return PreferenceVector(vec2(a, b)); }

}  // namespace

TEST_CASE("ls_value") {
    CHECK(ls_value(vec2(2, 4), pref2(0.5, 0.5)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(ls_value(vec2(2, 4), pref2(1, 0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ls_value(vec2(2, 1), pref2(0.3, 0.7)) == doctest::Approx(1.3).epsilon(1e-15));
    VectorXd three(3);
    three << 1, 2, 3;
    CHECK_THROWS_AS(ls_value(three, pref2(0.5, 0.5)), DimensionError);
}

TEST_CASE("tch_value with and without a nadir point") {
    CHECK(tch_value(vec2(2, 1), pref2(0.3, 0.7)) == doctest::Approx(0.7).epsilon(1e-15));
    for (double c : {0.0, 0.3, 1.7}) {
        CHECK(tch_value(vec2(c, c), pref2(0.5, 0.5)) ==
              doctest::Approx(0.5 * c).epsilon(1e-15));
    }
    CHECK(tch_value(vec2(2, 1), pref2(0.3, 0.7), NadirPoint(vec2(1, 0))) ==
          doctest::Approx(0.7).epsilon(1e-15));
    // f below the nadir is a contract violation, not a silent clamp.
    CHECK_THROWS_AS(tch_value(vec2(0.5, 1), pref2(0.3, 0.7), NadirPoint(vec2(1, 0))),
                    ValidationError);
}

TEST_CASE("tch_subgradient_index picks the worst objective, ties to lowest") {
    CHECK(tch_subgradient_index(vec2(2, 1), pref2(0.3, 0.7), NadirPoint::zeros(2)) == 1);
    CHECK(tch_subgradient_index(vec2(1, 1), pref2(0.5, 0.5), NadirPoint::zeros(2)) == 0);

    VectorXd f = VectorXd::Ones(10);
    f[2] = 5.0;  // spike
    const PreferenceVector w = PreferenceVector::uniform(10);
    CHECK(tch_subgradient_index(f, w, NadirPoint::zeros(10)) == 2);
}

TEST_CASE("tch_subgradient_index is invariant under common positive rescaling") {
    Rng rng(21, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        VectorXd f(4);
        for (Index i = 0; i < 4; ++i) f[i] = rng.uniform() * 3.0;
        VectorXd raw(4);
        for (Index i = 0; i < 4; ++i) raw[i] = 0.1 + rng.uniform();
        const PreferenceVector w(raw / raw.sum());
        const NadirPoint z = NadirPoint::zeros(4);
        const Index base = tch_subgradient_index(f, w, z);
        for (double scale : {0.1, 7.0}) {
            const VectorXd scaled = scale * f;
            CHECK(tch_subgradient_index(scaled, w, z) == base);
        }
    }
}

TEST_CASE("stch_value matches hand evaluation and the log-sum-exp sandwich") {
    CHECK(stch_value(vec2(1, 1), pref2(0.5, 0.5), SmoothingScale(1.0)) ==
          doctest::Approx(0.5 + std::log(2.0)).epsilon(1e-15));
    // independent unshifted evaluation, safe at this scale
    const double direct = 0.5 * std::log(std::exp(1.2) + std::exp(1.4));
    CHECK(stch_value(vec2(2, 1), pref2(0.3, 0.7), SmoothingScale(0.5)) ==
          doctest::Approx(direct).epsilon(1e-12));

    Rng rng(13, 0, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const Index m = 2 + static_cast<Index>(rng.uniform_below(5));
        VectorXd f(m);
        for (Index i = 0; i < m; ++i) f[i] = 3.0 * rng.uniform();
        VectorXd raw(m);
        for (Index i = 0; i < m; ++i) raw[i] = 0.05 + rng.uniform();
        const PreferenceVector w(raw / raw.sum());
        const double mu = 0.01 + 2.0 * rng.uniform();
        const double hard = tch_value(f, w);
        const double smooth = stch_value(f, w, SmoothingScale(mu));
        CHECK(smooth >= hard - 1e-12);
        CHECK(smooth <= hard + mu * std::log(static_cast<double>(m)) + 1e-12);
    }
}

TEST_CASE("stch_weights: softmax structure and limits") {
    const SimplexWeights uniform = stch_weights(vec2(3, 3), pref2(0.5, 0.5), SmoothingScale(0.7));
    CHECK(uniform[0] == doctest::Approx(0.5).epsilon(1e-15));

    const SimplexWeights spiked =
        stch_weights(vec2(1.0, 0.2), pref2(0.5, 0.5), SmoothingScale(1e-6));
    CHECK(spiked[0] >= 1.0 - 1e-6);

    const SimplexWeights hand =
        stch_weights(vec2(2.0 * std::log(3.0), 0.0), pref2(0.5, 0.5), SmoothingScale(1.0));
    CHECK(hand[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(hand[1] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("gradient of stch_value w.r.t. f equals the weighted softmax") {
    Rng rng(17, 0, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Index m = 2 + static_cast<Index>(rng.uniform_below(4));
        VectorXd f(m);
        for (Index i = 0; i < m; ++i) f[i] = 2.0 * rng.uniform();
        VectorXd raw(m);
        for (Index i = 0; i < m; ++i) raw[i] = 0.1 + rng.uniform();
        const PreferenceVector w(raw / raw.sum());
        const SmoothingScale mu(0.2 + rng.uniform());

        const VectorXd analytic =
            stch_weights(f, w, mu).coeffs().cwiseProduct(w.coeffs());
        const double h = 1e-6;
        for (Index i = 0; i < m; ++i) {
            VectorXd up = f, down = f;
            up[i] += h;
            down[i] -= h;
            const double fd =
                (stch_value(up, w, mu) - stch_value(down, w, mu)) / (2.0 * h);
            CHECK(analytic[i] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("composite_gradient combines preference-weighted rows") {
    MatrixXd jac = MatrixXd::Identity(2, 2);
    const VectorXd combined =
        composite_gradient(jac, SimplexWeights::uniform(2), pref2(0.5, 0.5));
    CHECK(combined[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(combined[1] == doctest::Approx(0.25).epsilon(1e-15));

    MatrixXd wide(2, 3);
    wide << 1, 2, 3, 4, 5, 6;
    const VectorXd hot = composite_gradient(wide, SimplexWeights::unit(2, 1), pref2(0.3, 0.7));
    CHECK((hot - 0.7 * wide.row(1).transpose()).cwiseAbs().maxCoeff() <= 1e-15);

    // preference concentrated on row 0, uniform lambda
    const VectorXd padded = composite_gradient(wide, SimplexWeights::uniform(2), pref2(1, 0));
    CHECK((padded - 0.5 * wide.row(0).transpose()).cwiseAbs().maxCoeff() <= 1e-15);

    MatrixXd tall(3, 2);
    tall.setOnes();
    CHECK_THROWS_AS(composite_gradient(tall, SimplexWeights::uniform(2), pref2(0.5, 0.5)),
                    DimensionError);
}

TEST_CASE("composite_gradient is linear in the Jacobian and the weights") {
    Rng rng(19, 0, 0);
    MatrixXd jac_a(3, 4), jac_b(3, 4);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 4; ++j) {
            jac_a(i, j) = rng.normal();
            jac_b(i, j) = rng.normal();
        }
    const PreferenceVector w = PreferenceVector::uniform(3);
    const SimplexWeights c1(oracles::random_simplex_point(rng, 3));
    const SimplexWeights c2(oracles::random_simplex_point(rng, 3));

    const VectorXd sum_rule = composite_gradient(jac_a + jac_b, c1, w);
    CHECK((sum_rule - composite_gradient(jac_a, c1, w) - composite_gradient(jac_b, c1, w))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);

    const double alpha = 0.3;
    const SimplexWeights mix(alpha * c1.coeffs() + (1 - alpha) * c2.coeffs());
    const VectorXd mix_rule = composite_gradient(jac_a, mix, w);
    CHECK((mix_rule - alpha * composite_gradient(jac_a, c1, w) -
           (1 - alpha) * composite_gradient(jac_a, c2, w))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
}
