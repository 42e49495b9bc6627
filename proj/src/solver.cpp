#include "moo/solver.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "moo/errors.hpp"
#include "moo/rng.hpp"

namespace moo {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::LS, "ls"},
    {Method::TCH, "tch"},
    {Method::STCH, "stch"},
    {Method::OmdGd, "omd-gd"},
    {Method::OmdEg, "omd-eg"},
    {Method::AdaOmdGd, "adaomd-gd"},
    {Method::AdaOmdEg, "adaomd-eg"},
}};

}  // namespace

bool method_is_omd(Method method) {
    return method == Method::OmdGd || method == Method::OmdEg || method == Method::AdaOmdGd ||
           method == Method::AdaOmdEg;
}

bool method_is_adaptive(Method method) {
    return method == Method::AdaOmdGd || method == Method::AdaOmdEg;
}

bool method_uses_eg(Method method) {
    return method == Method::OmdEg || method == Method::AdaOmdEg;
}

std::string_view method_name(Method method) {
    for (const auto& [value, name] : kMethodNames)
        if (value == method) return name;
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [value, candidate] : kMethodNames)
        if (candidate == name) return value;
    return std::nullopt;
}

std::string method_names_joined() {
    std::string joined;
    for (const auto& [value, name] : kMethodNames) {
        if (!joined.empty()) joined += ", ";
        joined += name;
    }
    return joined;
}

VectorXd update_theta(const Eigen::Ref<const VectorXd>& theta,
                      const Eigen::Ref<const MatrixXd>& jacobian, const SimplexWeights& lambda,
                      const PreferenceVector& w, double eta_theta, std::optional<double> box) {
    if (jacobian.cols() != theta.size())
        throw DimensionError("update_theta: Jacobian column count does not match theta");
    VectorXd next = theta - eta_theta * composite_gradient(jacobian, lambda, w);
    if (box) next = next.cwiseMax(-*box).cwiseMin(*box);
    if (!next.allFinite()) throw NumericError("update_theta: non-finite iterate");
    return next;
}

SimplexWeights update_lambda_pgd(const SimplexWeights& lambda,
                                 const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                                 double eta_lambda) {
    if (f.size() != lambda.size() || f.size() != w.size())
        throw DimensionError("update_lambda_pgd: length mismatch");
    if (!f.allFinite()) throw ValidationError("update_lambda_pgd: non-finite objectives");
    if (eta_lambda == 0.0) return lambda;
    // Ascent: the weights chase the larger preference-weighted losses.
    return project_simplex(lambda.coeffs() + eta_lambda * w.coeffs().cwiseProduct(f));
}

SimplexWeights update_lambda_eg(const SimplexWeights& lambda, const Eigen::Ref<const VectorXd>& f,
                                const PreferenceVector& w, double eta_lambda) {
    if (f.size() != lambda.size() || f.size() != w.size())
        throw DimensionError("update_lambda_eg: length mismatch");
    if (!f.allFinite()) throw ValidationError("update_lambda_eg: non-finite objectives");
    if ((lambda.coeffs().array() == 0.0).any())
        throw ValidationError("update_lambda_eg: lambda has a zero entry");
    if (eta_lambda == 0.0) return lambda;
    const VectorXd exponent = eta_lambda * w.coeffs().cwiseProduct(f);
    const double shift = exponent.maxCoeff();
    const VectorXd scaled =
        lambda.coeffs().array() * (exponent.array() - shift).exp();
    return SimplexWeights(scaled / scaled.sum());
}

namespace {

void validate(const SolverConfig& config) {
    if (config.rounds < 1) throw ValidationError("SolverConfig: rounds must be >= 1");
    if (!(config.eta_theta > 0.0)) throw ValidationError("SolverConfig: eta_theta must be > 0");
    if (!(config.eta_lambda >= 0.0)) throw ValidationError("SolverConfig: eta_lambda must be >= 0");
    if (config.method == Method::STCH && !(config.mu > 0.0))
        throw ValidationError("SolverConfig: mu must be > 0 for stch");
    if (config.theta_box && !(*config.theta_box > 0.0))
        throw ValidationError("SolverConfig: theta_box must be > 0");
    if (!(config.init_scale >= 0.0)) throw ValidationError("SolverConfig: init_scale must be >= 0");
}

}  // namespace

SolveResult run(const Problem& problem, const SolverConfig& config) {
    validate(config);
    const Index m = problem.num_objectives();
    const Index d = problem.dimension();
    const PreferenceVector w = config.preference ? *config.preference : PreferenceVector::uniform(m);
    if (w.size() != m)
        throw DimensionError("run: preference length does not match objective count");
    const NadirPoint z = config.nadir ? *config.nadir : NadirPoint::zeros(m);
    if (z.size() != m) throw DimensionError("run: nadir length does not match objective count");

    Rng init_rng(config.seed, /*stream=*/0, /*index=*/0);
    VectorXd theta = config.init_scale * normal_vector(init_rng, d);
    if (config.theta_box) theta = theta.cwiseMax(-*config.theta_box).cwiseMin(*config.theta_box);
    SimplexWeights lambda = SimplexWeights::uniform(m);

    const int rounds = config.rounds;
    SolveResult result;
    result.trace.reserve(static_cast<std::size_t>(rounds));
    result.iterates.reserve(static_cast<std::size_t>(rounds));
    result.archive = ParetoArchive(config.merge_duplicate_objectives);
    VectorXd theta_sum = VectorXd::Zero(d);

    const bool stochastic = config.stochastic && problem.is_stochastic();
    for (int t = 1; t <= rounds; ++t) {
        VectorXd f;
        MatrixXd jacobian;
        if (stochastic) {
            std::tie(f, jacobian) = problem.stochastic_gradient(theta, config.seed, t);
        } else {
            f = problem.evaluate(theta);
            jacobian = problem.gradient(theta);
        }

        if (method_is_adaptive(config.method)) result.archive.insert(t, theta, f);

        // Weights steering this round's theta step.
        SimplexWeights round_lambda = [&] {
            switch (config.method) {
                case Method::TCH:
                    return SimplexWeights::unit(m, tch_subgradient_index(f, w, z));
                case Method::STCH:
                    return stch_weights(f, w, SmoothingScale(config.mu));
                default:
                    return lambda;  // LS keeps the frozen uniform weights
            }
        }();

        result.trace.push_back(
            {t, f, round_lambda.coeffs(), tch_value(f, w, z), result.archive.size()});

        // Adversarial weights advance first, but from the same round-t
        // quantities, so the theta step below still sees round_lambda.
        if (method_is_omd(config.method)) {
            lambda = method_uses_eg(config.method)
                         ? update_lambda_eg(lambda, f, w, config.eta_lambda)
                         : update_lambda_pgd(lambda, f, w, config.eta_lambda);
        }

        result.iterates.push_back(theta);
        theta_sum += theta;
        theta = update_theta(theta, jacobian, round_lambda, w, config.eta_theta, config.theta_box);
    }

    result.theta_bar = theta_sum / static_cast<double>(rounds);
    result.f_bar = problem.evaluate(result.theta_bar);
    if (method_is_adaptive(config.method)) {
        result.theta_tilde = result.archive.output();
        result.f_tilde = problem.evaluate(*result.theta_tilde);
    }
    return result;
}

namespace {

void validate(const BoundConstants& constants) {
    if (!(constants.objective_bound > 0.0))
        throw ValidationError("BoundConstants: objective bound must be > 0");
    if (!(constants.gradient_bound > 0.0))
        throw ValidationError("BoundConstants: gradient bound must be > 0");
    if (!(constants.theta_radius > 0.0))
        throw ValidationError("BoundConstants: theta radius must be > 0");
    if (constants.dimension < 1) throw ValidationError("BoundConstants: dimension must be >= 1");
    if (constants.num_objectives < 2)
        throw ValidationError("BoundConstants: need at least 2 objectives");
    if (constants.rounds < 1) throw ValidationError("BoundConstants: rounds must be >= 1");
}

}  // namespace

StepSizes optimal_step_sizes(StepVariant variant, const BoundConstants& constants) {
    validate(constants);
    const double u = constants.objective_bound;
    const double l = constants.gradient_bound;
    const double r = constants.theta_radius;
    const double t = static_cast<double>(constants.rounds);
    const double m = static_cast<double>(constants.num_objectives);
    StepSizes sizes;
    sizes.eta_theta = std::sqrt(8.0 * r * r / (5.0 * t * l * l));
    sizes.eta_lambda = variant == StepVariant::PgdPgd
                           ? std::sqrt(8.0 / (5.0 * t * m * u * u))
                           : std::sqrt(4.0 * std::log(m) / (5.0 * t * u * u));
    return sizes;
}

double convergence_bound(StepVariant variant, const BoundConstants& constants,
                         std::optional<double> gamma) {
    validate(constants);
    if (gamma && !(*gamma > 0.0 && *gamma < 1.0))
        throw ValidationError("convergence_bound: gamma must lie in (0, 1)");
    const double u = constants.objective_bound;
    const double l = constants.gradient_bound;
    const double r = constants.theta_radius;
    const double t = static_cast<double>(constants.rounds);
    const double m = static_cast<double>(constants.num_objectives);
    const double d = static_cast<double>(constants.dimension);

    const double theta_term = 2.0 * std::sqrt(10.0) * d * r * l / std::sqrt(t);
    const double lambda_term = variant == StepVariant::PgdPgd
                                   ? 2.0 * std::sqrt(10.0) * std::sqrt(m) * u / std::sqrt(t)
                                   : 2.0 * std::sqrt(5.0) * std::sqrt(std::log(m)) * u / std::sqrt(t);
    double bound = theta_term + lambda_term;
    if (gamma) {
        const double deviation = std::sqrt(2.0 * std::log(1.0 / *gamma) / t);
        bound += 4.0 * d * r * l * deviation + 4.0 * u * deviation;
    }
    return bound;
}

}  // namespace moo
