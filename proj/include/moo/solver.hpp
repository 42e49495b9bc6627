#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moo/archive.hpp"
#include "moo/problem.hpp"
#include "moo/scalarize.hpp"
#include "moo/simplex.hpp"

namespace moo {

/// Solution method. LS/TCH/STCH are the baseline scalarizers; the Omd methods
/// run the adversarial-weights round loop with projected-gradient or
/// exponentiated-gradient updates; the AdaOmd variants additionally maintain
/// the non-dominated archive and report its weighted-average output.
enum class Method {
    LS,
    TCH,
    STCH,
    OmdGd,
    OmdEg,
    AdaOmdGd,
    AdaOmdEg,
};

bool method_is_omd(Method method);
bool method_is_adaptive(Method method);
bool method_uses_eg(Method method);
std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// All valid CLI names, comma-separated (for diagnostics).
std::string method_names_joined();

struct SolverConfig {
    Method method = Method::OmdGd;
    int rounds = 1000;
    double eta_theta = 0.02;
    double eta_lambda = 1.0;
    double mu = 0.1;  ///< STCH smoothing scale
    std::optional<PreferenceVector> preference;  ///< default: uniform
    std::optional<NadirPoint> nadir;             ///< default: origin
    std::uint64_t seed = 0;
    std::optional<double> theta_box;  ///< per-coordinate bound on |theta|
    bool stochastic = false;
    double init_scale = 0.1;
    bool merge_duplicate_objectives = false;
};

struct TraceRow {
    int round = 0;
    VectorXd objectives;      ///< f(theta_t)
    VectorXd lambda;          ///< weights used in this round's theta update
    double tch = 0.0;         ///< tch_value(f(theta_t))
    std::size_t archive_size = 0;
};

struct SolveResult {
    std::vector<TraceRow> trace;
    std::vector<VectorXd> iterates;  ///< theta_1..theta_T
    VectorXd theta_bar;              ///< uniform average of the iterates
    VectorXd f_bar;                  ///< exact objectives at theta_bar
    std::optional<VectorXd> theta_tilde;  ///< adaptive output (Ada methods)
    std::optional<VectorXd> f_tilde;
    ParetoArchive archive;  ///< populated for adaptive methods

    /// The method's canonical solution: theta_tilde when present, else
    /// theta_bar.
    const VectorXd& output() const { return theta_tilde ? *theta_tilde : theta_bar; }
    const VectorXd& output_objectives() const { return f_tilde ? *f_tilde : f_bar; }
};

/// One primal step: theta - eta * composite_gradient, clamped to the box when
/// one is configured (the projection is the identity otherwise).
VectorXd update_theta(const Eigen::Ref<const VectorXd>& theta,
                      const Eigen::Ref<const MatrixXd>& jacobian, const SimplexWeights& lambda,
                      const PreferenceVector& w, double eta_theta,
                      std::optional<double> box = std::nullopt);

/// Ascent step on the simplex via Euclidean projection. A zero step size
/// returns lambda unchanged.
SimplexWeights update_lambda_pgd(const SimplexWeights& lambda,
                                 const Eigen::Ref<const VectorXd>& f, const PreferenceVector& w,
                                 double eta_lambda);

/// Multiplicative-weights ascent step, max-shifted for overflow safety.
/// Requires strictly positive lambda (the update cannot revive zero mass);
/// a zero step size returns lambda unchanged.
SimplexWeights update_lambda_eg(const SimplexWeights& lambda, const Eigen::Ref<const VectorXd>& f,
                                const PreferenceVector& w, double eta_lambda);

/// Runs the configured method for `rounds` rounds and returns the full trace
/// plus the averaged (and, for adaptive methods, archive-weighted) solutions.
SolveResult run(const Problem& problem, const SolverConfig& config);

/// Problem constants of the convergence theory.
struct BoundConstants {
    double objective_bound = 1.0;  ///< U: max_i sup |f_i|
    double gradient_bound = 1.0;   ///< L: sup inf-norm of objective gradients
    double theta_radius = 1.0;     ///< R: inf-norm bound on the feasible box
    Index dimension = 2;           ///< d
    Index num_objectives = 2;      ///< m (>= 2)
    int rounds = 1;                ///< T
};

/// Which mirror maps drive the two updates: Euclidean for both, or Euclidean
/// for theta with the entropic (multiplicative-weights) map for lambda.
enum class StepVariant { PgdPgd, PgdEg };

struct StepSizes {
    double eta_theta = 0.0;
    double eta_lambda = 0.0;
};

/// Closed-form step sizes minimizing the convergence bound:
///   eta_theta  = sqrt(8 R^2 / (5 T L^2))           (both variants)
///   eta_lambda = sqrt(8 / (5 T m U^2))             (PgdPgd)
///   eta_lambda = sqrt(4 log m / (5 T U^2))         (PgdEg)
StepSizes optimal_step_sizes(StepVariant variant, const BoundConstants& constants);

/// Suboptimality bound at the optimal step sizes:
///   2 sqrt(10) d R L / sqrt(T) + 2 sqrt(10) sqrt(m) U / sqrt(T)      (PgdPgd)
///   2 sqrt(10) d R L / sqrt(T) + 2 sqrt(5) sqrt(log m) U / sqrt(T)   (PgdEg)
/// With `gamma` set, adds the deviation terms of the probability >= 1 - gamma
/// form: (4 d R L + 4 U) sqrt(2 log(1/gamma) / T).
double convergence_bound(StepVariant variant, const BoundConstants& constants,
                         std::optional<double> gamma = std::nullopt);

}  // namespace moo
