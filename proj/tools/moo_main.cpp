// Experiment harness: single solves, preference sweeps, federated simulation,
// and the step-size/bound calculator. Every command writes a manifest next to
// its outputs; identical invocations reproduce outputs byte for byte.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "moo/csv.hpp"
#include "moo/fedsim.hpp"
#include "moo/manifest.hpp"
#include "moo/problems/fed_logreg.hpp"
#include "moo/problems/quadratic_bi.hpp"
#include "moo/problems/vlmop2.hpp"
#include "moo/solver.hpp"
#include "moo/svg.hpp"

namespace fs = std::filesystem;
using namespace moo;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw ValidationError("empty entry in list '" + text + "'");
        values.push_back(std::stod(item));
    }
    if (values.empty()) throw ValidationError("empty list");
    return values;
}

// Accepts "0,19,42" or an inclusive range "0..9".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    const auto range = text.find("..");
    std::vector<std::uint64_t> seeds;
    if (range != std::string::npos) {
        const auto lo = std::stoull(text.substr(0, range));
        const auto hi = std::stoull(text.substr(range + 2));
        if (hi < lo) throw ValidationError("seed range is empty: " + text);
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw ValidationError("no seeds given");
    return seeds;
}

std::vector<Method> parse_methods(const std::string& text) {
    std::vector<Method> methods;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto method = parse_method(item);
        if (!method)
            throw ValidationError("unknown method '" + item + "'; valid methods are: " +
                                  method_names_joined());
        methods.push_back(*method);
    }
    if (methods.empty()) throw ValidationError("no methods given");
    return methods;
}

// Evenly spaced two-objective preferences from (1,0) to (0,1), endpoints
// included.
std::vector<PreferenceVector> spaced_preferences(int count) {
    if (count < 2) throw ValidationError("need at least 2 preferences");
    std::vector<PreferenceVector> prefs;
    for (int k = 1; k <= count; ++k) {
        Eigen::Vector2d w(static_cast<double>(count - k) / (count - 1),
                          static_cast<double>(k - 1) / (count - 1));
        prefs.emplace_back(VectorXd(w));
    }
    return prefs;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        const auto n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
        workers.reserve(n);
        for (unsigned j = 0; j < n; ++j) workers.emplace_back(work);
        for (std::thread& worker : workers) worker.join();
    }
    if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Problem selection shared by solve and sweep.

struct ProblemFlags {
    std::string name = "vlmop2";
    int dim = 10;
    // fedlogreg
    int clients = 10;
    int samples = 200;
    int feature_dim = 5;
    std::string heterogeneity = "rotation";
    int batch = 0;
    double l2_reg = 1e-3;
    // quadratic
    std::string quad_a1;
    std::string quad_a2;
    double quad_s1 = 1.0;
    double quad_s2 = 1.0;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& flags) {
    cmd->add_option("--problem", flags.name, "Problem: vlmop2, quadratic, fedlogreg")
        ->capture_default_str();
    cmd->add_option("--dim", flags.dim, "Decision dimension (vlmop2/quadratic)")
        ->capture_default_str();
    cmd->add_option("--clients", flags.clients, "fedlogreg: number of clients")
        ->capture_default_str();
    cmd->add_option("--samples", flags.samples, "fedlogreg: samples per client")
        ->capture_default_str();
    cmd->add_option("--feature-dim", flags.feature_dim, "fedlogreg: feature dimension")
        ->capture_default_str();
    cmd->add_option("--heterogeneity", flags.heterogeneity,
                    "fedlogreg: rotation | partial:<C>")
        ->capture_default_str();
    cmd->add_option("--batch", flags.batch, "fedlogreg: batch size (0 = full)")
        ->capture_default_str();
    cmd->add_option("--l2-reg", flags.l2_reg, "fedlogreg: ridge strength")->capture_default_str();
    cmd->add_option("--quad-a1", flags.quad_a1, "quadratic: first anchor (comma list)");
    cmd->add_option("--quad-a2", flags.quad_a2, "quadratic: second anchor (comma list)");
    cmd->add_option("--quad-s1", flags.quad_s1, "quadratic: first scale")->capture_default_str();
    cmd->add_option("--quad-s2", flags.quad_s2, "quadratic: second scale")->capture_default_str();
}

FedLogRegSpec fed_spec_from_flags(const ProblemFlags& flags) {
    FedLogRegSpec spec;
    spec.clients = flags.clients;
    spec.samples_per_client = flags.samples;
    spec.feature_dim = flags.feature_dim;
    spec.batch_size = flags.batch;
    spec.l2_reg = flags.l2_reg;
    if (flags.heterogeneity == "rotation") {
        spec.mode = Heterogeneity::Rotation;
    } else if (flags.heterogeneity.rfind("partial:", 0) == 0) {
        spec.mode = Heterogeneity::PartialClass;
        spec.classes_per_client = std::stoi(flags.heterogeneity.substr(8));
    } else {
        throw ValidationError("unknown heterogeneity '" + flags.heterogeneity +
                              "'; expected rotation or partial:<C>");
    }
    return spec;
}

std::unique_ptr<Problem> make_problem(const ProblemFlags& flags, std::uint64_t seed) {
    if (flags.name == "vlmop2") return std::make_unique<Vlmop2>(flags.dim);
    if (flags.name == "quadratic") {
        VectorXd a1 = VectorXd::Constant(flags.dim, -0.5);
        VectorXd a2 = VectorXd::Constant(flags.dim, 0.5);
        if (!flags.quad_a1.empty()) {
            const auto values = parse_double_list(flags.quad_a1);
            a1 = Eigen::Map<const VectorXd>(values.data(), static_cast<Index>(values.size()));
        }
        if (!flags.quad_a2.empty()) {
            const auto values = parse_double_list(flags.quad_a2);
            a2 = Eigen::Map<const VectorXd>(values.data(), static_cast<Index>(values.size()));
        }
        return std::make_unique<QuadraticBiObjective>(a1, a2, flags.quad_s1, flags.quad_s2);
    }
    if (flags.name == "fedlogreg")
        return std::make_unique<FedLogReg>(FedLogReg::generate(fed_spec_from_flags(flags), seed));
    throw ValidationError("unknown problem '" + flags.name +
                          "'; valid problems are: vlmop2, quadratic, fedlogreg");
}

// ---------------------------------------------------------------------------
// solve

struct SolveFlags {
    ProblemFlags problem;
    std::string method = "omd-gd";
    std::string pref;
    std::string nadir;
    int rounds = 1000;
    double eta_theta = 0.02;
    double eta_lambda = 1.0;
    double mu = 0.1;
    std::uint64_t seed = 0;
    double init_scale = 0.1;
    double box = 0.0;  // 0 = unconstrained
    bool stochastic = false;
    bool merge_duplicates = false;
    std::string out = "run.csv";
    std::string archive_out;
};

int run_solve(const SolveFlags& flags) {
    const auto method = parse_method(flags.method);
    if (!method)
        throw ValidationError("unknown method '" + flags.method + "'; valid methods are: " +
                              method_names_joined());
    const auto problem = make_problem(flags.problem, flags.seed);

    SolverConfig config;
    config.method = *method;
    config.rounds = flags.rounds;
    config.eta_theta = flags.eta_theta;
    config.eta_lambda = flags.eta_lambda;
    config.mu = flags.mu;
    config.seed = flags.seed;
    config.init_scale = flags.init_scale;
    config.stochastic = flags.stochastic;
    config.merge_duplicate_objectives = flags.merge_duplicates;
    if (flags.box > 0.0) config.theta_box = flags.box;
    if (!flags.pref.empty()) {
        const auto values = parse_double_list(flags.pref);
        config.preference = PreferenceVector(
            Eigen::Map<const VectorXd>(values.data(), static_cast<Index>(values.size())));
    }
    if (!flags.nadir.empty()) {
        const auto values = parse_double_list(flags.nadir);
        config.nadir = NadirPoint(
            Eigen::Map<const VectorXd>(values.data(), static_cast<Index>(values.size())));
    }

    const SolveResult result = run(*problem, config);
    const Index m = problem->num_objectives();

    std::vector<std::string> outputs{flags.out};
    csv::write_file(flags.out, csv::trace_to_csv(result.trace, m));
    if (method_is_adaptive(config.method)) {
        std::string archive_path = flags.archive_out;
        if (archive_path.empty()) {
            fs::path p(flags.out);
            p.replace_extension(".archive.csv");
            archive_path = p.string();
        }
        csv::write_file(archive_path, csv::archive_to_csv(result.archive, m));
        outputs.push_back(archive_path);
    }

    RunManifest manifest;
    manifest.command = "solve";
    manifest.seeds = {flags.seed};
    manifest.outputs = outputs;
    manifest.config = {
        {"problem", flags.problem.name},
        {"method", std::string(method_name(config.method))},
        {"rounds", std::to_string(config.rounds)},
        {"eta_theta", csv::format_double(config.eta_theta)},
        {"eta_lambda", csv::format_double(config.eta_lambda)},
        {"mu", csv::format_double(config.mu)},
        {"seed", std::to_string(flags.seed)},
        {"init_scale", csv::format_double(config.init_scale)},
        {"stochastic", flags.stochastic ? "true" : "false"},
        {"box", csv::format_double(flags.box)},
        {"pref", flags.pref.empty() ? "uniform" : flags.pref},
        {"nadir", flags.nadir.empty() ? "zeros" : flags.nadir},
        {"out", flags.out},
    };
    write_manifest(manifest, flags.out + ".manifest.json");

    std::ostringstream summary;
    summary << "method=" << method_name(config.method);
    summary << " f_bar=";
    for (Index i = 0; i < m; ++i) summary << (i ? "," : "") << csv::format_double(result.f_bar[i]);
    if (result.f_tilde) {
        summary << " f_tilde=";
        for (Index i = 0; i < m; ++i)
            summary << (i ? "," : "") << csv::format_double((*result.f_tilde)[i]);
        summary << " archive_size=" << result.archive.size();
    }
    std::cout << summary.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepFlags {
    ProblemFlags problem;
    int prefs = 10;
    std::string methods = "ls,tch,omd-gd,adaomd-gd";
    std::string seeds = "0,19,42";
    int rounds = 5000;
    double eta_theta = 0.02;
    double eta_lambda = 1.0;
    double mu = 0.1;
    double init_scale = 0.1;
    bool stochastic = false;
    unsigned jobs = 0;
    std::string out_dir = "sweep_out";
};

int run_sweep(const SweepFlags& flags) {
    const std::vector<Method> methods = parse_methods(flags.methods);
    const std::vector<std::uint64_t> seeds = parse_seeds(flags.seeds);
    const std::vector<PreferenceVector> prefs = spaced_preferences(flags.prefs);
    {
        const auto probe = make_problem(flags.problem, seeds.front());
        if (probe->num_objectives() != 2)
            throw ValidationError("sweep supports two-objective problems only");
    }

    struct Cell {
        Method method;
        std::size_t pref_index;
        std::uint64_t seed;
        VectorXd objectives;
    };
    std::vector<Cell> cells;
    for (const Method method : methods)
        for (std::size_t p = 0; p < prefs.size(); ++p)
            for (const std::uint64_t seed : seeds) cells.push_back({method, p, seed, {}});

    const unsigned jobs =
        flags.jobs > 0 ? flags.jobs : std::max(1u, std::thread::hardware_concurrency());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        Cell& cell = cells[i];
        const auto problem = make_problem(flags.problem, cell.seed);
        SolverConfig config;
        config.method = cell.method;
        config.rounds = flags.rounds;
        config.eta_theta = flags.eta_theta;
        config.eta_lambda = flags.eta_lambda;
        config.mu = flags.mu;
        config.seed = cell.seed;
        config.init_scale = flags.init_scale;
        config.stochastic = flags.stochastic;
        config.preference = prefs[cell.pref_index];
        cell.objectives = run(*problem, config).output_objectives();
    });

    fs::create_directories(flags.out_dir);
    const fs::path dir(flags.out_dir);

    // Summary CSV, one row per cell in deterministic order.
    std::ostringstream summary;
    summary << "method,w_1,w_2,seed,f_1,f_2\n";
    for (const Cell& cell : cells) {
        const PreferenceVector& w = prefs[cell.pref_index];
        summary << method_name(cell.method) << ',' << csv::format_double(w[0]) << ','
                << csv::format_double(w[1]) << ',' << cell.seed << ','
                << csv::format_double(cell.objectives[0]) << ','
                << csv::format_double(cell.objectives[1]) << "\n";
    }
    const std::string summary_path = (dir / "summary.csv").string();
    csv::write_file(summary_path, summary.str());

    // Objective-space scatter over the true front with inverse-preference
    // rays (points on a ray satisfy w_1 f_1 = w_2 f_2).
    std::vector<std::pair<double, double>> pf_curve;
    if (flags.problem.name == "vlmop2") {
        Vlmop2 reference(flags.problem.dim);
        for (const VectorXd& theta : vlmop2_pareto_set(flags.problem.dim, 200)) {
            const VectorXd f = reference.evaluate(theta);
            pf_curve.emplace_back(f[0], f[1]);
        }
    }
    double reach = 1.0;
    for (const auto& [x, y] : pf_curve) reach = std::max({reach, x, y});
    std::vector<svg::Segment> rays;
    for (const PreferenceVector& w : prefs) {
        double dx = 0.0, dy = 0.0;
        if (w[0] == 0.0) {
            dx = 1.0;
        } else if (w[1] == 0.0) {
            dy = 1.0;
        } else {
            dx = 1.0 / w[0];
            dy = 1.0 / w[1];
        }
        const double scale = reach / std::max(dx, dy);
        rays.push_back({0.0, 0.0, dx * scale, dy * scale});
    }
    std::vector<svg::Point> points;
    for (const Cell& cell : cells) {
        points.push_back({cell.objectives[0], cell.objectives[1],
                          static_cast<int>(cell.method)});
    }
    const std::string svg_path = (dir / "pareto.svg").string();
    svg::emit_svg(points, pf_curve, rays, svg_path);

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.seeds = seeds;
    manifest.outputs = {summary_path, svg_path};
    manifest.config = {
        {"problem", flags.problem.name},
        {"dim", std::to_string(flags.problem.dim)},
        {"prefs", std::to_string(flags.prefs)},
        {"methods", flags.methods},
        {"rounds", std::to_string(flags.rounds)},
        {"eta_theta", csv::format_double(flags.eta_theta)},
        {"eta_lambda", csv::format_double(flags.eta_lambda)},
        {"mu", csv::format_double(flags.mu)},
        {"init_scale", csv::format_double(flags.init_scale)},
        {"stochastic", flags.stochastic ? "true" : "false"},
        {"out_dir", flags.out_dir},
    };
    write_manifest(manifest, (dir / "manifest.json").string());
    std::cout << "wrote " << cells.size() << " summary rows to " << summary_path << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// fedsim

struct FedFlags {
    int clients = 10;
    int rounds = 300;
    int local_steps = 10;
    double local_lr = 0.1;
    std::string methods = "ls,omd-gd,adaomd-gd";
    std::string seeds = "0..9";
    double eta_lambda = 1.0;
    double mu = 0.1;
    std::string heterogeneity = "rotation";
    int samples = 200;
    int feature_dim = 5;
    int batch = 0;
    double l2_reg = 1e-3;
    double init_scale = 0.1;
    unsigned jobs = 0;
    std::string out_dir = "fed_out";
};

int run_fedsim(const FedFlags& flags) {
    const std::vector<Method> methods = parse_methods(flags.methods);
    const std::vector<std::uint64_t> seeds = parse_seeds(flags.seeds);

    ProblemFlags problem_flags;
    problem_flags.clients = flags.clients;
    problem_flags.samples = flags.samples;
    problem_flags.feature_dim = flags.feature_dim;
    problem_flags.heterogeneity = flags.heterogeneity;
    problem_flags.batch = flags.batch;
    problem_flags.l2_reg = flags.l2_reg;
    const FedLogRegSpec spec = fed_spec_from_flags(problem_flags);

    struct Cell {
        Method method;
        std::uint64_t seed;
        FedMetrics metrics;
    };
    std::vector<Cell> cells;
    for (const Method method : methods)
        for (const std::uint64_t seed : seeds) cells.push_back({method, seed, {}});

    const unsigned jobs =
        flags.jobs > 0 ? flags.jobs : std::max(1u, std::thread::hardware_concurrency());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        Cell& cell = cells[i];
        const FedLogReg problem = FedLogReg::generate(spec, cell.seed);
        FedConfig config;
        config.method = cell.method;
        config.rounds = flags.rounds;
        config.local_steps = flags.local_steps;
        config.local_step_size = flags.local_lr;
        config.eta_lambda = flags.eta_lambda;
        config.mu = flags.mu;
        config.seed = cell.seed;
        config.batch_size = flags.batch;
        config.init_scale = flags.init_scale;
        cell.metrics = run_federated(problem, config);
    });

    fs::create_directories(flags.out_dir);
    const fs::path dir(flags.out_dir);
    std::vector<std::string> outputs;

    std::ostringstream summary;
    summary << "method,seed,average_accuracy,agnostic_loss,accuracy_parity\n";
    for (const Cell& cell : cells) {
        const FedSolutionMetrics& canonical = cell.metrics.canonical();
        summary << method_name(cell.method) << ',' << cell.seed << ','
                << csv::format_double(canonical.average_accuracy) << ','
                << csv::format_double(canonical.agnostic_loss) << ','
                << csv::format_double(canonical.accuracy_parity) << "\n";
    }
    const std::string summary_path = (dir / "summary.csv").string();
    csv::write_file(summary_path, summary.str());
    outputs.push_back(summary_path);

    for (const Cell& cell : cells) {
        std::ostringstream rounds_csv;
        rounds_csv << "round,worst_loss";
        const Index m = cell.metrics.trace.front().lambda.size();
        for (Index i = 1; i <= m; ++i) rounds_csv << ",lambda_" << i;
        rounds_csv << "\n";
        for (const FedRoundRow& row : cell.metrics.trace) {
            rounds_csv << row.round << ',' << csv::format_double(row.worst_train_loss);
            for (Index i = 0; i < m; ++i)
                rounds_csv << ',' << csv::format_double(row.lambda[i]);
            rounds_csv << "\n";
        }
        std::ostringstream name;
        name << "rounds_" << method_name(cell.method) << "_seed" << cell.seed << ".csv";
        const std::string path = (dir / name.str()).string();
        csv::write_file(path, rounds_csv.str());
        outputs.push_back(path);
    }

    RunManifest manifest;
    manifest.command = "fedsim";
    manifest.seeds = seeds;
    manifest.outputs = outputs;
    manifest.config = {
        {"clients", std::to_string(flags.clients)},
        {"rounds", std::to_string(flags.rounds)},
        {"local_steps", std::to_string(flags.local_steps)},
        {"local_lr", csv::format_double(flags.local_lr)},
        {"methods", flags.methods},
        {"eta_lambda", csv::format_double(flags.eta_lambda)},
        {"mu", csv::format_double(flags.mu)},
        {"heterogeneity", flags.heterogeneity},
        {"samples", std::to_string(flags.samples)},
        {"feature_dim", std::to_string(flags.feature_dim)},
        {"batch", std::to_string(flags.batch)},
        {"l2_reg", csv::format_double(flags.l2_reg)},
        {"init_scale", csv::format_double(flags.init_scale)},
        {"out_dir", flags.out_dir},
    };
    write_manifest(manifest, (dir / "manifest.json").string());
    std::cout << "wrote " << cells.size() << " summary rows to " << summary_path << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// bound

struct BoundFlags {
    std::string variant = "pgd-eg";
    int rounds = 100;
    int objectives = 2;
    int dim = 10;
    double objective_bound = 1.0;
    double gradient_bound = 1.0;
    double radius = 1.0;
    double gamma = 0.0;  // 0 = expectation bound only
};

int run_bound(const BoundFlags& flags) {
    StepVariant variant;
    if (flags.variant == "pgd-pgd") {
        variant = StepVariant::PgdPgd;
    } else if (flags.variant == "pgd-eg") {
        variant = StepVariant::PgdEg;
    } else {
        throw ValidationError("unknown variant '" + flags.variant +
                              "'; valid variants are: pgd-pgd, pgd-eg");
    }
    BoundConstants constants;
    constants.rounds = flags.rounds;
    constants.num_objectives = flags.objectives;
    constants.dimension = flags.dim;
    constants.objective_bound = flags.objective_bound;
    constants.gradient_bound = flags.gradient_bound;
    constants.theta_radius = flags.radius;

    const StepSizes sizes = optimal_step_sizes(variant, constants);
    std::cout << "eta_theta=" << csv::format_double(sizes.eta_theta) << "\n";
    std::cout << "eta_lambda=" << csv::format_double(sizes.eta_lambda) << "\n";
    std::cout << "bound=" << csv::format_double(convergence_bound(variant, constants)) << "\n";
    if (flags.gamma > 0.0) {
        std::cout << "bound_high_prob="
                  << csv::format_double(convergence_bound(variant, constants, flags.gamma))
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tchebycheff-scalarized multi-objective optimization toolkit"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Run one method on one problem");
    solve_cmd->set_config("--config");
    add_problem_flags(solve_cmd, solve_flags.problem);
    solve_cmd->add_option("--method", solve_flags.method, "Solution method")
        ->capture_default_str();
    solve_cmd->add_option("--pref", solve_flags.pref, "Preference vector (comma list)");
    solve_cmd->add_option("--nadir", solve_flags.nadir, "Nadir point (comma list)");
    solve_cmd->add_option("--rounds", solve_flags.rounds, "Rounds")->capture_default_str();
    solve_cmd->add_option("--eta-theta", solve_flags.eta_theta, "Primal step size")
        ->capture_default_str();
    solve_cmd->add_option("--eta-lambda", solve_flags.eta_lambda, "Weight step size")
        ->capture_default_str();
    solve_cmd->add_option("--mu", solve_flags.mu, "STCH smoothing scale")->capture_default_str();
    solve_cmd->add_option("--seed", solve_flags.seed, "Seed")
        ->envname("MOO_SEED")
        ->capture_default_str();
    solve_cmd->add_option("--init-scale", solve_flags.init_scale, "Scale of the random init")
        ->capture_default_str();
    solve_cmd->add_option("--box", solve_flags.box, "Feasible box radius (0 = unconstrained)")
        ->capture_default_str();
    solve_cmd->add_flag("--stochastic", solve_flags.stochastic, "Use stochastic gradients");
    solve_cmd->add_flag("--merge-duplicates", solve_flags.merge_duplicates,
                        "Fold exactly-equal objective vectors into one archive entry");
    solve_cmd->add_option("--out", solve_flags.out, "Trace CSV path")->capture_default_str();
    solve_cmd->add_option("--archive-out", solve_flags.archive_out,
                          "Archive dump path (adaptive methods)");

    SweepFlags sweep_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Preference sweep over methods and seeds");
    sweep_cmd->set_config("--config");
    add_problem_flags(sweep_cmd, sweep_flags.problem);
    sweep_cmd->add_option("--prefs", sweep_flags.prefs, "Number of evenly spaced preferences")
        ->capture_default_str();
    sweep_cmd->add_option("--methods", sweep_flags.methods, "Comma list of methods")
        ->capture_default_str();
    sweep_cmd->add_option("--seeds", sweep_flags.seeds, "Seeds: comma list or lo..hi")
        ->envname("MOO_SEED")
        ->capture_default_str();
    sweep_cmd->add_option("--rounds", sweep_flags.rounds, "Rounds")->capture_default_str();
    sweep_cmd->add_option("--eta-theta", sweep_flags.eta_theta, "Primal step size")
        ->capture_default_str();
    sweep_cmd->add_option("--eta-lambda", sweep_flags.eta_lambda, "Weight step size")
        ->capture_default_str();
    sweep_cmd->add_option("--mu", sweep_flags.mu, "STCH smoothing scale")->capture_default_str();
    sweep_cmd->add_option("--init-scale", sweep_flags.init_scale, "Scale of the random init")
        ->capture_default_str();
    sweep_cmd->add_flag("--stochastic", sweep_flags.stochastic, "Use stochastic gradients");
    sweep_cmd->add_option("--jobs", sweep_flags.jobs, "Worker pool size (default: CPUs)");
    sweep_cmd->add_option("--out-dir", sweep_flags.out_dir, "Output directory")
        ->capture_default_str();

    FedFlags fed_flags;
    CLI::App* fed_cmd = app.add_subcommand("fedsim", "Desk-scale federated fairness simulation");
    fed_cmd->set_config("--config");
    fed_cmd->add_option("--clients", fed_flags.clients, "Clients")->required();
    fed_cmd->add_option("--rounds", fed_flags.rounds, "Communication rounds")->required();
    fed_cmd->add_option("--local-steps", fed_flags.local_steps, "Local steps per round")
        ->required();
    fed_cmd->add_option("--methods", fed_flags.methods, "Comma list of methods")
        ->capture_default_str();
    fed_cmd->add_option("--seeds", fed_flags.seeds, "Seeds: comma list or lo..hi")
        ->envname("MOO_SEED")
        ->capture_default_str();
    fed_cmd->add_option("--local-lr", fed_flags.local_lr, "Local step size")
        ->capture_default_str();
    fed_cmd->add_option("--eta-lambda", fed_flags.eta_lambda, "Weight step size")
        ->capture_default_str();
    fed_cmd->add_option("--mu", fed_flags.mu, "STCH smoothing scale")->capture_default_str();
    fed_cmd->add_option("--heterogeneity", fed_flags.heterogeneity, "rotation | partial:<C>")
        ->capture_default_str();
    fed_cmd->add_option("--samples", fed_flags.samples, "Samples per client")
        ->capture_default_str();
    fed_cmd->add_option("--feature-dim", fed_flags.feature_dim, "Feature dimension")
        ->capture_default_str();
    fed_cmd->add_option("--batch", fed_flags.batch, "Local batch size (0 = full)")
        ->capture_default_str();
    fed_cmd->add_option("--l2-reg", fed_flags.l2_reg, "Ridge strength")->capture_default_str();
    fed_cmd->add_option("--init-scale", fed_flags.init_scale, "Scale of the random init")
        ->capture_default_str();
    fed_cmd->add_option("--jobs", fed_flags.jobs, "Worker pool size (default: CPUs)");
    fed_cmd->add_option("--out-dir", fed_flags.out_dir, "Output directory")
        ->capture_default_str();

    BoundFlags bound_flags;
    CLI::App* bound_cmd =
        app.add_subcommand("bound", "Step-size and convergence-bound calculator");
    bound_cmd->add_option("--variant", bound_flags.variant, "pgd-pgd | pgd-eg")
        ->capture_default_str();
    bound_cmd->add_option("--rounds", bound_flags.rounds, "T")->capture_default_str();
    bound_cmd->add_option("--objectives", bound_flags.objectives, "m")->capture_default_str();
    bound_cmd->add_option("--dim", bound_flags.dim, "d")->capture_default_str();
    bound_cmd->add_option("--objective-bound", bound_flags.objective_bound, "U")
        ->capture_default_str();
    bound_cmd->add_option("--gradient-bound", bound_flags.gradient_bound, "L")
        ->capture_default_str();
    bound_cmd->add_option("--radius", bound_flags.radius, "R")->capture_default_str();
    bound_cmd->add_option("--gamma", bound_flags.gamma, "Failure probability (high-prob bound)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_flags);
        if (sweep_cmd->parsed()) return run_sweep(sweep_flags);
        if (fed_cmd->parsed()) return run_fedsim(fed_flags);
        if (bound_cmd->parsed()) return run_bound(bound_flags);
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
