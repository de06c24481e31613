// Command line front end: exact tables, simulations, limit samples and the
// acceptance suite.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrt/experiments.hpp"
#include "rrt/harness.hpp"
#include "rrt/io.hpp"
#include "rrt/oracle.hpp"
#include "rrt/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" or empty means stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

struct Options {
    unsigned threads = 0;
    std::size_t n = 7;
    std::size_t reps = 1000;
    std::uint64_t seed = 1;
    std::string functional = "tpl";
    std::string out = "-";
    std::string mode = "unconditional";
    std::uint64_t weight_cut = rrt::SeriesOptions{}.weight_cut;
    std::size_t stick_cut = rrt::SeriesOptions{}.stick_cut;
    double mass_floor = rrt::SeriesOptions{}.mass_floor;
    std::string tree_path;
    std::size_t input_n = 100;
    std::string level = "fast";
    std::string report;
    std::vector<int> criteria;
};

int cmd_enumerate(const Options& o) {
    auto dist = rrt::exact_dist(rrt::parse_functional(o.functional), o.n, o.threads);
    Output out(o.out);
    rrt::write_exact_dist_csv(out.stream(), dist);
    std::cerr << o.functional << " n=" << o.n << " mean " << dist.mean().str() << '\n';
    return 0;
}

int cmd_joint_table(const Options& o) {
    Output out(o.out);
    rrt::write_joint_table_csv(out.stream(), rrt::joint_table(o.n, o.threads));
    return 0;
}

int cmd_simulate(const Options& o) {
    auto records = rrt::simulate_functionals(o.n, o.reps, o.seed, o.threads);
    Output out(o.out);
    rrt::write_functional_csv(out.stream(), records);
    return 0;
}

int cmd_limits(const Options& o) {
    rrt::LimitSampleConfig cfg;
    cfg.mode = rrt::parse_limit_mode(o.mode);
    cfg.reps = o.reps;
    cfg.seed = o.seed;
    cfg.series.weight_cut = o.weight_cut;
    cfg.series.stick_cut = o.stick_cut;
    cfg.series.mass_floor = o.mass_floor;
    cfg.input_n = o.input_n;
    if (cfg.mode == rrt::LimitMode::conditional) {
        if (o.tree_path.empty()) throw UsageError("--mode conditional requires --tree FILE");
        cfg.tree = rrt::tree_from_json(nlohmann::json::parse(rrt::read_file(o.tree_path)));
    }
    auto samples = rrt::sample_limits(cfg, o.threads);
    Output out(o.out);
    rrt::write_limit_csv(out.stream(), samples);
    return 0;
}

int cmd_fixed_point(const Options& o) {
    rrt::LimitSampleConfig cfg;
    cfg.reps = o.reps;
    cfg.series.weight_cut = o.weight_cut;
    cfg.series.mass_floor = o.mass_floor;
    auto draw = [&](std::uint64_t index) {
        cfg.seed = rrt::CounterRng::derive(o.seed, index);
        return rrt::sample_limits(cfg, o.threads);
    };
    auto a = draw(1);
    auto b = draw(2);
    auto c = draw(3);
    rrt::CounterRng rng(rrt::CounterRng::derive(o.seed, 4));
    std::vector<double> y(o.reps);
    std::vector<double> h(o.reps);
    std::vector<double> rhs(o.reps);
    std::vector<double> rhs_tilde(o.reps);
    for (std::size_t i = 0; i < o.reps; ++i) {
        double u = rng.uniform();
        y[i] = a[i].y;
        h[i] = a[i].y + a[i].z;
        rhs[i] = rrt::fixed_point_rhs(b[i].y, c[i].y, u);
        rhs_tilde[i] = rrt::fixed_point_rhs_tilde(b[i].y + b[i].z, c[i].y + c[i].z, u);
    }
    // A separate draw for the symmetry check keeps the two samples independent.
    std::vector<double> y_other(o.reps);
    for (std::size_t i = 0; i < o.reps; ++i) y_other[i] = b[i].y;
    double crit = rrt::ks_critical_value(o.reps, o.reps);
    struct Row {
        const char* name;
        double ks;
    };
    Row rows[] = {
        {"Y vs U Y1 + (1-U) Y2 + G(U)", rrt::ks_two_sample(y, rhs)},
        {"Y+Z vs U H1 + (1-U) H2 + G~(U)", rrt::ks_two_sample(h, rhs_tilde)},
        {"Y vs Y+Z", rrt::ks_two_sample(y_other, h)},
    };
    Output out(o.out);
    rrt::write_csv_row(out.stream(), {"check", "ks", "critical_1pct", "passed"});
    bool ok = true;
    for (const auto& r : rows) {
        bool pass = r.ks < crit;
        ok &= pass;
        rrt::write_csv_row(out.stream(),
                           {r.name, rrt::format_double(r.ks), rrt::format_double(crit), pass ? "1" : "0"});
    }
    return ok ? 0 : kExitFailed;
}

int cmd_verify(const Options& o) {
    auto level = rrt::parse_verify_level(o.level);
    auto report = rrt::run_verification(level, o.threads, &std::cout, o.criteria);
    if (!o.report.empty()) {
        std::ofstream f(o.report);
        if (!f) throw std::runtime_error("cannot write " + o.report);
        f << report.to_json().dump(2) << '\n';
    }
    return report.passed() ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random recursive tree laboratory: exact tables, simulation and limit checks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command line flags take precedence");
    Options o;
    app.add_option("--threads", o.threads, "worker threads (default: RRT_THREADS or hardware)")
        ->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "exact law of a functional over all encodings");
    enumerate->add_option("--n", o.n, "tree size")->check(CLI::Range(rrt::kOracleMinN, rrt::kOracleMaxN));
    enumerate->add_option("--functional", o.functional, "tpl, hpl, wiener or tpl+hpl")
        ->check(CLI::IsMember({"tpl", "hpl", "wiener", "tpl+hpl", "comparisons"}));
    enumerate->add_option("--out", o.out, "CSV path, - for stdout");

    auto* joint = app.add_subcommand("joint-table", "exact joint (tpl, hpl) counts");
    joint->add_option("--n", o.n, "tree size")->check(CLI::Range(rrt::kOracleMinN, rrt::kOracleMaxN));
    joint->add_option("--out", o.out, "CSV path, - for stdout");

    auto* simulate = app.add_subcommand("simulate", "functionals of simulated trees");
    simulate->add_option("--n", o.n, "tree size")->check(CLI::PositiveNumber);
    simulate->add_option("--reps", o.reps, "replications")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", o.seed, "master seed");
    simulate->add_option("--out", o.out, "CSV path, - for stdout");

    auto* limits = app.add_subcommand("limits", "samples of the truncated Y, Z and W series");
    limits->add_option("--mode", o.mode, "unconditional, conditional or input")
        ->check(CLI::IsMember({"unconditional", "conditional", "input"}));
    limits->add_option("--reps", o.reps, "replications")->check(CLI::PositiveNumber);
    limits->add_option("--weight-cut", o.weight_cut, "largest word weight in the series")
        ->check(CLI::NonNegativeNumber);
    limits->add_option("--stick-cut", o.stick_cut, "sticks per node")->check(CLI::PositiveNumber);
    limits->add_option("--mass-floor", o.mass_floor, "drop partial sums below this mass (0 disables)")
        ->check(CLI::NonNegativeNumber);
    limits->add_option("--seed", o.seed, "master seed");
    limits->add_option("--tree", o.tree_path, "JSON word list to condition on (conditional mode)");
    limits->add_option("--input-n", o.input_n, "tree size built from the input (input mode)")
        ->check(CLI::PositiveNumber);
    limits->add_option("--out", o.out, "CSV path, - for stdout");

    auto* fixed = app.add_subcommand("fixed-point", "KS checks of the distributional fixed point");
    fixed->add_option("--reps", o.reps, "sample size per side")->check(CLI::Range(2, 100000000));
    fixed->add_option("--seed", o.seed, "master seed");
    fixed->add_option("--weight-cut", o.weight_cut, "largest word weight in the series");
    fixed->add_option("--mass-floor", o.mass_floor, "drop partial sums below this mass");
    fixed->add_option("--out", o.out, "CSV path, - for stdout");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--report", o.report, "write a JSON report here");
    verify->add_option("--criteria", o.criteria, "run only these criteria")
        ->check(CLI::Range(1, rrt::kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (o.threads == 0) o.threads = rrt::default_threads();

    try {
        if (*enumerate) return cmd_enumerate(o);
        if (*joint) return cmd_joint_table(o);
        if (*simulate) return cmd_simulate(o);
        if (*limits) return cmd_limits(o);
        if (*fixed) return cmd_fixed_point(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
