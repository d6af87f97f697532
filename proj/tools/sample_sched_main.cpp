// sample-sched: exact analysis and simulation of single-sample list
// scheduling on one machine. See README.md for the command reference.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "samsched/runner.hpp"

namespace {

using samsched::RunConfig;

void add_output_options(CLI::App* cmd, RunConfig& cfg, std::string& format) {
    cmd->add_option("--out", cfg.out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and simulated analysis of sample-based single-machine scheduling"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string policy = "sam";
    std::string format = "csv";

    CLI::App* analyze = app.add_subcommand("analyze", "exact pairwise analysis of an instance");
    analyze->add_option("--instance", cfg.instance_path, "instance JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--policy", policy, "sam, rnd or wsept")
        ->required()
        ->check(CLI::IsMember({"sam", "rnd", "wsept"}));
    analyze->add_option("--tol", cfg.tol, "quadrature relative tolerance");
    add_output_options(analyze, cfg, format);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo cost and regret estimates");
    simulate->add_option("--instance", cfg.instance_path, "instance JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--policy", policy, "sam, rnd or wsept")
        ->required()
        ->check(CLI::IsMember({"sam", "rnd", "wsept"}));
    simulate->add_option("--trials", cfg.trials, "number of trials")->required();
    simulate->add_option("--seed", cfg.seed, "random seed");
    add_output_options(simulate, cfg, format);

    CLI::App* example1 = app.add_subcommand(
        "example1", "adversarial instance: one two-point job among deterministic jobs");
    example1->add_option("--n", cfg.n, "number of jobs")->required();
    example1->add_option("--M", cfg.M, "scale parameter (M > 2)")->required();
    example1->add_option("--eps", cfg.eps, "deterministic job length (eps > 0)")->required();
    example1->add_option("--trials", cfg.trials, "Monte Carlo cross-check trials (0 = skip)");
    example1->add_option("--seed", cfg.seed, "random seed");
    add_output_options(example1, cfg, format);

    CLI::App* example2 = app.add_subcommand(
        "example2", "translated two-point jobs with weights 1 and 2");
    example2->add_option("--M", cfg.M, "scale parameter (M > 2)")->required();
    example2->add_option("--eps", cfg.eps, "translation offset above 1 (eps > 0)")->required();
    example2->add_option("--trials", cfg.trials, "Monte Carlo cross-check trials (0 = skip)");
    example2->add_option("--seed", cfg.seed, "random seed");
    add_output_options(example2, cfg, format);

    CLI::App* verify = app.add_subcommand(
        "verify", "check the class guarantees on random instances (exit 2 on failure)");
    verify->add_option("--class", cfg.class_name, "symmetric, shape-uniform, translated or exponential")
        ->required()
        ->check(CLI::IsMember({"symmetric", "shape-uniform", "translated", "exponential"}));
    verify->add_option("--count", cfg.count, "number of random instances");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--tol", cfg.tol, "quadrature relative tolerance");
    add_output_options(verify, cfg, format);

    CLI::App* sweep = app.add_subcommand(
        "sweep-alpha", "gap of separated exponential instances against the 1/(1+alpha) bound");
    sweep->add_option("--alphas", cfg.alphas, "comma-separated list, all >= 1")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seed", cfg.seed, "random seed");
    add_output_options(sweep, cfg, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.policy = samsched::parse_policy(policy);
        cfg.format = samsched::parse_format(format);
        return samsched::run(cfg);
    } catch (const samsched::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
