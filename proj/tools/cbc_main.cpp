#include "cbc/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

namespace {

int default_jobs() {
    if (const char* env = std::getenv("CBC_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cbc: congruence verifier and counterexample search for sums of central "
                 "binomial coefficients and Catalan numbers modulo prime powers"};
    app.require_subcommand(1);

    cbc::RunConfig cfg;
    cfg.jobs = default_jobs();
    std::string format = "text";
    std::string predicate = "both";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--jobs", cfg.jobs, "worker threads (env CBC_JOBS sets the default)");
        sub->add_option("--format", format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output,-o", cfg.output_path, "write the report to a file");
        sub->add_flag("--perturb", cfg.perturb, "")->group(""); // failure-injection fixture
    };

    CLI::App* verify = app.add_subcommand("verify", "run congruence check grids");
    verify->add_option("--checks", cfg.checks, "check id globs, e.g. 'thm1.1/*'");
    verify->add_option("--p", cfg.p_set, "primes to cover");
    verify->add_option("--pa-cap", cfg.pa_cap, "cover every a with p^a <= cap");
    verify->add_option("--m-max", cfg.m_max, "largest m in the two-parameter grids");
    verify->add_option("--n-max", cfg.n_max, "largest n (Catalan-offset grids)");
    add_common(verify);

    CLI::App* search = app.add_subcommand("search", "composite counterexample sweep");
    search->add_option("--bound", cfg.bound, "test every composite n <= bound with 3 not dividing n");
    search->add_option("--predicate", predicate, "central, catalan or both")
        ->check(CLI::IsMember({"central", "catalan", "both"}));
    search->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint file for resumable sweeps");
    add_common(search);

    CLI::App* table = app.add_subcommand("table", "print the exact S_d table");
    table->add_option("--s-max", cfg.s_max, "largest d (at most 25)");
    add_common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) cfg.command = cbc::RunConfig::Command::Verify;
    if (search->parsed()) cfg.command = cbc::RunConfig::Command::Search;
    if (table->parsed()) cfg.command = cbc::RunConfig::Command::Table;
    cfg.format = format == "json"  ? cbc::RunConfig::Format::Json
                 : format == "csv" ? cbc::RunConfig::Format::Csv
                                   : cbc::RunConfig::Format::Text;
    try {
        cfg.predicate = cbc::predicate_from_name(predicate);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return cbc::run(cfg, std::cout, std::cerr);
}
