#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocite/errors.hpp"
#include "cocite/pipeline.hpp"

namespace {

struct CliStrings {
    std::string format = "papers-csv";
    std::string weight = "uniform";
    std::string method = "power";
    std::string diagonal = "zero";
    std::string dangling = "uniform";
};

void add_common_options(CLI::App *cmd, cocite::RunConfig &cfg, CliStrings &s) {
    cmd->add_option("--input", cfg.input_path, "input file")->required();
    cmd->add_option("--format", s.format, "input format: papers-csv|edges-csv|stats-csv");
    cmd->add_option("--threshold", cfg.threshold,
                    "citation cutoff for author selection (strict >)");
    cmd->add_option("--d", cfg.d_specs, "damping factor, repeatable, or start:end:step")
        ->allow_extra_args(false);
    cmd->add_option("--weight", s.weight,
                    "teleport weights: uniform|citations|publications|custom:<path>");
    cmd->add_option("--diagonal", s.diagonal, "co-citation diagonal policy: keep|zero");
    cmd->add_option("--dangling", s.dangling, "zero-column policy: uniform|error");
    cmd->add_option("--theta", cfg.theta, "co-citation count threshold for graph edges");
    cmd->add_option("--tol", cfg.tol, "power iteration L1 stopping tolerance");
    cmd->add_option("--max-iter", cfg.max_iter, "power iteration cap (default: from d and tol)");
    cmd->add_option("--method", s.method, "solver: power|direct|both");
    cmd->add_flag("--pair-multiplicity", cfg.pair_multiplicity,
                  "weight co-citation pairs by per-paper reference multiplicity");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--seed", cfg.seed, "seed for permutation significance tests");
}

cocite::TeleportKind parse_weight(const std::string &s, std::string &custom_path) {
    if (s == "uniform")
        return cocite::TeleportKind::Uniform;
    if (s == "citations")
        return cocite::TeleportKind::Citations;
    if (s == "publications")
        return cocite::TeleportKind::Publications;
    if (s.rfind("custom:", 0) == 0) {
        custom_path = s.substr(7);
        if (custom_path.empty())
            throw cocite::ConfigError("--weight custom: needs a file path");
        return cocite::TeleportKind::Custom;
    }
    throw cocite::ConfigError("unknown weight '" + s +
                              "' (expected uniform, citations, publications, custom:<path>)");
}

cocite::MethodChoice parse_method(const std::string &s) {
    if (s == "power")
        return cocite::MethodChoice::Power;
    if (s == "direct")
        return cocite::MethodChoice::Direct;
    if (s == "both")
        return cocite::MethodChoice::Both;
    throw cocite::ConfigError("unknown method '" + s + "' (expected power, direct, both)");
}

cocite::DiagonalPolicy parse_diagonal(const std::string &s) {
    if (s == "keep")
        return cocite::DiagonalPolicy::Keep;
    if (s == "zero")
        return cocite::DiagonalPolicy::Zero;
    throw cocite::ConfigError("unknown diagonal policy '" + s + "' (expected keep, zero)");
}

cocite::DanglingPolicy parse_dangling(const std::string &s) {
    if (s == "uniform")
        return cocite::DanglingPolicy::Uniform;
    if (s == "error")
        return cocite::DanglingPolicy::Error;
    throw cocite::ConfigError("unknown dangling policy '" + s + "' (expected uniform, error)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"author co-citation networks: PageRank, centrality, rank correlation"};
    app.require_subcommand(1);

    cocite::RunConfig cfg;
    CliStrings s;

    CLI::App *rank = app.add_subcommand("rank", "PageRank sweep, centralities, rank table");
    CLI::App *correlate =
        app.add_subcommand("correlate", "Spearman correlation matrix across measures");
    CLI::App *scatter = app.add_subcommand("scatter", "rank-vs-rank data for two measures");
    CLI::App *ingest =
        app.add_subcommand("ingest-check", "validate input and print corpus statistics");

    for (CLI::App *cmd : {rank, correlate, scatter, ingest})
        add_common_options(cmd, cfg, s);
    correlate
        ->add_option("--measure", cfg.measures,
                     "measure label, repeatable (default: the 14-measure set)")
        ->allow_extra_args(false);
    scatter->add_option("--x", cfg.x_measure, "measure for the x axis")->required();
    scatter->add_option("--y", cfg.y_measure, "measure for the y axis")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 3;
    }

    CLI::App *sub = app.get_subcommands().front();
    try {
        cfg.format = cocite::parse_record_format(s.format);
        cfg.weight = parse_weight(s.weight, cfg.custom_weight_path);
        cfg.method = parse_method(s.method);
        cfg.diagonal = parse_diagonal(s.diagonal);
        cfg.dangling = parse_dangling(s.dangling);
        cfg.threshold_set = sub->count("--threshold") > 0;
        if (cfg.threshold < 0)
            throw cocite::ConfigError("--threshold must be nonnegative");
        if (cfg.theta < 1)
            throw cocite::ConfigError("--theta must be at least 1");
        if (!(cfg.tol > 0.0))
            throw cocite::ConfigError("--tol must be positive");
        if (sub->count("--max-iter") > 0 && cfg.max_iter < 1)
            throw cocite::ConfigError("--max-iter must be at least 1");

        if (sub == rank)
            cocite::cmd_rank(cfg);
        else if (sub == correlate)
            cocite::cmd_correlate(cfg);
        else if (sub == scatter)
            cocite::cmd_scatter(cfg);
        else
            cocite::cmd_ingest_check(cfg);
    } catch (const cocite::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cocite::ConvergenceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cocite::ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
