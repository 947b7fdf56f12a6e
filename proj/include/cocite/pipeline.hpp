#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocite/ingest.hpp"
#include "cocite/network.hpp"
#include "cocite/pagerank.hpp"
#include "cocite/records.hpp"
#include "cocite/report.hpp"

namespace cocite {

enum class MethodChoice { Power, Direct, Both };

struct RunConfig {
    std::string input_path;
    RecordFormat format = RecordFormat::PapersCsv;
    long long threshold = 200;
    bool threshold_set = false; // true when given on the command line
    std::vector<std::string> d_specs; // each "0.3" or "start:end:step"; empty -> default grid
    TeleportKind weight = TeleportKind::Uniform;
    std::string custom_weight_path; // set when weight == Custom
    DiagonalPolicy diagonal = DiagonalPolicy::Zero;
    DanglingPolicy dangling = DanglingPolicy::Uniform;
    long long theta = 1;
    double tol = 1e-10;
    int max_iter = 0; // 0 -> derived from (d, tol)
    MethodChoice method = MethodChoice::Power;
    bool pair_multiplicity = false;
    std::string out_dir = ".";
    unsigned long long seed = 42;
    std::vector<std::string> measures; // correlate selection; empty -> default
    std::string x_measure, y_measure;  // scatter axes
};

// Every input format reduces to this. stats may be synthesized (edges-csv
// fills citation counts from the matrix diagonal); the has_* flags say which
// measures the data can support.
struct Corpus {
    CoCitationNetwork net; // empty when has_network is false
    std::vector<std::string> authors;
    std::map<std::string, AuthorStats> stats;
    bool has_network = false;
    bool has_citations = false;   // citation counts present and not all zero
    bool has_paper_stats = false; // publication counts / per-paper citations present
    std::size_t paper_count = 0;
    long long citation_pair_count = 0; // (paper, cited author) pairs after dedup
};

Corpus load_corpus(const RunConfig &config);

// {0.05, 0.15, ..., 0.95}
std::vector<double> default_d_grid();

// Accepts scalars and start:end:step ranges, validates each value into
// [0,1), sorts ascending, drops exact duplicates.
std::vector<double> parse_d_specs(const std::vector<std::string> &specs);

// Commands throw ParseError / ConfigError / ConvergenceError; the CLI maps
// them to exit codes 2 / 3 / 4.
void cmd_rank(const RunConfig &config);
void cmd_correlate(const RunConfig &config);
void cmd_scatter(const RunConfig &config);
void cmd_ingest_check(const RunConfig &config);

} // namespace cocite
