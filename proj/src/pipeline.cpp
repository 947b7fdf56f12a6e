#include "cocite/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <utility>

#include "cocite/centrality.hpp"
#include "cocite/csv.hpp"
#include "cocite/errors.hpp"
#include "cocite/scores.hpp"

namespace cocite {

namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open input file '" + path + "'");
    return in;
}

template <typename Fn> void write_file(const fs::path &path, Fn fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write '" + path.string() + "'");
    fn(out);
    out.flush();
    if (!out)
        throw ConfigError("failed while writing '" + path.string() + "'");
}

fs::path ensure_out_dir(const RunConfig &config) {
    fs::path out(config.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + config.out_dir +
                          "': " + ec.message());
    return out;
}

// Raw weights for --weight custom:<path>: CSV `author_id,weight`, exactly
// one row per selected author.
std::vector<double> load_custom_weights(const std::string &path,
                                        const std::vector<std::string> &authors) {
    std::ifstream in = open_input(path);
    std::vector<std::string> lines = csv::read_lines(in);
    if (lines.empty())
        throw ParseError("empty weight file '" + path + "'", 1);
    if (csv::split_line(lines[0], 1) != std::vector<std::string>{"author_id", "weight"})
        throw ParseError("expected weight header 'author_id,weight'", 1);

    std::map<std::string, double> byAuthor;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        if (lines[i].empty())
            continue;
        std::vector<std::string> fields = csv::split_line(lines[i], line_no);
        if (fields.size() != 2)
            throw ParseError("expected 2 fields, got " + std::to_string(fields.size()), line_no);
        char *end = nullptr;
        double w = std::strtod(fields[1].c_str(), &end);
        if (fields[1].empty() || end != fields[1].c_str() + fields[1].size())
            throw ParseError("invalid weight '" + fields[1] + "'", line_no);
        if (!byAuthor.emplace(fields[0], w).second)
            throw ParseError("duplicate author '" + fields[0] + "'", line_no);
    }

    std::vector<double> raw;
    raw.reserve(authors.size());
    for (const std::string &author : authors) {
        auto it = byAuthor.find(author);
        if (it == byAuthor.end())
            throw ConfigError("weight file is missing author '" + author + "'");
        raw.push_back(it->second);
        byAuthor.erase(it);
    }
    if (!byAuthor.empty())
        throw ConfigError("weight file names unselected author '" + byAuthor.begin()->first +
                          "'");
    return raw;
}

TeleportVector teleport_for(const Corpus &corpus, const RunConfig &config, TeleportKind kind) {
    if (kind == TeleportKind::Custom) {
        if (config.custom_weight_path.empty())
            throw ConfigError("custom teleport weights need a weight file");
        return make_custom_teleport(
            load_custom_weights(config.custom_weight_path, corpus.authors));
    }
    return make_teleport(kind, corpus.authors, corpus.stats);
}

PageRankResult solve_one(const MarkovMatrix &t, double d, const TeleportVector &w,
                         const RunConfig &config, bool direct) {
    try {
        if (direct)
            return steady_state_direct(t, d, w);
        PowerOptions opt;
        opt.tol = config.tol;
        opt.max_iter = config.max_iter;
        return power_iterate(t, d, w, opt);
    } catch (const ConvergenceError &e) {
        throw ConvergenceError("d=" + csv::format_full(d) + ": " + e.what(), e.last_iterate(),
                               e.iterations(), e.residual());
    }
}

std::vector<double> citation_scores(const Corpus &corpus) {
    std::vector<double> v;
    v.reserve(corpus.authors.size());
    for (const std::string &author : corpus.authors)
        v.push_back(static_cast<double>(corpus.stats.at(author).citation_count));
    return v;
}

std::vector<double> h_index_scores(const Corpus &corpus) {
    std::vector<double> v;
    v.reserve(corpus.authors.size());
    for (const std::string &author : corpus.authors)
        v.push_back(static_cast<double>(h_index(corpus.stats.at(author).per_paper_citations)));
    return v;
}

bool degenerate(const Ranking &rk) {
    for (double r : rk.ranks)
        if (r != rk.ranks.front())
            return false;
    return !rk.ranks.empty();
}

// Lazily built network artifacts shared by the measure computations.
struct MeasureContext {
    const Corpus &corpus;
    const RunConfig &config;

    MarkovMatrix t;
    bool t_ready = false;
    CentralityResult degree, closeness, betweenness;
    bool centrality_ready = false;
    std::map<TeleportKind, TeleportVector> teleports;

    explicit MeasureContext(const Corpus &c, const RunConfig &cfg) : corpus(c), config(cfg) {}

    const MarkovMatrix &markov() {
        if (!t_ready) {
            t = normalize_columns(apply_diagonal_policy(corpus.net, config.diagonal),
                                  config.dangling);
            t_ready = true;
        }
        return t;
    }

    void ensure_centrality() {
        if (!centrality_ready) {
            SimpleGraph g = to_simple_graph(corpus.net, config.theta);
            degree = degree_centrality(g);
            closeness = closeness_centrality(g);
            betweenness = betweenness_centrality(g);
            centrality_ready = true;
        }
    }

    const TeleportVector &teleport(TeleportKind kind) {
        auto it = teleports.find(kind);
        if (it == teleports.end())
            it = teleports.emplace(kind, teleport_for(corpus, config, kind)).first;
        return it->second;
    }

    Ranking ranking_for(const MeasureSpec &spec) {
        const std::string label = measure_label(spec);
        const bool direct = config.method == MethodChoice::Direct;
        if (is_pagerank_family(spec.family) || spec.family == MeasureFamily::Degree ||
            spec.family == MeasureFamily::Betweenness || spec.family == MeasureFamily::Closeness)
            if (!corpus.has_network)
                throw ConfigError("measure '" + label + "' needs a co-citation network");

        switch (spec.family) {
        case MeasureFamily::PageRank:
            return ranks_from_scores(
                solve_one(markov(), spec.d, teleport(TeleportKind::Uniform), config, direct)
                    .scores,
                RankDirection::HigherBetter, label);
        case MeasureFamily::PageRankCitations:
            if (!corpus.has_citations)
                throw ConfigError("measure '" + label + "' needs citation counts");
            return ranks_from_scores(
                solve_one(markov(), spec.d, teleport(TeleportKind::Citations), config, direct)
                    .scores,
                RankDirection::HigherBetter, label);
        case MeasureFamily::PageRankPublications:
            if (!corpus.has_paper_stats)
                throw ConfigError("measure '" + label + "' needs publication counts");
            return ranks_from_scores(
                solve_one(markov(), spec.d, teleport(TeleportKind::Publications), config, direct)
                    .scores,
                RankDirection::HigherBetter, label);
        case MeasureFamily::Degree:
            ensure_centrality();
            return ranks_from_scores(degree.values, RankDirection::HigherBetter, label);
        case MeasureFamily::Betweenness:
            ensure_centrality();
            return ranks_from_scores(betweenness.values, RankDirection::HigherBetter, label);
        case MeasureFamily::Closeness:
            ensure_centrality();
            return ranks_from_scores(closeness.values, RankDirection::HigherBetter, label);
        case MeasureFamily::HIndex:
            if (!corpus.has_paper_stats)
                throw ConfigError("measure '" + label + "' needs per-paper citation counts");
            return ranks_from_scores(h_index_scores(corpus), RankDirection::HigherBetter, label);
        case MeasureFamily::Citation:
            if (!corpus.has_citations)
                throw ConfigError("measure '" + label + "' needs citation counts");
            return ranks_from_scores(citation_scores(corpus), RankDirection::HigherBetter, label);
        }
        throw ConfigError("unhandled measure '" + label + "'");
    }
};

} // namespace

Corpus load_corpus(const RunConfig &config) {
    Corpus corpus;
    std::ifstream in = open_input(config.input_path);
    switch (config.format) {
    case RecordFormat::PapersCsv: {
        std::vector<PaperRecord> papers = parse_papers(in);
        corpus.stats = accumulate_stats(papers);
        corpus.authors = select_top_authors(corpus.stats, config.threshold);
        if (corpus.authors.empty())
            throw ConfigError("no authors with more than " + std::to_string(config.threshold) +
                              " citations");
        corpus.net = build_cocitation(papers, corpus.authors, config.pair_multiplicity);
        corpus.has_network = true;
        corpus.has_citations = true;
        corpus.has_paper_stats = true;
        corpus.paper_count = papers.size();
        for (const PaperRecord &p : papers)
            corpus.citation_pair_count += static_cast<long long>(p.cited_authors.size());
        break;
    }
    case RecordFormat::EdgesCsv: {
        corpus.net = load_edges_csv(in);
        corpus.net.validate();
        corpus.authors = corpus.net.authors;
        bool any = false;
        for (int j = 0; j < corpus.net.n; ++j) {
            AuthorStats s;
            s.author_id = corpus.authors[static_cast<std::size_t>(j)];
            s.citation_count = corpus.net.at(j, j);
            if (s.citation_count > 0)
                any = true;
            corpus.stats.emplace(s.author_id, std::move(s));
        }
        corpus.has_network = true;
        corpus.has_citations = any;
        if (config.threshold_set)
            std::cerr << "note: --threshold is ignored for edges-csv input\n";
        break;
    }
    case RecordFormat::StatsCsv: {
        corpus.stats = load_stats_csv(in);
        corpus.authors = select_top_authors(corpus.stats, config.threshold);
        if (corpus.authors.empty())
            throw ConfigError("no authors with more than " + std::to_string(config.threshold) +
                              " citations");
        corpus.has_citations = true;
        corpus.has_paper_stats = true;
        break;
    }
    }
    return corpus;
}

std::vector<double> default_d_grid() {
    return {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
}

std::vector<double> parse_d_specs(const std::vector<std::string> &specs) {
    auto parse_num = [](const std::string &s, const std::string &spec) {
        char *end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size())
            throw ConfigError("bad damping value in '" + spec + "'");
        return v;
    };
    std::vector<double> ds;
    auto push = [&ds](double v, const std::string &spec) {
        if (!(v >= 0.0 && v < 1.0))
            throw ConfigError("damping factor must lie in [0,1) in '" + spec + "'");
        ds.push_back(v);
    };

    for (const std::string &spec : specs) {
        std::size_t c1 = spec.find(':');
        if (c1 == std::string::npos) {
            push(parse_num(spec, spec), spec);
            continue;
        }
        std::size_t c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos)
            throw ConfigError("bad damping range '" + spec + "' (need start:end:step)");
        double start = parse_num(spec.substr(0, c1), spec);
        double end = parse_num(spec.substr(c1 + 1, c2 - c1 - 1), spec);
        double step = parse_num(spec.substr(c2 + 1), spec);
        if (!(step > 0.0))
            throw ConfigError("damping step must be positive in '" + spec + "'");
        if (end < start)
            throw ConfigError("empty damping range '" + spec + "'");
        for (long long i = 0;; ++i) {
            double v = start + static_cast<double>(i) * step;
            if (v > end + step * 1e-9)
                break;
            // Snap to 12 significant digits so 0.05 + 3*0.1 lands on 0.35
            // exactly; file names and labels use the shortest round-trip form.
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            push(std::strtod(buf, nullptr), spec);
            if (i > 1000000)
                throw ConfigError("damping range '" + spec + "' has too many values");
        }
    }
    if (ds.empty())
        throw ConfigError("no damping values given");
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

void cmd_rank(const RunConfig &config) {
    Corpus corpus = load_corpus(config);
    if (!corpus.has_network)
        throw ConfigError("rank needs a co-citation network; stats-csv carries author "
                          "statistics only");
    std::vector<double> ds =
        config.d_specs.empty() ? default_d_grid() : parse_d_specs(config.d_specs);
    MeasureContext ctx(corpus, config);
    const TeleportVector &w = ctx.teleport(config.weight);
    const MarkovMatrix &t = ctx.markov();
    fs::path out = ensure_out_dir(config);

    const std::string kind = teleport_kind_label(config.weight);
    std::vector<Ranking> pr_ranks;
    pr_ranks.reserve(ds.size());
    for (double d : ds) {
        std::string stem = "pr_" + kind + "_d" + csv::format_full(d);
        PageRankResult main =
            solve_one(t, d, w, config, config.method == MethodChoice::Direct);
        Ranking rk = ranks_from_scores(main.scores, RankDirection::HigherBetter,
                                       "PR(" + csv::format_full(d) + ")");
        write_file(out / (stem + ".csv"), [&](std::ostream &os) {
            write_score_csv(os, corpus.authors, main.scores, rk);
        });
        if (config.method == MethodChoice::Both) {
            PageRankResult check = solve_one(t, d, w, config, true);
            Ranking rk2 = ranks_from_scores(check.scores, RankDirection::HigherBetter,
                                            "PR_direct(" + csv::format_full(d) + ")");
            write_file(out / (stem + "_direct.csv"), [&](std::ostream &os) {
                write_score_csv(os, corpus.authors, check.scores, rk2);
            });
        }
        pr_ranks.push_back(std::move(rk));
    }

    ctx.ensure_centrality();
    write_file(out / "centrality.csv", [&](std::ostream &os) {
        write_centrality_csv(os, corpus.authors, ctx.degree, ctx.closeness, ctx.betweenness);
    });

    Ranking citation =
        ranks_from_scores(citation_scores(corpus), RankDirection::HigherBetter, "Citation");
    Ranking rdeg = ranks_from_scores(ctx.degree.values, RankDirection::HigherBetter, "Degree");
    Ranking rbtw =
        ranks_from_scores(ctx.betweenness.values, RankDirection::HigherBetter, "Betweenness");
    Ranking rclo =
        ranks_from_scores(ctx.closeness.values, RankDirection::HigherBetter, "Closeness");

    std::vector<std::string> trajectory(corpus.authors.size(), "n/a");
    if (ds.size() >= 2) {
        std::vector<double> by_d(ds.size());
        for (std::size_t j = 0; j < corpus.authors.size(); ++j) {
            for (std::size_t i = 0; i < ds.size(); ++i)
                by_d[i] = pr_ranks[i].ranks[j];
            trajectory[j] = trajectory_label(classify_trajectory(by_d));
        }
    }
    write_file(out / "rank_table.csv", [&](std::ostream &os) {
        write_rank_table_csv(os, corpus.authors, ds, pr_ranks, citation, rdeg, rbtw, rclo,
                             trajectory);
    });
}

void cmd_correlate(const RunConfig &config) {
    Corpus corpus = load_corpus(config);
    const bool defaulted = config.measures.empty();
    std::vector<MeasureSpec> specs;
    if (defaulted) {
        specs = default_measure_selection();
    } else {
        specs.reserve(config.measures.size());
        for (const std::string &label : config.measures)
            specs.push_back(parse_measure_label(label));
    }

    MeasureContext ctx(corpus, config);
    std::vector<Ranking> rankings;
    std::vector<std::string> labels;
    for (const MeasureSpec &spec : specs) {
        std::string label = measure_label(spec);
        try {
            Ranking rk = ctx.ranking_for(spec);
            if (defaulted && degenerate(rk)) {
                std::cerr << "note: skipping " << label << ": all authors tie\n";
                continue;
            }
            rankings.push_back(std::move(rk));
            labels.push_back(std::move(label));
        } catch (const ConfigError &e) {
            if (!defaulted)
                throw;
            std::cerr << "note: skipping " << label << ": " << e.what() << "\n";
        }
    }
    if (rankings.size() < 2)
        throw ConfigError("fewer than 2 computable measures selected");

    SignificanceOptions sig;
    sig.permutation = corpus.authors.size() < 10;
    sig.seed = config.seed;
    std::vector<std::vector<CorrelationReport>> matrix = correlation_matrix(rankings, sig);

    fs::path out = ensure_out_dir(config);
    write_file(out / "correlation.csv",
               [&](std::ostream &os) { write_correlation_csv(os, labels, matrix); });
    std::cout << "measures: " << labels.size() << "\n";
    std::cout << "mean r: " << csv::format_sig6(mean_offdiagonal_r(matrix)) << "\n";
}

void cmd_scatter(const RunConfig &config) {
    if (config.x_measure.empty() || config.y_measure.empty())
        throw ConfigError("scatter needs an x measure and a y measure");
    Corpus corpus = load_corpus(config);
    MeasureContext ctx(corpus, config);
    Ranking x = ctx.ranking_for(parse_measure_label(config.x_measure));
    Ranking y = ctx.ranking_for(parse_measure_label(config.y_measure));
    fs::path out = ensure_out_dir(config);
    write_file(out / "scatter.csv",
               [&](std::ostream &os) { write_scatter_csv(os, corpus.authors, x, y); });
}

void cmd_ingest_check(const RunConfig &config) {
    Corpus corpus = load_corpus(config);
    if (corpus.has_network)
        corpus.net.validate();

    if (config.format == RecordFormat::PapersCsv) {
        std::cout << "papers: " << corpus.paper_count << "\n";
        std::cout << "citation pairs: " << corpus.citation_pair_count << "\n";
    } else if (config.format == RecordFormat::StatsCsv) {
        long long papers = 0, pairs = 0;
        for (const auto &[id, s] : corpus.stats) {
            papers += s.first_author_pub_count;
            pairs += s.citation_count;
        }
        std::cout << "papers: " << papers << "\n";
        std::cout << "citation pairs: " << pairs << "\n";
    } else {
        std::cout << "papers: n/a\n";
        std::cout << "citation pairs: n/a\n";
    }
    std::cout << "selected authors: " << corpus.authors.size() << "\n";
    if (corpus.has_network) {
        std::cout << "network nodes: " << corpus.net.n << "\n";
        std::cout << "network edges: " << to_simple_graph(corpus.net, config.theta).edge_count()
                  << "\n";
    } else {
        std::cout << "network nodes: n/a\n";
        std::cout << "network edges: n/a\n";
    }
}

} // namespace cocite
