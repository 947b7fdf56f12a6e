#include "cocite/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "cocite/csv.hpp"
#include "cocite/errors.hpp"

namespace cocite {

namespace {

const char *const kLabelForms =
    "PR(d), PR_c(d), PR_p(d), degree, betweenness, closeness, h-index, citation";

std::string lower(const std::string &s) {
    std::string r = s;
    std::transform(r.begin(), r.end(), r.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return r;
}

std::string damping_suffix(double d) {
    std::string s = csv::format_full(d);
    if (s.rfind("0.", 0) == 0)
        s.erase(0, 1); // "0.15" -> ".15", matching the report label style
    return s;
}

// Rows ordered by rank ascending, ties by author id.
std::vector<std::size_t> rank_order(const std::vector<std::string> &authors,
                                    const Ranking &ranking) {
    std::vector<std::size_t> order(authors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ranking.ranks[a] != ranking.ranks[b])
            return ranking.ranks[a] < ranking.ranks[b];
        return authors[a] < authors[b];
    });
    return order;
}

} // namespace

bool is_pagerank_family(MeasureFamily family) {
    return family == MeasureFamily::PageRank || family == MeasureFamily::PageRankCitations ||
           family == MeasureFamily::PageRankPublications;
}

std::string measure_label(const MeasureSpec &spec) {
    switch (spec.family) {
    case MeasureFamily::PageRank:
        return "PR(" + damping_suffix(spec.d) + ")";
    case MeasureFamily::PageRankCitations:
        return "PR_c(" + damping_suffix(spec.d) + ")";
    case MeasureFamily::PageRankPublications:
        return "PR_p(" + damping_suffix(spec.d) + ")";
    case MeasureFamily::Degree:
        return "Degree";
    case MeasureFamily::Betweenness:
        return "Betweenness";
    case MeasureFamily::Closeness:
        return "Closeness";
    case MeasureFamily::HIndex:
        return "h-index";
    case MeasureFamily::Citation:
        return "Citation";
    }
    return "?";
}

MeasureSpec parse_measure_label(const std::string &label) {
    std::string s = lower(label);
    if (s == "degree")
        return {MeasureFamily::Degree, 0.0};
    if (s == "betweenness")
        return {MeasureFamily::Betweenness, 0.0};
    if (s == "closeness")
        return {MeasureFamily::Closeness, 0.0};
    if (s == "h-index")
        return {MeasureFamily::HIndex, 0.0};
    if (s == "citation")
        return {MeasureFamily::Citation, 0.0};

    std::size_t open = s.find('(');
    if (open != std::string::npos && s.back() == ')') {
        std::string fam = s.substr(0, open);
        std::string num = s.substr(open + 1, s.size() - open - 2);
        if (!num.empty() && num[0] == '.')
            num.insert(num.begin(), '0');
        MeasureFamily family;
        if (fam == "pr")
            family = MeasureFamily::PageRank;
        else if (fam == "pr_c")
            family = MeasureFamily::PageRankCitations;
        else if (fam == "pr_p")
            family = MeasureFamily::PageRankPublications;
        else
            throw ConfigError("unknown measure '" + label + "' (expected " + kLabelForms + ")");
        char *end = nullptr;
        double d = std::strtod(num.c_str(), &end);
        if (num.empty() || end != num.c_str() + num.size() || !(d >= 0.0 && d < 1.0))
            throw ConfigError("bad damping factor in measure '" + label +
                              "' (need a number in [0,1))");
        return {family, d};
    }
    throw ConfigError("unknown measure '" + label + "' (expected " + kLabelForms + ")");
}

std::vector<MeasureSpec> default_measure_selection() {
    std::vector<MeasureSpec> specs;
    for (MeasureFamily family : {MeasureFamily::PageRank, MeasureFamily::PageRankCitations,
                                 MeasureFamily::PageRankPublications})
        for (double d : {0.15, 0.55, 0.85})
            specs.push_back({family, d});
    specs.push_back({MeasureFamily::Degree, 0.0});
    specs.push_back({MeasureFamily::Betweenness, 0.0});
    specs.push_back({MeasureFamily::Closeness, 0.0});
    specs.push_back({MeasureFamily::HIndex, 0.0});
    specs.push_back({MeasureFamily::Citation, 0.0});
    return specs;
}

void write_score_csv(std::ostream &out, const std::vector<std::string> &authors,
                     const std::vector<double> &scores, const Ranking &ranking) {
    out << "author_id,score,rank\n";
    for (std::size_t j : rank_order(authors, ranking))
        out << csv::quote(authors[j]) << ',' << csv::format_full(scores[j]) << ','
            << csv::format_full(ranking.ranks[j]) << '\n';
}

void write_rank_table_csv(std::ostream &out, const std::vector<std::string> &authors,
                          const std::vector<double> &d_values,
                          const std::vector<Ranking> &pagerank_ranks, const Ranking &citation,
                          const Ranking &degree, const Ranking &betweenness,
                          const Ranking &closeness,
                          const std::vector<std::string> &trajectory) {
    out << "author_id";
    for (double d : d_values)
        out << ",d=" << csv::format_full(d);
    out << ",citation,degree,betweenness,closeness,trajectory\n";
    for (std::size_t j : rank_order(authors, citation)) {
        out << csv::quote(authors[j]);
        for (const Ranking &rk : pagerank_ranks)
            out << ',' << csv::format_sig6(rk.ranks[j]);
        out << ',' << csv::format_sig6(citation.ranks[j]) << ','
            << csv::format_sig6(degree.ranks[j]) << ',' << csv::format_sig6(betweenness.ranks[j])
            << ',' << csv::format_sig6(closeness.ranks[j]) << ',' << trajectory[j] << '\n';
    }
}

void write_centrality_csv(std::ostream &out, const std::vector<std::string> &authors,
                          const CentralityResult &degree, const CentralityResult &closeness,
                          const CentralityResult &betweenness) {
    out << "author_id,degree,closeness,betweenness\n";
    for (std::size_t j = 0; j < authors.size(); ++j)
        out << csv::quote(authors[j]) << ',' << csv::format_full(degree.values[j]) << ','
            << csv::format_full(closeness.values[j]) << ','
            << csv::format_full(betweenness.values[j]) << '\n';
}

void write_correlation_csv(std::ostream &out, const std::vector<std::string> &labels,
                           const std::vector<std::vector<CorrelationReport>> &matrix) {
    out << "measure";
    for (const std::string &label : labels)
        out << ',' << csv::quote(label);
    out << '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << csv::quote(labels[i]);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const CorrelationReport &c = matrix[i][j];
            std::string cell = csv::format_sig6(c.r);
            if (!c.significant_05)
                cell += '\'';
            else if (!c.significant_01)
                cell += '*';
            out << ',' << csv::quote(cell);
        }
        out << '\n';
    }
}

void write_scatter_csv(std::ostream &out, const std::vector<std::string> &authors,
                       const Ranking &x, const Ranking &y) {
    out << "author_id,x_rank,y_rank\n";
    for (std::size_t j : rank_order(authors, x))
        out << csv::quote(authors[j]) << ',' << csv::format_full(x.ranks[j]) << ','
            << csv::format_full(y.ranks[j]) << '\n';
}

} // namespace cocite
