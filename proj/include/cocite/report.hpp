#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cocite/centrality.hpp"
#include "cocite/scores.hpp"

namespace cocite {

enum class MeasureFamily {
    PageRank,             // uniform teleport
    PageRankCitations,    // teleport weighted by citation counts
    PageRankPublications, // teleport weighted by publication counts
    Degree,
    Betweenness,
    Closeness,
    HIndex,
    Citation,
};

struct MeasureSpec {
    MeasureFamily family = MeasureFamily::PageRank;
    double d = 0.0; // damping factor, meaningful for the PageRank families
};

bool is_pagerank_family(MeasureFamily family);

// "PR(.15)", "PR_c(.55)", "PR_p(.85)", "Degree", "Betweenness", "Closeness",
// "h-index", "Citation".
std::string measure_label(const MeasureSpec &spec);

// Case-insensitive inverse of measure_label; also accepts "PR(0.15)".
// Throws ConfigError listing the valid forms.
MeasureSpec parse_measure_label(const std::string &label);

// PR, PR_c, PR_p at d in {0.15, 0.55, 0.85}, then degree, betweenness,
// closeness, h-index, citation: 14 measures.
std::vector<MeasureSpec> default_measure_selection();

// `author_id,score,rank`, rows by rank ascending, ties by author id.
// Scores and ranks keep full precision.
void write_score_csv(std::ostream &out, const std::vector<std::string> &authors,
                     const std::vector<double> &scores, const Ranking &ranking);

// One row per author ordered by citation rank; one rank column per damping
// value, then citation/degree/betweenness/closeness ranks and the trajectory
// label. Report precision (6 significant digits).
void write_rank_table_csv(std::ostream &out, const std::vector<std::string> &authors,
                          const std::vector<double> &d_values,
                          const std::vector<Ranking> &pagerank_ranks, const Ranking &citation,
                          const Ranking &degree, const Ranking &betweenness,
                          const Ranking &closeness,
                          const std::vector<std::string> &trajectory);

// `author_id,degree,closeness,betweenness`, full precision, author order.
void write_centrality_csv(std::ostream &out, const std::vector<std::string> &authors,
                          const CentralityResult &degree, const CentralityResult &closeness,
                          const CentralityResult &betweenness);

// Square matrix with measure labels on both axes. Cells carry r at report
// precision plus a significance suffix: bare = significant at 0.01,
// `*` = at 0.05 only, `'` = not significant.
void write_correlation_csv(std::ostream &out, const std::vector<std::string> &labels,
                           const std::vector<std::vector<CorrelationReport>> &matrix);

// `author_id,x_rank,y_rank`, rows by x rank ascending, ties by author id.
void write_scatter_csv(std::ostream &out, const std::vector<std::string> &authors,
                       const Ranking &x, const Ranking &y);

} // namespace cocite
