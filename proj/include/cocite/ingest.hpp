#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cocite/network.hpp"
#include "cocite/records.hpp"

namespace cocite {

enum class RecordFormat { PapersCsv, EdgesCsv, StatsCsv };

RecordFormat parse_record_format(const std::string &name); // throws ConfigError

// Parses "papers-csv": header `paper_id,year,first_author,cited_authors`,
// where cited_authors is a `;`-separated list inside one CSV field.
// Cited authors are deduplicated per paper (order preserved, raw counts kept
// in cited_multiplicity). Throws ParseError with the offending line number.
std::vector<PaperRecord> parse_papers(std::istream &in);

// Citation and publication totals per author. Citation counting is
// paper-level: each paper contributes at most 1 to every author it cites.
// Citation records identify only the cited author, never the cited paper,
// so per_paper_citations spreads the author's corpus citations as evenly as
// possible over their first-author papers, earliest (year, paper_id) first.
std::map<std::string, AuthorStats> accumulate_stats(const std::vector<PaperRecord> &papers);

// Authors with citation_count strictly above the threshold, ordered by
// citation_count descending, ties broken lexicographically.
std::vector<std::string> select_top_authors(const std::map<std::string, AuthorStats> &stats,
                                            long long threshold);

// A[j][k] (j != k) = papers whose deduped citations contain both authors;
// diagonal = the author's citation count restricted to this corpus.
// With pair_multiplicity, a paper contributes m_j * m_k per pair (and m_j^2
// on the diagonal), m_j being the raw reference count of author j.
CoCitationNetwork build_cocitation(const std::vector<PaperRecord> &papers,
                                   const std::vector<std::string> &authors,
                                   bool pair_multiplicity = false);

// Parses "edges-csv": header `author_a,author_b,count`. Rows define A
// directly; the loader symmetrizes and rejects conflicting asymmetric
// counts. Rows with author_a == author_b set the diagonal. Node order is
// lexicographic.
CoCitationNetwork load_edges_csv(std::istream &in);

// Parses "stats-csv": header
// `author_id,citation_count,first_author_pub_count,per_paper_citations`,
// the last a `;`-separated list whose length must equal the pub count.
std::map<std::string, AuthorStats> load_stats_csv(std::istream &in);

} // namespace cocite
