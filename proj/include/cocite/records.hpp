#pragma once

#include <string>
#include <vector>

namespace cocite {

// One publication and the first authors of its references. cited_authors is
// deduplicated per paper (input order preserved); cited_multiplicity keeps
// the raw occurrence count of each entry for multiplicity-weighted pairing.
struct PaperRecord {
    std::string paper_id;
    int year = 0;
    std::string first_author;
    std::vector<std::string> cited_authors;
    std::vector<long long> cited_multiplicity;
};

struct AuthorStats {
    std::string author_id;
    long long citation_count = 0;          // papers citing this author, after per-paper dedup
    long long first_author_pub_count = 0;  // papers with this author as first author
    std::vector<long long> per_paper_citations; // one entry per first-author paper
};

} // namespace cocite
