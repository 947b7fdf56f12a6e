#include "cocite/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cocite/csv.hpp"
#include "cocite/errors.hpp"

namespace cocite {

namespace {

long long parse_int_field(const std::string &field, const char *what, std::size_t line_no) {
    long long value = 0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        throw ParseError(std::string("invalid ") + what + " '" + field + "'", line_no);
    return value;
}

std::string trim(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

void check_header(const std::vector<std::string> &fields, const std::vector<std::string> &expect,
                  const char *format_name) {
    if (fields != expect) {
        std::string want;
        for (std::size_t i = 0; i < expect.size(); ++i) {
            if (i)
                want += ',';
            want += expect[i];
        }
        throw ParseError(std::string("expected ") + format_name + " header '" + want + "'", 1);
    }
}

void check_field_count(const std::vector<std::string> &fields, std::size_t expect,
                       std::size_t line_no) {
    if (fields.size() != expect)
        throw ParseError("expected " + std::to_string(expect) + " fields, got " +
                             std::to_string(fields.size()),
                         line_no);
}

} // namespace

RecordFormat parse_record_format(const std::string &name) {
    if (name == "papers-csv")
        return RecordFormat::PapersCsv;
    if (name == "edges-csv")
        return RecordFormat::EdgesCsv;
    if (name == "stats-csv")
        return RecordFormat::StatsCsv;
    throw ConfigError("unknown format '" + name +
                      "' (expected papers-csv, edges-csv, or stats-csv)");
}

std::vector<PaperRecord> parse_papers(std::istream &in) {
    std::vector<std::string> lines = csv::read_lines(in);
    std::vector<PaperRecord> papers;
    if (lines.empty())
        return papers;
    check_header(csv::split_line(lines[0], 1), {"paper_id", "year", "first_author", "cited_authors"},
                 "papers-csv");
    std::unordered_set<std::string> seen_ids;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        if (lines[i].empty())
            continue;
        std::vector<std::string> fields = csv::split_line(lines[i], line_no);
        check_field_count(fields, 4, line_no);

        PaperRecord rec;
        rec.paper_id = fields[0];
        if (rec.paper_id.empty())
            throw ParseError("empty paper_id", line_no);
        if (!seen_ids.insert(rec.paper_id).second)
            throw ParseError("duplicate paper_id '" + rec.paper_id + "'", line_no);
        rec.year = static_cast<int>(parse_int_field(fields[1], "year", line_no));
        rec.first_author = trim(fields[2]);
        if (rec.first_author.empty())
            throw ParseError("empty first_author", line_no);

        if (trim(fields[3]).empty())
            throw ParseError("empty cited-author field", line_no);
        std::size_t pos = 0;
        const std::string &list = fields[3];
        while (pos <= list.size()) {
            std::size_t semi = list.find(';', pos);
            std::string entry =
                trim(semi == std::string::npos ? list.substr(pos) : list.substr(pos, semi - pos));
            if (entry.empty())
                throw ParseError("empty entry in cited_authors list", line_no);
            auto it = std::find(rec.cited_authors.begin(), rec.cited_authors.end(), entry);
            if (it == rec.cited_authors.end()) {
                rec.cited_authors.push_back(entry);
                rec.cited_multiplicity.push_back(1);
            } else {
                rec.cited_multiplicity[static_cast<std::size_t>(it - rec.cited_authors.begin())]++;
            }
            if (semi == std::string::npos)
                break;
            pos = semi + 1;
        }
        papers.push_back(std::move(rec));
    }
    return papers;
}

std::map<std::string, AuthorStats> accumulate_stats(const std::vector<PaperRecord> &papers) {
    std::map<std::string, AuthorStats> stats;
    auto entry = [&stats](const std::string &id) -> AuthorStats & {
        AuthorStats &s = stats[id];
        if (s.author_id.empty())
            s.author_id = id;
        return s;
    };
    for (const PaperRecord &p : papers) {
        entry(p.first_author).first_author_pub_count++;
        for (const std::string &cited : p.cited_authors)
            entry(cited).citation_count++;
    }

    // Citation records name only the cited author, not the cited paper, so
    // the per-paper split is a convention: spread the author's corpus
    // citations as evenly as possible, earliest (year, paper_id) first.
    std::map<std::string, std::vector<std::pair<int, std::string>>> pubs;
    for (const PaperRecord &p : papers)
        pubs[p.first_author].emplace_back(p.year, p.paper_id);
    for (auto &[author, own] : pubs) {
        std::sort(own.begin(), own.end());
        AuthorStats &s = stats[author];
        long long k = static_cast<long long>(own.size());
        long long base = s.citation_count / k;
        long long extra = s.citation_count % k;
        s.per_paper_citations.assign(own.size(), base);
        for (long long i = 0; i < extra; ++i)
            s.per_paper_citations[static_cast<std::size_t>(i)]++;
    }
    return stats;
}

std::vector<std::string> select_top_authors(const std::map<std::string, AuthorStats> &stats,
                                            long long threshold) {
    std::vector<const AuthorStats *> picked;
    for (const auto &[id, s] : stats)
        if (s.citation_count > threshold)
            picked.push_back(&s);
    std::sort(picked.begin(), picked.end(), [](const AuthorStats *a, const AuthorStats *b) {
        if (a->citation_count != b->citation_count)
            return a->citation_count > b->citation_count;
        return a->author_id < b->author_id;
    });
    std::vector<std::string> order;
    order.reserve(picked.size());
    for (const AuthorStats *s : picked)
        order.push_back(s->author_id);
    return order;
}

CoCitationNetwork build_cocitation(const std::vector<PaperRecord> &papers,
                                   const std::vector<std::string> &authors,
                                   bool pair_multiplicity) {
    CoCitationNetwork net = CoCitationNetwork::zeros(authors);
    std::unordered_map<std::string, int> index;
    for (int j = 0; j < net.n; ++j)
        index.emplace(net.authors[static_cast<std::size_t>(j)], j);

    std::vector<std::pair<int, long long>> present;
    for (const PaperRecord &p : papers) {
        present.clear();
        for (std::size_t i = 0; i < p.cited_authors.size(); ++i) {
            auto it = index.find(p.cited_authors[i]);
            if (it != index.end())
                present.emplace_back(it->second, pair_multiplicity ? p.cited_multiplicity[i] : 1);
        }
        for (std::size_t a = 0; a < present.size(); ++a) {
            auto [j, mj] = present[a];
            net.at(j, j) += mj * mj;
            for (std::size_t b = a + 1; b < present.size(); ++b) {
                auto [k, mk] = present[b];
                net.at(j, k) += mj * mk;
                net.at(k, j) += mj * mk;
            }
        }
    }
    return net;
}

CoCitationNetwork load_edges_csv(std::istream &in) {
    std::vector<std::string> lines = csv::read_lines(in);
    if (lines.empty())
        throw ParseError("empty edges-csv input", 1);
    check_header(csv::split_line(lines[0], 1), {"author_a", "author_b", "count"}, "edges-csv");

    std::set<std::string> names;
    std::map<std::pair<std::string, std::string>, long long> cell;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        if (lines[i].empty())
            continue;
        std::vector<std::string> fields = csv::split_line(lines[i], line_no);
        check_field_count(fields, 3, line_no);
        std::string a = trim(fields[0]);
        std::string b = trim(fields[1]);
        if (a.empty() || b.empty())
            throw ParseError("empty author id", line_no);
        long long count = parse_int_field(fields[2], "count", line_no);
        if (count < 0)
            throw ParseError("negative count '" + fields[2] + "'", line_no);
        names.insert(a);
        names.insert(b);
        std::pair<std::string, std::string> key = a <= b ? std::make_pair(a, b)
                                                         : std::make_pair(b, a);
        auto [it, fresh] = cell.emplace(key, count);
        if (!fresh && it->second != count)
            throw ParseError("conflicting counts for pair (" + key.first + ", " + key.second +
                                 "): " + std::to_string(it->second) + " vs " +
                                 std::to_string(count),
                             line_no);
    }

    CoCitationNetwork net =
        CoCitationNetwork::zeros(std::vector<std::string>(names.begin(), names.end()));
    std::unordered_map<std::string, int> index;
    for (int j = 0; j < net.n; ++j)
        index.emplace(net.authors[static_cast<std::size_t>(j)], j);
    for (const auto &[key, count] : cell) {
        int j = index[key.first];
        int k = index[key.second];
        net.at(j, k) = count;
        net.at(k, j) = count;
    }
    return net;
}

std::map<std::string, AuthorStats> load_stats_csv(std::istream &in) {
    std::vector<std::string> lines = csv::read_lines(in);
    if (lines.empty())
        throw ParseError("empty stats-csv input", 1);
    check_header(csv::split_line(lines[0], 1),
                 {"author_id", "citation_count", "first_author_pub_count", "per_paper_citations"},
                 "stats-csv");

    std::map<std::string, AuthorStats> stats;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        if (lines[i].empty())
            continue;
        std::vector<std::string> fields = csv::split_line(lines[i], line_no);
        check_field_count(fields, 4, line_no);

        AuthorStats s;
        s.author_id = trim(fields[0]);
        if (s.author_id.empty())
            throw ParseError("empty author_id", line_no);
        if (stats.count(s.author_id))
            throw ParseError("duplicate author_id '" + s.author_id + "'", line_no);
        s.citation_count = parse_int_field(fields[1], "citation_count", line_no);
        s.first_author_pub_count = parse_int_field(fields[2], "first_author_pub_count", line_no);
        if (s.citation_count < 0 || s.first_author_pub_count < 0)
            throw ParseError("negative count", line_no);

        std::string list = trim(fields[3]);
        if (!list.empty()) {
            std::size_t pos = 0;
            while (pos <= list.size()) {
                std::size_t semi = list.find(';', pos);
                std::string entry = trim(semi == std::string::npos ? list.substr(pos)
                                                                   : list.substr(pos, semi - pos));
                long long v = parse_int_field(entry, "per-paper citation count", line_no);
                if (v < 0)
                    throw ParseError("negative per-paper citation count", line_no);
                s.per_paper_citations.push_back(v);
                if (semi == std::string::npos)
                    break;
                pos = semi + 1;
            }
        }
        if (static_cast<long long>(s.per_paper_citations.size()) != s.first_author_pub_count)
            throw ParseError("per_paper_citations has " +
                                 std::to_string(s.per_paper_citations.size()) +
                                 " entries, first_author_pub_count is " +
                                 std::to_string(s.first_author_pub_count),
                             line_no);
        stats.emplace(s.author_id, std::move(s));
    }
    return stats;
}

} // namespace cocite
