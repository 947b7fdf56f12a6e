#include "cocite/network.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "cocite/csv.hpp"
#include "cocite/errors.hpp"

namespace cocite {

CoCitationNetwork CoCitationNetwork::zeros(std::vector<std::string> authors) {
    CoCitationNetwork net;
    net.n = static_cast<int>(authors.size());
    net.authors = std::move(authors);
    net.counts.assign(static_cast<std::size_t>(net.n) * net.n, 0);
    return net;
}

void CoCitationNetwork::validate() const {
    if (static_cast<int>(authors.size()) != n ||
        counts.size() != static_cast<std::size_t>(n) * n)
        throw ParseError("co-citation network dimensions are inconsistent");
    std::unordered_set<std::string> seen;
    for (const auto &a : authors) {
        if (a.empty())
            throw ParseError("empty author id in network index");
        if (!seen.insert(a).second)
            throw ParseError("duplicate author id in network index: " + a);
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (at(j, k) < 0)
                throw ParseError("negative co-citation count for " + authors[j] + "," + authors[k]);
            if (at(j, k) != at(k, j))
                throw ParseError("asymmetric co-citation counts for " + authors[j] + "," + authors[k]);
        }
}

CoCitationNetwork apply_diagonal_policy(const CoCitationNetwork &net, DiagonalPolicy policy) {
    CoCitationNetwork out = net;
    if (policy == DiagonalPolicy::Zero)
        for (int j = 0; j < out.n; ++j)
            out.at(j, j) = 0;
    return out;
}

MarkovMatrix normalize_columns(const CoCitationNetwork &net, DanglingPolicy policy) {
    const int n = net.n;
    MarkovMatrix m;
    m.n = n;
    m.t.assign(static_cast<std::size_t>(n) * n, 0.0);

    for (int k = 0; k < n; ++k) {
        long long colsum = 0;
        for (int j = 0; j < n; ++j) {
            if (net.at(j, k) < 0)
                throw ParseError("negative entry in column " + net.authors[k]);
            colsum += net.at(j, k);
        }
        if (colsum == 0) {
            if (policy == DanglingPolicy::Error)
                throw ConfigError("dangling node (zero column): " + net.authors[k]);
            const double u = 1.0 / n;
            for (int j = 0; j < n; ++j)
                m.at(j, k) = u;
            m.dangling.push_back(k);
        } else {
            const double inv = 1.0 / static_cast<double>(colsum);
            for (int j = 0; j < n; ++j)
                m.at(j, k) = static_cast<double>(net.at(j, k)) * inv;
        }
    }
    return m;
}

SimpleGraph to_simple_graph(const CoCitationNetwork &net, long long theta) {
    if (theta < 1)
        throw ConfigError("edge threshold theta must be >= 1");
    SimpleGraph g;
    g.n = net.n;
    g.theta = theta;
    g.neighbors.assign(net.n, {});
    for (int j = 0; j < net.n; ++j)
        for (int k = 0; k < net.n; ++k)
            if (j != k && net.at(j, k) >= theta)
                g.neighbors[j].push_back(k);
    return g;
}

bool SimpleGraph::has_edge(int j, int k) const {
    return std::binary_search(neighbors[j].begin(), neighbors[j].end(), k);
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto &adj : neighbors)
        total += adj.size();
    return total / 2;
}

void dump_matrix_csv(const CoCitationNetwork &net, std::ostream &out) {
    out << "author_id";
    for (const auto &a : net.authors)
        out << ',' << csv::quote(a);
    out << '\n';
    for (int j = 0; j < net.n; ++j) {
        out << csv::quote(net.authors[j]);
        for (int k = 0; k < net.n; ++k)
            out << ',' << net.at(j, k);
        out << '\n';
    }
}

} // namespace cocite
