#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cocite {

// Symmetric nonnegative co-citation count matrix plus the author index that
// maps node ids to author ids. Dense row-major storage; n stays small enough
// (hundreds to low thousands) that dense keeps every downstream solve simple.
struct CoCitationNetwork {
    std::vector<std::string> authors; // index = node id, no duplicates
    std::vector<long long> counts;    // n*n, row-major, symmetric, entries >= 0
    int n = 0;

    long long at(int j, int k) const { return counts[static_cast<std::size_t>(j) * n + k]; }
    long long &at(int j, int k) { return counts[static_cast<std::size_t>(j) * n + k]; }

    static CoCitationNetwork zeros(std::vector<std::string> authors);

    // Throws ParseError if the matrix is not symmetric, has negative entries,
    // or the author index is inconsistent.
    void validate() const;
};

enum class DiagonalPolicy { Keep, Zero };
enum class DanglingPolicy { Uniform, Error };

// Column-stochastic transition matrix derived from a co-citation network.
// Every column sums to 1 within 1e-12; `dangling` lists the nodes whose
// original column summed to 0 and was patched to the uniform column.
struct MarkovMatrix {
    std::vector<double> t; // n*n, row-major
    int n = 0;
    std::vector<int> dangling;

    double at(int j, int k) const { return t[static_cast<std::size_t>(j) * n + k]; }
    double &at(int j, int k) { return t[static_cast<std::size_t>(j) * n + k]; }
};

// Unweighted, loop-free undirected graph: edge (j,k) iff j != k and the
// co-citation count A[j][k] >= theta.
struct SimpleGraph {
    int n = 0;
    long long theta = 1;
    std::vector<std::vector<int>> neighbors; // sorted adjacency lists

    bool has_edge(int j, int k) const;
    std::size_t edge_count() const;
};

CoCitationNetwork apply_diagonal_policy(const CoCitationNetwork &net, DiagonalPolicy policy);

MarkovMatrix normalize_columns(const CoCitationNetwork &net, DanglingPolicy policy);

SimpleGraph to_simple_graph(const CoCitationNetwork &net, long long theta);

// Debug/golden-test dump: header row and column of author ids, counts inside.
void dump_matrix_csv(const CoCitationNetwork &net, std::ostream &out);

} // namespace cocite
