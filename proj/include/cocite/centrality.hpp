#pragma once

#include <string>
#include <vector>

#include "cocite/network.hpp"

namespace cocite {

struct CentralityResult {
    std::string measure; // "degree", "closeness", "betweenness"
    std::vector<double> values;
    long long theta = 1;
};

// values[i] = neighbor count.
CentralityResult degree_centrality(const SimpleGraph &g);

// Harmonic closeness: values[i] = sum over reachable j != i of 1/dist(i,j),
// BFS distances. Unreachable pairs contribute 0, so disconnected graphs stay
// finite and isolated nodes score 0. Parallel across sources.
CentralityResult closeness_centrality(const SimpleGraph &g);

// Unnormalized betweenness over unordered pairs: values[i] =
// sum_{j<k} sigma_jk(i)/sigma_jk, by Brandes' accumulation. Per-source
// passes run in parallel; contributions are merged in ascending source
// order, so results are independent of the thread count.
CentralityResult betweenness_centrality(const SimpleGraph &g);

namespace ref {
// Serial twins of the parallel measures, kept as comparison baselines.
// They sum per-source contributions in the same ascending order and match
// the parallel versions bitwise.
CentralityResult closeness_centrality(const SimpleGraph &g);
CentralityResult betweenness_centrality(const SimpleGraph &g);
} // namespace ref

} // namespace cocite
