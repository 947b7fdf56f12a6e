#include "cocite/centrality.hpp"

#include <cstddef>

namespace cocite {

namespace {

// BFS distances from s; dist[v] = -1 when unreachable.
void bfs(const SimpleGraph &g, int s, std::vector<int> &dist, std::vector<int> &queue) {
    dist.assign(static_cast<std::size_t>(g.n), -1);
    queue.clear();
    queue.push_back(s);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
}

double harmonic_from_source(const SimpleGraph &g, int s, std::vector<int> &dist,
                            std::vector<int> &queue) {
    bfs(g, s, dist, queue);
    double sum = 0.0;
    for (int j = 0; j < g.n; ++j)
        if (j != s && dist[static_cast<std::size_t>(j)] > 0)
            sum += 1.0 / dist[static_cast<std::size_t>(j)];
    return sum;
}

// One Brandes pass: delta[v] = dependency of source s on v, delta[s] = 0.
void brandes_from_source(const SimpleGraph &g, int s, std::vector<double> &delta) {
    const int n = g.n;
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int u : g.neighbors[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                order.push_back(u);
            }
            if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] + 1) {
                sigma[static_cast<std::size_t>(u)] += sigma[static_cast<std::size_t>(v)];
                preds[static_cast<std::size_t>(u)].push_back(v);
            }
        }
    }

    delta.assign(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        for (int p : preds[static_cast<std::size_t>(v)])
            delta[static_cast<std::size_t>(p)] += sigma[static_cast<std::size_t>(p)] /
                                                  sigma[static_cast<std::size_t>(v)] *
                                                  (1.0 + delta[static_cast<std::size_t>(v)]);
    }
    delta[static_cast<std::size_t>(s)] = 0.0;
}

} // namespace

CentralityResult degree_centrality(const SimpleGraph &g) {
    CentralityResult r{"degree", {}, g.theta};
    r.values.reserve(static_cast<std::size_t>(g.n));
    for (int j = 0; j < g.n; ++j)
        r.values.push_back(static_cast<double>(g.neighbors[static_cast<std::size_t>(j)].size()));
    return r;
}

CentralityResult closeness_centrality(const SimpleGraph &g) {
    CentralityResult r{"closeness", {}, g.theta};
    r.values.assign(static_cast<std::size_t>(g.n), 0.0);
#pragma omp parallel
    {
        std::vector<int> dist, queue;
#pragma omp for schedule(dynamic)
        for (int s = 0; s < g.n; ++s)
            r.values[static_cast<std::size_t>(s)] = harmonic_from_source(g, s, dist, queue);
    }
    return r;
}

CentralityResult betweenness_centrality(const SimpleGraph &g) {
    const int n = g.n;
    std::vector<std::vector<double>> contrib(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s)
        brandes_from_source(g, s, contrib[static_cast<std::size_t>(s)]);

    CentralityResult r{"betweenness", {}, g.theta};
    r.values.assign(static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s)
        for (int v = 0; v < n; ++v)
            r.values[static_cast<std::size_t>(v)] += contrib[static_cast<std::size_t>(s)]
                                                            [static_cast<std::size_t>(v)];
    // Each unordered pair was accumulated from both endpoints.
    for (double &v : r.values)
        v /= 2.0;
    return r;
}

namespace ref {

CentralityResult closeness_centrality(const SimpleGraph &g) {
    CentralityResult r{"closeness", {}, g.theta};
    r.values.assign(static_cast<std::size_t>(g.n), 0.0);
    std::vector<int> dist, queue;
    for (int s = 0; s < g.n; ++s)
        r.values[static_cast<std::size_t>(s)] = harmonic_from_source(g, s, dist, queue);
    return r;
}

CentralityResult betweenness_centrality(const SimpleGraph &g) {
    const int n = g.n;
    CentralityResult r{"betweenness", {}, g.theta};
    r.values.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<double> delta;
    for (int s = 0; s < n; ++s) {
        brandes_from_source(g, s, delta);
        for (int v = 0; v < n; ++v)
            r.values[static_cast<std::size_t>(v)] += delta[static_cast<std::size_t>(v)];
    }
    for (double &v : r.values)
        v /= 2.0;
    return r;
}

} // namespace ref

} // namespace cocite
