// Compares the OpenMP kernels with their serial reference implementations:
// wall time, speedup, and a bitwise-agreement check on the outputs.
//
// Usage: cocite_bench [matrix_n] [graph_n]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cocite/centrality.hpp"
#include "cocite/network.hpp"
#include "cocite/pagerank.hpp"

using namespace cocite;

namespace {

template <typename F> double time_ms(F &&fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

MarkovMatrix random_markov(std::mt19937_64 &rng, int n, double density) {
    std::vector<std::string> authors;
    for (int j = 0; j < n; ++j)
        authors.push_back("n" + std::to_string(j));
    CoCitationNetwork net = CoCitationNetwork::zeros(authors);
    std::bernoulli_distribution present(density);
    std::uniform_int_distribution<long long> weight(1, 9);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (present(rng)) {
                long long c = weight(rng);
                net.at(j, k) = c;
                net.at(k, j) = c;
            }
    return normalize_columns(net, DanglingPolicy::Uniform);
}

SimpleGraph random_graph(std::mt19937_64 &rng, int n, double avg_degree) {
    SimpleGraph g;
    g.n = n;
    g.neighbors.assign(static_cast<std::size_t>(n), {});
    std::bernoulli_distribution edge(avg_degree / (n - 1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) {
                g.neighbors[a].push_back(b);
                g.neighbors[b].push_back(a);
            }
    return g;
}

int mismatches = 0;

void row(const char *name, double serial_ms, double parallel_ms, bool identical) {
    if (!identical)
        ++mismatches;
    std::printf("%-22s %10.2f %10.2f %9.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "bitwise equal" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
    int matrix_n = argc > 1 ? std::atoi(argv[1]) : 1200;
    int graph_n = argc > 2 ? std::atoi(argv[2]) : 1000;
    if (matrix_n < 2 || graph_n < 2) {
        std::fprintf(stderr, "usage: %s [matrix_n >= 2] [graph_n >= 2]\n", argv[0]);
        return 2;
    }

#ifdef _OPENMP
    std::printf("threads: %d (OpenMP)\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("matrix n = %d, graph n = %d\n\n", matrix_n, graph_n);
    std::printf("%-22s %10s %10s %10s   %s\n", "kernel", "serial ms", "omp ms", "speedup",
                "outputs");

    std::mt19937_64 rng(1);
    auto t = random_markov(rng, matrix_n, 0.3);
    auto w = make_custom_teleport(std::vector<double>(static_cast<std::size_t>(matrix_n), 1.0));

    {
        const int reps = 50;
        std::vector<double> x = w.w;
        std::vector<double> y_ref(x.size()), y_par(x.size());
        double serial = time_ms([&] {
            for (int i = 0; i < reps; ++i)
                ref::pagerank_step(t, x, 0.85, w.w, y_ref);
        });
        double parallel = time_ms([&] {
            for (int i = 0; i < reps; ++i)
                kernel::pagerank_step(t, x, 0.85, w.w, y_par);
        });
        row("pagerank step x50", serial, parallel, y_ref == y_par);
    }

    {
        PageRankResult r_ref, r_par;
        double serial = time_ms([&] { r_ref = ref::power_iterate(t, 0.85, w); });
        double parallel = time_ms([&] { r_par = power_iterate(t, 0.85, w); });
        row("power iteration", serial, parallel,
            r_ref.scores == r_par.scores && r_ref.iterations == r_par.iterations);
    }

    auto g = random_graph(rng, graph_n, 10.0);
    {
        CentralityResult r_ref, r_par;
        double serial = time_ms([&] { r_ref = ref::closeness_centrality(g); });
        double parallel = time_ms([&] { r_par = closeness_centrality(g); });
        row("harmonic closeness", serial, parallel, r_ref.values == r_par.values);
    }
    {
        CentralityResult r_ref, r_par;
        double serial = time_ms([&] { r_ref = ref::betweenness_centrality(g); });
        double parallel = time_ms([&] { r_par = betweenness_centrality(g); });
        row("betweenness", serial, parallel, r_ref.values == r_par.values);
    }

    if (mismatches) {
        std::fprintf(stderr, "\n%d kernel(s) disagreed with the serial reference\n", mismatches);
        return 1;
    }
    return 0;
}
