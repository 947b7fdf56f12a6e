// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Tolerances and budgets are pinned here, next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cocite/centrality.hpp"
#include "cocite/errors.hpp"
#include "cocite/ingest.hpp"
#include "cocite/network.hpp"
#include "cocite/pagerank.hpp"
#include "cocite/scores.hpp"

using namespace cocite;
namespace fs = std::filesystem;

namespace {

struct Line {
    bool ok = false;
    std::string text;
};

std::vector<Line> lines(11);

void record(int index, bool ok, const std::string &text) {
    lines[static_cast<std::size_t>(index - 1)] = {ok, text};
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char *pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

// Iterate sums are watched across every power run this binary performs.
double worst_sum_dev = 0.0;
long long observed_iterates = 0;

PowerOptions observed(double tol, int max_iter = 0) {
    PowerOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    opt.observer = [](int, const std::vector<double> &x, double) {
        double sum = 0.0;
        for (double v : x)
            sum += v;
        worst_sum_dev = std::max(worst_sum_dev, std::abs(sum - 1.0));
        ++observed_iterates;
    };
    return opt;
}

MarkovMatrix markov_of_counts(const std::vector<long long> &counts, int n) {
    std::vector<std::string> authors;
    for (int j = 0; j < n; ++j)
        authors.push_back("n" + std::to_string(j));
    CoCitationNetwork net = CoCitationNetwork::zeros(authors);
    net.counts = counts;
    return normalize_columns(net, DanglingPolicy::Uniform);
}

// Symmetric, zero-diagonal counts: the shape produced by co-citation input.
MarkovMatrix random_cocitation_markov(std::mt19937_64 &rng, int n, double density) {
    std::vector<long long> counts(static_cast<std::size_t>(n) * n, 0);
    std::bernoulli_distribution present(density);
    std::uniform_int_distribution<long long> weight(1, 9);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (present(rng)) {
                long long c = weight(rng);
                counts[static_cast<std::size_t>(j) * n + k] = c;
                counts[static_cast<std::size_t>(k) * n + j] = c;
            }
    return markov_of_counts(counts, n);
}

// Unconstrained nonnegative integer matrix, zero columns included.
MarkovMatrix random_any_markov(std::mt19937_64 &rng, int n) {
    std::vector<long long> counts(static_cast<std::size_t>(n) * n, 0);
    std::uniform_int_distribution<long long> entry(0, 9);
    std::bernoulli_distribution dead_column(0.1);
    for (int k = 0; k < n; ++k) {
        if (dead_column(rng))
            continue;
        for (int j = 0; j < n; ++j)
            counts[static_cast<std::size_t>(j) * n + k] = entry(rng);
    }
    return markov_of_counts(counts, n);
}

TeleportVector uniform_w(int n) {
    std::vector<double> raw(static_cast<std::size_t>(n), 1.0);
    return make_custom_teleport(std::move(raw));
}

TeleportVector random_w(std::mt19937_64 &rng, int n) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    std::vector<double> raw(static_cast<std::size_t>(n));
    for (auto &v : raw)
        v = uni(rng);
    return make_custom_teleport(std::move(raw));
}

// ---- graph helpers for the exhaustive centrality check ----

SimpleGraph graph_from_mask(int n, unsigned long long mask) {
    SimpleGraph g;
    g.n = n;
    g.neighbors.assign(static_cast<std::size_t>(n), {});
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1) {
                g.neighbors[a].push_back(b);
                g.neighbors[b].push_back(a);
            }
    return g; // adjacency is built in ascending order already
}

bool connected(const SimpleGraph &g) {
    if (g.n == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.n;
}

constexpr int kUnreached = 1 << 20;

std::vector<std::vector<int>> all_pairs_dist(const SimpleGraph &g) {
    std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, kUnreached));
    for (int v = 0; v < g.n; ++v) {
        dist[v][v] = 0;
        for (int u : g.neighbors[v])
            dist[v][u] = 1;
    }
    for (int m = 0; m < g.n; ++m)
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                dist[a][b] = std::min(dist[a][b], dist[a][m] + dist[m][b]);
    return dist;
}

void enumerate_paths(const SimpleGraph &g, const std::vector<std::vector<int>> &dist, int v,
                     int k, std::vector<int> &interior, long long &total,
                     std::vector<long long> &through) {
    if (v == k) {
        ++total;
        for (int i : interior)
            ++through[i];
        return;
    }
    for (int u : g.neighbors[v]) {
        if (dist[u][k] + 1 != dist[v][k])
            continue;
        if (u != k)
            interior.push_back(u);
        enumerate_paths(g, dist, u, k, interior, total, through);
        if (u != k)
            interior.pop_back();
    }
}

// max absolute error of the three measures against first-principles oracles;
// closeness must match bitwise (same summation order), degree exactly.
bool check_centrality(const SimpleGraph &g, double &worst_bc_err) {
    auto dist = all_pairs_dist(g);

    auto deg = degree_centrality(g).values;
    for (int i = 0; i < g.n; ++i)
        if (deg[i] != static_cast<double>(g.neighbors[i].size()))
            return false;

    auto clo = closeness_centrality(g).values;
    for (int i = 0; i < g.n; ++i) {
        double want = 0.0;
        for (int j = 0; j < g.n; ++j)
            if (j != i && dist[i][j] < kUnreached)
                want += 1.0 / dist[i][j];
        if (clo[i] != want)
            return false;
    }

    auto bc = betweenness_centrality(g).values;
    std::vector<double> want(static_cast<std::size_t>(g.n), 0.0);
    for (int j = 0; j < g.n; ++j)
        for (int k = j + 1; k < g.n; ++k) {
            if (dist[j][k] >= kUnreached)
                continue;
            long long total = 0;
            std::vector<long long> through(static_cast<std::size_t>(g.n), 0);
            std::vector<int> interior;
            enumerate_paths(g, dist, j, k, interior, total, through);
            for (int i = 0; i < g.n; ++i)
                if (through[i] > 0)
                    want[i] += static_cast<double>(through[i]) / static_cast<double>(total);
        }
    for (int i = 0; i < g.n; ++i) {
        double err = std::abs(bc[i] - want[i]);
        worst_bc_err = std::max(worst_bc_err, err);
        if (err > 1e-12)
            return false;
    }
    return true;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---- criteria ----

void c1_low_damping_band() {
    Timer timer;
    constexpr int n = 108;
    constexpr double center = 1.0 / n; // 0.00926 to three digits
    bool ok = true;
    double worst_rel = 0.0;
    std::mt19937_64 rng(1);
    for (double density : {0.1, 0.3, 0.6, 0.9}) {
        auto t = random_cocitation_markov(rng, n, density);
        auto r = power_iterate(t, 0.005, uniform_w(n), observed(1e-10));
        for (double s : r.scores) {
            worst_rel = std::max(worst_rel, std::abs(s - center) / center);
            ok = ok && s >= 0.9 * center && s <= 1.1 * center;
        }
    }
    double elapsed = timer.secs();
    ok = ok && elapsed < 1.0;
    record(1, ok,
           fmt("C1 damping 0.005 keeps all 108-node scores within 10%% of 1/108 "
               "(worst off by %.2f%%, %.3fs)",
               worst_rel * 100.0, elapsed));
}

void c2_power_vs_direct() {
    Timer timer;
    bool ok = true;
    double worst = 0.0;
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 3 + static_cast<int>(rng() % 18);
        auto t = random_any_markov(rng, n);
        auto w = random_w(rng, n);
        for (double d : {0.15, 0.55, 0.85}) {
            auto p = power_iterate(t, d, w, observed(1e-12));
            auto s = steady_state_direct(t, d, w);
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(p.scores[j] - s.scores[j]));
        }
    }
    double elapsed = timer.secs();
    ok = worst <= 1e-8 && elapsed < 10.0;
    record(2, ok,
           fmt("C2 power (tol 1e-12) and direct LU agree on 200 random networks "
               "(max |diff| %.2e, %.2fs)",
               worst, elapsed));
}

void c3_markov_preservation() {
    bool ok = observed_iterates > 0 && worst_sum_dev <= 1e-9;
    record(3, ok,
           fmt("C3 every observed iterate sums to 1 (max |sum-1| %.2e over %lld iterates)",
               worst_sum_dev, observed_iterates));
}

void c4_geometric_rate() {
    bool ok = true;
    double worst_ratio_gap = -1.0;
    std::mt19937_64 rng(4);
    for (double d : {0.5, 0.85, 0.95}) {
        for (int rep = 0; rep < 5; ++rep) {
            auto t = random_cocitation_markov(rng, 25, 0.4);
            std::vector<double> residuals;
            PowerOptions opt = observed(1e-13);
            auto outer = opt.observer;
            opt.observer = [&](int it, const std::vector<double> &x, double res) {
                outer(it, x, res);
                residuals.push_back(res);
            };
            power_iterate(t, d, uniform_w(25), opt);

            // tail ratios, measured above the rounding floor
            int usable = 0;
            for (std::size_t i = 3; i + 1 < residuals.size(); ++i) {
                if (residuals[i + 1] < 1e-11)
                    break;
                double ratio = residuals[i + 1] / residuals[i];
                worst_ratio_gap = std::max(worst_ratio_gap, ratio - d);
                ok = ok && ratio <= d + 0.02;
                ++usable;
            }
            ok = ok && usable >= 3;
        }
    }
    record(4, ok,
           fmt("C4 residual contraction stays within 0.02 of the damping factor "
               "(max ratio-d %+.4f)",
               worst_ratio_gap));
}

void c5_start_vector_independence() {
    bool ok = true;
    double worst = 0.0;
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5 + static_cast<int>(rng() % 30);
        auto t = random_cocitation_markov(rng, n, 0.3);
        auto w = random_w(rng, n);
        auto from_w = power_iterate(t, 0.85, w, observed(1e-12));

        std::vector<double> e1(static_cast<std::size_t>(n), 0.0);
        e1[0] = 1.0;
        PowerOptions opt = observed(1e-12);
        opt.x0 = &e1;
        auto from_e1 = power_iterate(t, 0.85, w, opt);
        for (int j = 0; j < n; ++j)
            worst = std::max(worst, std::abs(from_w.scores[j] - from_e1.scores[j]));
    }
    ok = worst <= 1e-8;
    record(5, ok,
           fmt("C5 solutions from teleport and basis-vector starts agree (max |diff| %.2e)",
               worst));
}

void c6_zero_damping_identity() {
    bool ok = true;
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + static_cast<int>(rng() % 25);
        auto t = random_any_markov(rng, n);
        auto w = random_w(rng, n);
        ok = ok && power_iterate(t, 0.0, w).scores == w.w;
        ok = ok && steady_state_direct(t, 0.0, w).scores == w.w;
    }
    record(6, ok, "C6 damping 0 reproduces the teleport vector bit for bit (50 pairs, both solvers)");
}

void c7_centrality_oracles() {
    bool ok = true;
    int tested = 0;
    double worst_bc = 0.0;
    for (int n = 2; n <= 5; ++n) {
        unsigned long long masks = 1ULL << (n * (n - 1) / 2);
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            auto g = graph_from_mask(n, mask);
            if (!connected(g))
                continue;
            ok = check_centrality(g, worst_bc) && ok;
            ++tested;
        }
    }
    std::mt19937_64 rng(7);
    for (int n : {6, 7}) {
        for (int rep = 0; rep < 50; ++rep) {
            SimpleGraph g;
            do {
                unsigned long long mask = rng() & ((1ULL << (n * (n - 1) / 2)) - 1);
                g = graph_from_mask(n, mask);
            } while (!connected(g));
            ok = check_centrality(g, worst_bc) && ok;
            ++tested;
        }
    }
    ok = ok && tested >= 500;
    record(7, ok,
           fmt("C7 degree/closeness exact and betweenness within 1e-12 of path enumeration "
               "on %d connected graphs (max bc err %.2e)",
               tested, worst_bc));
}

void c8_rank_correlation_formula() {
    bool ok = true;
    double worst = 0.0;
    std::mt19937_64 rng(8);
    const int n = 20;
    std::vector<double> base(n);
    std::iota(base.begin(), base.end(), 1.0);
    for (int rep = 0; rep < 1000; ++rep) {
        std::vector<double> x = base, y = base;
        std::shuffle(x.begin(), x.end(), rng);
        std::shuffle(y.begin(), y.end(), rng);
        auto ra = ranks_from_scores(x, RankDirection::HigherBetter);
        auto rb = ranks_from_scores(y, RankDirection::HigherBetter);
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = ra.ranks[i] - rb.ranks[i];
            d2 += d * d;
        }
        double classical = 1.0 - 6.0 * d2 / (n * (static_cast<double>(n) * n - 1.0));
        double err = std::abs(spearman(ra, rb).r - classical);
        worst = std::max(worst, err);
        ok = ok && err <= 1e-12;

        ok = ok && spearman(ra, ra).r == 1.0;
        auto reversed = ranks_from_scores(x, RankDirection::LowerBetter);
        ok = ok && spearman(ra, reversed).r == -1.0;
    }
    record(8, ok,
           fmt("C8 tie-free correlation matches the classical formula on 1000 pairs, "
               "with exact +/-1 endpoints (max err %.2e)",
               worst));
}

void c9_trajectory_labels() {
    bool ok = classify_trajectory({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == Trajectory::Stable &&
              classify_trajectory({2, 3, 3, 3, 3, 4, 4, 5, 8, 13}) == Trajectory::Drop &&
              classify_trajectory({13, 13, 13, 12, 12, 11, 11, 11, 9, 8}) == Trajectory::Increase &&
              classify_trajectory({43, 16, 16, 17, 17, 17, 17, 18, 17, 17}) == Trajectory::Increase;
    record(9, ok, "C9 reference rank trajectories classify as stable/drop/increase/increase");
}

void c10_byte_identical_pipeline() {
    const char *bin = std::getenv("COCITE_BIN");
    const char *data = std::getenv("COCITE_DATA_DIR");
    if (!bin || !data) {
        record(10, false, "C10 COCITE_BIN/COCITE_DATA_DIR not set");
        return;
    }
    std::string corpus = std::string(data) + "/synthetic_corpus.csv";
    fs::path base = fs::temp_directory_path() / ("cocite_accept_" + std::to_string(::getpid()));
    bool ok = true;
    std::vector<fs::path> outs;
    for (const char *tag : {"a", "b"}) {
        fs::path out = base / tag;
        fs::remove_all(out);
        fs::create_directories(out);
        outs.push_back(out);
        std::string common = std::string("\"") + bin + "\" %s --input " + corpus +
                             " --threshold 26 --out " + out.string() + " > /dev/null 2>&1";
        ok = ok && std::system(fmt(common.c_str(), "rank").c_str()) == 0;
        ok = ok && std::system(fmt(common.c_str(), "correlate").c_str()) == 0;
    }
    int compared = 0;
    if (ok) {
        std::vector<std::string> names;
        for (const auto &entry : fs::directory_iterator(outs[0]))
            names.push_back(entry.path().filename().string());
        std::sort(names.begin(), names.end());
        for (const auto &name : names) {
            ok = ok && slurp(outs[0] / name) == slurp(outs[1] / name);
            ++compared;
        }
        ok = ok && compared >= 13; // 10 score files + rank table + centrality + correlation
    }
    record(10, ok,
           fmt("C10 two full rank+correlate runs on the frozen corpus are byte-identical "
               "(%d files)",
               compared));
}

void c11_citation_teleport_limit() {
    const char *data = std::getenv("COCITE_DATA_DIR");
    if (!data) {
        record(11, false, "C11 COCITE_DATA_DIR not set");
        return;
    }
    std::ifstream in(std::string(data) + "/synthetic_corpus.csv", std::ios::binary);
    auto papers = parse_papers(in);
    auto stats = accumulate_stats(papers);
    auto authors = select_top_authors(stats, 26);
    auto net = build_cocitation(papers, authors);
    auto t = normalize_columns(apply_diagonal_policy(net, DiagonalPolicy::Zero),
                               DanglingPolicy::Uniform);
    auto w = make_teleport(TeleportKind::Citations, authors, stats);

    auto teleport_order = ranks_from_scores(w.w, RankDirection::HigherBetter);
    bool ok = authors.size() == 20;
    double matched_at = -1.0;
    for (double d : {0.05, 0.01, 0.001, 0.0001}) {
        auto r = power_iterate(t, d, w, observed(1e-12));
        auto order = ranks_from_scores(r.scores, RankDirection::HigherBetter);
        if (order.ranks == teleport_order.ranks) {
            matched_at = d;
            break;
        }
    }
    ok = ok && matched_at > 0.0;
    record(11, ok,
           fmt("C11 citation-weighted scores take the teleport's rank order as damping "
               "shrinks (exact at d=%g)",
               matched_at));
}

} // namespace

int main() {
    c1_low_damping_band();
    c2_power_vs_direct();
    c4_geometric_rate();
    c5_start_vector_independence();
    c6_zero_damping_identity();
    c3_markov_preservation(); // verdict over every power run above
    c7_centrality_oracles();
    c8_rank_correlation_formula();
    c9_trajectory_labels();
    c10_byte_identical_pipeline();
    c11_citation_teleport_limit();

    int failures = 0;
    for (const auto &line : lines) {
        std::printf("[%s] %s\n", line.ok ? "PASS" : "FAIL", line.text.c_str());
        if (!line.ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
