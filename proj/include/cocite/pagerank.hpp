#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cocite/network.hpp"
#include "cocite/records.hpp"

namespace cocite {

enum class TeleportKind { Uniform, Citations, Publications, Custom };

std::string teleport_kind_label(TeleportKind kind);

// Markov teleport vector: nonnegative, sums to 1.
struct TeleportVector {
    std::vector<double> w;
    TeleportKind kind = TeleportKind::Uniform;

    int n() const { return static_cast<int>(w.size()); }
};

struct PageRankResult {
    std::vector<double> scores; // Markov vector, sums to 1 within 1e-9
    double d = 0.0;
    int iterations = 0; // 0 for the direct solve
    double residual = 0.0; // L1 step difference (power) / L1 defect (direct)
    std::string method; // "power" or "direct"
};

struct PowerOptions {
    double tol = 1e-10;
    int max_iter = 0; // <= 0 selects default_max_iter(d, tol)
    const std::vector<double> *x0 = nullptr; // start vector, defaults to w
    // Called after every step with (iteration, new iterate, L1 residual).
    std::function<void(int, const std::vector<double> &, double)> observer;
};

// 10 * ceil(log(tol)/log(d)), clamped to [100, 100000]. The L1 error of the
// power iteration contracts by a factor d per step, so log(tol)/log(d)
// estimates the step count and the factor 10 is slack.
int default_max_iter(double d, double tol);

// kind=uniform ignores stats; citations/publications require stats to cover
// every author and reject an all-zero weight source.
TeleportVector make_teleport(TeleportKind kind, const std::vector<std::string> &authors,
                             const std::map<std::string, AuthorStats> &stats);

// Normalizes a raw nonnegative weight vector to sum 1.
TeleportVector make_custom_teleport(std::vector<double> raw);

// x <- d*T*x + (1-d)*w until the L1 step difference drops below tol.
// Throws ConvergenceError (carrying the last iterate) when max_iter is hit.
PageRankResult power_iterate(const MarkovMatrix &t, double d, const TeleportVector &w,
                             const PowerOptions &opt = {});

// Solves (I - d*T)x = (1-d)*w by dense partial-pivot LU.
PageRankResult steady_state_direct(const MarkovMatrix &t, double d, const TeleportVector &w);

// One power_iterate per damping value; errors are rethrown tagged "d=<value>: ".
std::map<double, PageRankResult> damping_sweep(const MarkovMatrix &t, const TeleportVector &w,
                                               const std::vector<double> &d_values,
                                               double tol = 1e-10, int max_iter = 0);

enum class Trajectory { Stable, Increase, Drop };

// Ranks ordered by ascending d, 1 = best. delta = last - first;
// |delta| <= slack -> stable, delta < -slack -> increase, else drop.
Trajectory classify_trajectory(const std::vector<double> &ranks_by_d, double slack = 2.0);

std::string trajectory_label(Trajectory t);

namespace kernel {
// y = d*(T x) + (1-d)*w. Parallel across rows; each element is one serial
// dot product, so results do not depend on the thread count.
void pagerank_step(const MarkovMatrix &t, const std::vector<double> &x, double d,
                   const std::vector<double> &w, std::vector<double> &y);
} // namespace kernel

namespace ref {
// Serial twin of kernel::pagerank_step, kept as the comparison baseline.
void pagerank_step(const MarkovMatrix &t, const std::vector<double> &x, double d,
                   const std::vector<double> &w, std::vector<double> &y);

PageRankResult power_iterate(const MarkovMatrix &t, double d, const TeleportVector &w,
                             const PowerOptions &opt = {});
} // namespace ref

} // namespace cocite
