#pragma once

#include <string>
#include <vector>

namespace cocite {

// Largest h such that at least h papers have >= h citations each.
long long h_index(const std::vector<long long> &per_paper_citations);

enum class RankDirection { HigherBetter, LowerBetter };

// Dense average-ranking, 1 = best. Tied scores share the average of their
// positional ranks, so the rank sum is always n(n+1)/2.
struct Ranking {
    std::vector<double> ranks;
    std::string source; // measure label, used in error messages and reports
};

// Throws ConfigError on non-finite scores.
Ranking ranks_from_scores(const std::vector<double> &scores, RankDirection direction,
                          const std::string &source = "");

struct CorrelationReport {
    double r = 0.0;
    int n = 0;
    bool significant_01 = false; // one-tailed at the 0.01 level
    bool significant_05 = false; // one-tailed at the 0.05 level
};

struct SignificanceOptions {
    bool permutation = false; // exact-style permutation test instead of the t approximation
    int shuffles = 10000;
    unsigned long long seed = 42;
};

// Spearman correlation as Pearson over the (average-)rank vectors, which is
// the tie-corrected form. Significance is one-tailed: t = r*sqrt((n-2)/(1-r^2))
// against Student's t with n-2 degrees of freedom, or a seeded permutation
// test when opt.permutation is set. |r| = 1 is significant at both levels by
// convention. Requires n >= 3 and nondegenerate rankings.
CorrelationReport spearman(const Ranking &a, const Ranking &b,
                           const SignificanceOptions &opt = {});

// Symmetric matrix of pairwise reports; diagonal r = 1. Spearman errors are
// rethrown tagged with the offending pair's source labels.
std::vector<std::vector<CorrelationReport>>
correlation_matrix(const std::vector<Ranking> &rankings, const SignificanceOptions &opt = {});

// Arithmetic mean of r over the strict upper triangle.
double mean_offdiagonal_r(const std::vector<std::vector<CorrelationReport>> &matrix);

// P(T >= t) for Student's t with df degrees of freedom, via the regularized
// incomplete beta function.
double student_t_upper_tail(double t, double df);

// One-tailed t-approximation flags for a correlation coefficient at sample
// size n: t = r*sqrt((n-2)/(1-r^2)) with n-2 degrees of freedom, p taken in
// the observed direction. |r| = 1 is significant at both levels.
CorrelationReport significance_from_r(double r, int n);

} // namespace cocite
