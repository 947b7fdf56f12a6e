#include "cocite/scores.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>

#include "cocite/errors.hpp"

namespace cocite {

long long h_index(const std::vector<long long> &per_paper_citations) {
    std::vector<long long> c = per_paper_citations;
    std::sort(c.begin(), c.end(), std::greater<>());
    long long h = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= static_cast<long long>(i) + 1)
            h = static_cast<long long>(i) + 1;
        else
            break;
    }
    return h;
}

Ranking ranks_from_scores(const std::vector<double> &scores, RankDirection direction,
                          const std::string &source) {
    const std::size_t n = scores.size();
    for (std::size_t j = 0; j < n; ++j)
        if (!std::isfinite(scores[j]))
            throw ConfigError("score " + std::to_string(j) + " is not finite" +
                              (source.empty() ? "" : " in " + source));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b])
            return direction == RankDirection::HigherBetter ? scores[a] > scores[b]
                                                            : scores[a] < scores[b];
        return a < b;
    });

    Ranking rk;
    rk.source = source;
    rk.ranks.assign(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]])
            ++j;
        // positions i+1 .. j+1 share the average rank
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            rk.ranks[order[k]] = avg;
        i = j + 1;
    }
    return rk;
}

namespace {

// Continued fraction for the regularized incomplete beta (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 3e-16;
    constexpr double fpmin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin)
        d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps)
            break;
    }
    return h;
}

double inc_beta(double a, double b, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

// Pearson numerator/denominator pieces over two rank vectors.
struct RankMoments {
    double num = 0.0; // sum of da*db
    double sa = 0.0;  // sum of da^2
    double sb = 0.0;  // sum of db^2
};

RankMoments rank_moments(const std::vector<double> &a, const std::vector<double> &b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        ma += a[j];
        mb += b[j];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    RankMoments m;
    for (std::size_t j = 0; j < n; ++j) {
        double da = a[j] - ma;
        double db = b[j] - mb;
        m.num += da * db;
        m.sa += da * da;
        m.sb += db * db;
    }
    return m;
}

double pearson_of_ranks(const RankMoments &m) {
    // Cauchy-Schwarz equality means the ranks are exactly linearly related;
    // report the extreme exactly instead of losing it to sqrt rounding.
    if (m.num * m.num == m.sa * m.sb)
        return m.num > 0.0 ? 1.0 : -1.0;
    return std::clamp(m.num / std::sqrt(m.sa * m.sb), -1.0, 1.0);
}

} // namespace

double student_t_upper_tail(double t, double df) {
    if (!(df > 0.0))
        throw ConfigError("degrees of freedom must be positive");
    double x = df / (df + t * t);
    double p = 0.5 * inc_beta(df / 2.0, 0.5, x);
    return t >= 0.0 ? p : 1.0 - p;
}

CorrelationReport significance_from_r(double r, int n) {
    if (n < 3)
        throw ConfigError("need at least 3 observations");
    if (!(r >= -1.0 && r <= 1.0))
        throw ConfigError("correlation coefficient must lie in [-1,1]");
    CorrelationReport rep;
    rep.r = r;
    rep.n = n;
    if (r == 1.0 || r == -1.0) {
        rep.significant_01 = rep.significant_05 = true;
        return rep;
    }
    double t = r * std::sqrt((static_cast<double>(n) - 2.0) / (1.0 - r * r));
    double p = student_t_upper_tail(std::fabs(t), static_cast<double>(n) - 2.0);
    rep.significant_05 = p <= 0.05;
    rep.significant_01 = p <= 0.01;
    return rep;
}

CorrelationReport spearman(const Ranking &a, const Ranking &b, const SignificanceOptions &opt) {
    const std::size_t n = a.ranks.size();
    auto pair_tag = [&]() {
        if (a.source.empty() && b.source.empty())
            return std::string();
        return " (" + a.source + ", " + b.source + ")";
    };
    if (b.ranks.size() != n)
        throw ConfigError("rankings have different lengths" + pair_tag());
    if (n < 3)
        throw ConfigError("need at least 3 observations" + pair_tag());

    RankMoments m = rank_moments(a.ranks, b.ranks);
    if (m.sa == 0.0 || m.sb == 0.0)
        throw ConfigError("degenerate ranking with zero variance" +
                          std::string(m.sa == 0.0 ? " in " + (a.source.empty() ? "first input" : a.source)
                                                  : " in " + (b.source.empty() ? "second input" : b.source)));

    double r = pearson_of_ranks(m);
    if (!opt.permutation || r == 1.0 || r == -1.0)
        return significance_from_r(r, static_cast<int>(n));

    if (opt.shuffles < 1)
        throw ConfigError("permutation test needs at least 1 shuffle");
    std::mt19937_64 rng(opt.seed);
    std::vector<double> shuffled = b.ranks;
    long long as_extreme = 0;
    for (int s = 0; s < opt.shuffles; ++s) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        RankMoments ms = rank_moments(a.ranks, shuffled);
        double rs = ms.sa == 0.0 || ms.sb == 0.0 ? 0.0 : pearson_of_ranks(ms);
        if (r >= 0.0 ? rs >= r : rs <= r)
            ++as_extreme;
    }
    double p = static_cast<double>(as_extreme + 1) / static_cast<double>(opt.shuffles + 1);
    CorrelationReport rep;
    rep.r = r;
    rep.n = static_cast<int>(n);
    rep.significant_05 = p <= 0.05;
    rep.significant_01 = p <= 0.01;
    return rep;
}

std::vector<std::vector<CorrelationReport>>
correlation_matrix(const std::vector<Ranking> &rankings, const SignificanceOptions &opt) {
    const std::size_t k = rankings.size();
    std::vector<std::vector<CorrelationReport>> m(k, std::vector<CorrelationReport>(k));
    for (std::size_t i = 0; i < k; ++i) {
        m[i][i].r = 1.0;
        m[i][i].n = static_cast<int>(rankings[i].ranks.size());
        m[i][i].significant_01 = m[i][i].significant_05 = true;
        for (std::size_t j = i + 1; j < k; ++j) {
            m[i][j] = spearman(rankings[i], rankings[j], opt);
            m[j][i] = m[i][j];
        }
    }
    return m;
}

double mean_offdiagonal_r(const std::vector<std::vector<CorrelationReport>> &matrix) {
    double sum = 0.0;
    long long cells = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = i + 1; j < matrix.size(); ++j) {
            sum += matrix[i][j].r;
            ++cells;
        }
    return cells ? sum / static_cast<double>(cells) : 0.0;
}

} // namespace cocite
