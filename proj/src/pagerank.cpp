#include "cocite/pagerank.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "cocite/csv.hpp"
#include "cocite/errors.hpp"
#include "cocite/linalg.hpp"

namespace cocite {

std::string teleport_kind_label(TeleportKind kind) {
    switch (kind) {
    case TeleportKind::Uniform:
        return "uniform";
    case TeleportKind::Citations:
        return "citations";
    case TeleportKind::Publications:
        return "publications";
    case TeleportKind::Custom:
        return "custom";
    }
    return "?";
}

int default_max_iter(double d, double tol) {
    if (!(tol > 0.0))
        throw ConfigError("tol must be positive");
    if (d <= 0.0)
        return 100;
    double steps = 10.0 * std::ceil(std::log(tol) / std::log(d));
    if (!(steps > 100.0))
        return 100;
    if (steps > 100000.0)
        return 100000;
    return static_cast<int>(steps);
}

TeleportVector make_teleport(TeleportKind kind, const std::vector<std::string> &authors,
                             const std::map<std::string, AuthorStats> &stats) {
    const int n = static_cast<int>(authors.size());
    if (n == 0)
        throw ConfigError("teleport vector needs at least one author");

    TeleportVector tv;
    tv.kind = kind;
    if (kind == TeleportKind::Uniform) {
        tv.w.assign(static_cast<std::size_t>(n), 1.0 / n);
        return tv;
    }
    if (kind == TeleportKind::Custom)
        throw ConfigError("custom teleport weights require an explicit weight vector");

    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (const std::string &author : authors) {
        auto it = stats.find(author);
        if (it == stats.end())
            throw ConfigError("no statistics for author '" + author + "'");
        raw.push_back(static_cast<double>(kind == TeleportKind::Citations
                                              ? it->second.citation_count
                                              : it->second.first_author_pub_count));
    }
    TeleportVector out = make_custom_teleport(std::move(raw));
    out.kind = kind;
    return out;
}

TeleportVector make_custom_teleport(std::vector<double> raw) {
    if (raw.empty())
        throw ConfigError("teleport vector needs at least one author");
    double total = 0.0;
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (!(raw[j] >= 0.0))
            throw ConfigError("teleport weight " + std::to_string(j) + " is negative or NaN");
        total += raw[j];
    }
    if (total == 0.0)
        throw ConfigError("teleport weights sum to zero; cannot normalize");
    for (double &v : raw)
        v /= total;
    TeleportVector tv;
    tv.kind = TeleportKind::Custom;
    tv.w = std::move(raw);
    return tv;
}

namespace kernel {

void pagerank_step(const MarkovMatrix &t, const std::vector<double> &x, double d,
                   const std::vector<double> &w, std::vector<double> &y) {
    const int n = t.n;
    const double *tm = t.t.data();
    const double *xp = x.data();
    const double *wp = w.data();
    double *yp = y.data();
    const double od = 1.0 - d;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        const double *row = tm + static_cast<std::size_t>(j) * n;
        double s = 0.0;
        for (int k = 0; k < n; ++k)
            s += row[k] * xp[k];
        yp[j] = d * s + od * wp[j];
    }
}

} // namespace kernel

namespace ref {

void pagerank_step(const MarkovMatrix &t, const std::vector<double> &x, double d,
                   const std::vector<double> &w, std::vector<double> &y) {
    const int n = t.n;
    const double *tm = t.t.data();
    const double *xp = x.data();
    const double *wp = w.data();
    double *yp = y.data();
    const double od = 1.0 - d;
    for (int j = 0; j < n; ++j) {
        const double *row = tm + static_cast<std::size_t>(j) * n;
        double s = 0.0;
        for (int k = 0; k < n; ++k)
            s += row[k] * xp[k];
        yp[j] = d * s + od * wp[j];
    }
}

} // namespace ref

namespace {

using StepFn = void (*)(const MarkovMatrix &, const std::vector<double> &, double,
                        const std::vector<double> &, std::vector<double> &);

void check_solve_inputs(const MarkovMatrix &t, double d, const TeleportVector &w) {
    if (w.n() != t.n)
        throw ConfigError("teleport vector length " + std::to_string(w.n()) +
                          " does not match matrix size " + std::to_string(t.n));
    if (!(d >= 0.0 && d < 1.0))
        throw ConfigError("damping factor must lie in [0,1), got " + csv::format_full(d));
}

PageRankResult run_power(const MarkovMatrix &t, double d, const TeleportVector &w,
                         const PowerOptions &opt, StepFn step) {
    check_solve_inputs(t, d, w);
    if (!(opt.tol > 0.0))
        throw ConfigError("tol must be positive");
    const int n = t.n;
    std::vector<double> x = opt.x0 ? *opt.x0 : w.w;
    if (static_cast<int>(x.size()) != n)
        throw ConfigError("start vector length does not match matrix size");
    const int max_iter = opt.max_iter > 0 ? opt.max_iter : default_max_iter(d, opt.tol);

    std::vector<double> y(static_cast<std::size_t>(n));
    double residual = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        step(t, x, d, w.w, y);
        residual = 0.0;
        for (int j = 0; j < n; ++j)
            residual += std::fabs(y[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j)]);
        x.swap(y);
        if (opt.observer)
            opt.observer(it, x, residual);
        if (residual < opt.tol) {
            PageRankResult r;
            r.scores = std::move(x);
            r.d = d;
            r.iterations = it;
            r.residual = residual;
            r.method = "power";
            return r;
        }
    }
    throw ConvergenceError("power iteration: residual " + csv::format_sig6(residual) +
                               " after " + std::to_string(max_iter) + " iterations (tol " +
                               csv::format_sig6(opt.tol) + ")",
                           std::move(x), max_iter, residual);
}

} // namespace

PageRankResult power_iterate(const MarkovMatrix &t, double d, const TeleportVector &w,
                             const PowerOptions &opt) {
    return run_power(t, d, w, opt, &kernel::pagerank_step);
}

PageRankResult ref::power_iterate(const MarkovMatrix &t, double d, const TeleportVector &w,
                                  const PowerOptions &opt) {
    return run_power(t, d, w, opt, &ref::pagerank_step);
}

PageRankResult steady_state_direct(const MarkovMatrix &t, double d, const TeleportVector &w) {
    check_solve_inputs(t, d, w);
    const int n = t.n;
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m[static_cast<std::size_t>(j) * n + k] = (j == k ? 1.0 : 0.0) - d * t.at(j, k);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        b[static_cast<std::size_t>(j)] = (1.0 - d) * w.w[static_cast<std::size_t>(j)];

    PageRankResult r;
    try {
        r.scores = linalg::DenseLU::factor(std::move(m), n).solve(std::move(b));
    } catch (const std::domain_error &e) {
        throw ConvergenceError(std::string("direct solve: ") + e.what(), {}, 0, 0.0);
    }
    std::vector<double> y(static_cast<std::size_t>(n));
    ref::pagerank_step(t, r.scores, d, w.w, y);
    r.residual = 0.0;
    for (int j = 0; j < n; ++j)
        r.residual += std::fabs(y[static_cast<std::size_t>(j)] - r.scores[static_cast<std::size_t>(j)]);
    r.d = d;
    r.iterations = 0;
    r.method = "direct";
    return r;
}

std::map<double, PageRankResult> damping_sweep(const MarkovMatrix &t, const TeleportVector &w,
                                               const std::vector<double> &d_values, double tol,
                                               int max_iter) {
    std::map<double, PageRankResult> out;
    PowerOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    for (double d : d_values) {
        try {
            out.emplace(d, power_iterate(t, d, w, opt));
        } catch (const ConvergenceError &e) {
            throw ConvergenceError("d=" + csv::format_full(d) + ": " + e.what(),
                                   e.last_iterate(), e.iterations(), e.residual());
        } catch (const ConfigError &e) {
            throw ConfigError("d=" + csv::format_full(d) + ": " + e.what());
        }
    }
    return out;
}

Trajectory classify_trajectory(const std::vector<double> &ranks_by_d, double slack) {
    if (ranks_by_d.size() < 2)
        throw ConfigError("trajectory classification needs at least 2 ranks");
    double delta = ranks_by_d.back() - ranks_by_d.front();
    if (std::fabs(delta) <= slack)
        return Trajectory::Stable;
    return delta < 0.0 ? Trajectory::Increase : Trajectory::Drop;
}

std::string trajectory_label(Trajectory t) {
    switch (t) {
    case Trajectory::Stable:
        return "stable";
    case Trajectory::Increase:
        return "increase";
    case Trajectory::Drop:
        return "drop";
    }
    return "?";
}

} // namespace cocite
