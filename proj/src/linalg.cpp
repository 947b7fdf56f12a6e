#include "cocite/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cocite::linalg {

namespace {
inline std::size_t idx(int j, int k, int n) {
    return static_cast<std::size_t>(j) * n + k;
}
} // namespace

DenseLU DenseLU::factor(std::vector<double> a, int n) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("DenseLU: matrix size mismatch");

    DenseLU f;
    f.n_ = n;
    f.pivot_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::fabs(a[idx(k, k, n)]);
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(a[idx(i, k, n)]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0)
            throw std::domain_error("DenseLU: singular matrix (zero pivot in column " +
                                    std::to_string(k) + ")");
        f.pivot_[static_cast<std::size_t>(k)] = p;
        if (p != k)
            for (int j = 0; j < n; ++j)
                std::swap(a[idx(k, j, n)], a[idx(p, j, n)]);

        double pivot = a[idx(k, k, n)];
        for (int i = k + 1; i < n; ++i) {
            double m = a[idx(i, k, n)] / pivot;
            a[idx(i, k, n)] = m;
            if (m != 0.0)
                for (int j = k + 1; j < n; ++j)
                    a[idx(i, j, n)] -= m * a[idx(k, j, n)];
        }
    }
    f.lu_ = std::move(a);
    return f;
}

std::vector<double> DenseLU::solve(std::vector<double> b) const {
    if (b.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("DenseLU: rhs size mismatch");

    for (int k = 0; k < n_; ++k) {
        int p = pivot_[static_cast<std::size_t>(k)];
        if (p != k)
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(p)]);
    }
    for (int i = 1; i < n_; ++i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            s -= lu_[idx(i, j, n_)] * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = s;
    }
    for (int i = n_ - 1; i >= 0; --i) {
        double s = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n_; ++j)
            s -= lu_[idx(i, j, n_)] * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = s / lu_[idx(i, i, n_)];
    }
    return b;
}

} // namespace cocite::linalg
