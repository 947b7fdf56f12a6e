#pragma once

#include <vector>

namespace cocite::linalg {

// LU factorization with partial pivoting of a dense row-major matrix.
// Factor once, solve for as many right-hand sides as needed.
class DenseLU {
  public:
    // a is n*n row-major, consumed in place. Throws std::domain_error when a
    // pivot collapses to zero (singular to working precision).
    static DenseLU factor(std::vector<double> a, int n);

    std::vector<double> solve(std::vector<double> b) const;

    int size() const { return n_; }

  private:
    DenseLU() = default;

    std::vector<double> lu_; // unit L below the diagonal, U on and above
    std::vector<int> pivot_; // row swapped with row k at step k
    int n_ = 0;
};

} // namespace cocite::linalg
