#ifndef HODIS_CORRECTION_HPP
#define HODIS_CORRECTION_HPP

#include <cmath>
#include <cstdlib>
#include <vector>

#include "hodis/common.hpp"
#include "hodis/scalar.hpp"

namespace hodis {

// Index map of the subgrid nodes of one element: (k, l) with |k|,|l| <= n,
// the four extreme corners excluded (the interior Laplacian never reads them).
class NodeGrid {
public:
    explicit NodeGrid(int n) : n_(n), idx_((2 * n + 1) * (2 * n + 1), -1) {
        HODIS_REQUIRE(n >= 2, "subgrid needs at least two intervals per half side");
        for (int k = -n; k <= n; ++k)
            for (int l = -n; l <= n; ++l) {
                if (std::abs(k) == n && std::abs(l) == n) continue;
                idx_[flat(k, l)] = count_++;
            }
    }

    int n() const { return n_; }
    int count() const { return count_; }

    bool is_node(int k, int l) const {
        return std::abs(k) <= n_ && std::abs(l) <= n_ && !(std::abs(k) == n_ && std::abs(l) == n_);
    }

    int index(int k, int l) const { return idx_[flat(k, l)]; }

    int interior_count() const { return (2 * n_ - 1) * (2 * n_ - 1); }
    int edge_count_per_side() const { return 2 * n_ - 1; }

private:
    std::size_t flat(int k, int l) const {
        return static_cast<std::size_t>(k + n_) * (2 * n_ + 1) + (l + n_);
    }

    int n_;
    int count_ = 0;
    std::vector<int> idx_;
};

// Dense LU with row pivoting.  Exact scalars pick the first nonzero pivot
// (keeps the factor entries small for this integer matrix); floating point
// picks the largest magnitude.
template <class S>
class DenseLU {
public:
    DenseLU() = default;

    // factorizes in place; throws NumericalError when singular
    explicit DenseLU(std::vector<std::vector<S>> a) : a_(std::move(a)), n_(static_cast<int>(a_.size())) {
        perm_.resize(n_);
        for (int i = 0; i < n_; ++i) perm_[i] = i;
        for (int c = 0; c < n_; ++c) {
            int p = pick_pivot(c);
            HODIS_NUMERIC_CHECK(p >= 0, "singular correction matrix (indexing bug?)");
            if (p != c) {
                std::swap(a_[c], a_[p]);
                std::swap(perm_[c], perm_[p]);
            }
            const S& piv = a_[c][c];
            for (int r = c + 1; r < n_; ++r) {
                if (ScalarOps<S>::is_zero(a_[r][c])) {
                    a_[r][c] = S(0);
                    continue;
                }
                S f = a_[r][c] / piv;
                a_[r][c] = f;
                for (int j = c + 1; j < n_; ++j) {
                    if (!ScalarOps<S>::is_zero(a_[c][j])) a_[r][j] -= f * a_[c][j];
                }
            }
        }
    }

    int dim() const { return n_; }

    void solve(std::vector<S>& x) const {
        std::vector<S> b(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) b[i] = std::move(x[perm_[i]]);
        for (int r = 1; r < n_; ++r) {
            S acc = std::move(b[r]);
            for (int c = 0; c < r; ++c)
                if (!ScalarOps<S>::is_zero(a_[r][c]) && !ScalarOps<S>::is_zero(b[c]))
                    acc -= a_[r][c] * b[c];
            b[r] = std::move(acc);
        }
        for (int r = n_ - 1; r >= 0; --r) {
            S acc = std::move(b[r]);
            for (int c = r + 1; c < n_; ++c)
                if (!ScalarOps<S>::is_zero(a_[r][c]) && !ScalarOps<S>::is_zero(b[c]))
                    acc -= a_[r][c] * b[c];
            acc /= a_[r][r];
            b[r] = std::move(acc);
        }
        x = std::move(b);
    }

private:
    int pick_pivot(int c) const {
        if constexpr (ScalarOps<S>::exact) {
            for (int r = c; r < n_; ++r)
                if (!ScalarOps<S>::is_zero(a_[r][c])) return r;
            return -1;
        } else {
            int best = -1;
            double mag = 0.0;
            for (int r = c; r < n_; ++r) {
                double m = std::abs(ScalarOps<S>::to_double(a_[r][c]));
                if (m > mag) {
                    mag = m;
                    best = r;
                }
            }
            return mag > 1e-10 ? best : -1;
        }
    }

    std::vector<std::vector<S>> a_;
    std::vector<int> perm_;
    int n_ = 0;
};

// Constant-coefficient linear system solved for the corrections at every
// iteration of the subgrid construction.  Unknowns: the correction at each
// node plus the scaled evolution correction (last column).  Rows:
//   interior:   n^2 * (five-point difference of v') - G' = rhs
//   x edges:    v'(+-n, l) - v'(0, l) = rhs        (|l| < n)
//   y edges:    v'(k, +-n) - v'(k, 0) = rhs        (|k| < n)
//   amplitude:  v'(0, 0) = 0
// The spacing is absorbed into the scaling, so the matrix is purely numeric
// and the factorization is done exactly once per n.
template <class S>
class CorrectionSystem {
public:
    explicit CorrectionSystem(int n) : nodes_(n) {
        const int nn = n * n;
        const int dim = nodes_.count() + 1;
        std::vector<std::vector<S>> a(static_cast<std::size_t>(dim),
                                      std::vector<S>(static_cast<std::size_t>(dim), S(0)));
        int row = 0;
        for (int k = -n + 1; k <= n - 1; ++k)
            for (int l = -n + 1; l <= n - 1; ++l) {
                a[row][nodes_.index(k + 1, l)] += S(nn);
                a[row][nodes_.index(k - 1, l)] += S(nn);
                a[row][nodes_.index(k, l + 1)] += S(nn);
                a[row][nodes_.index(k, l - 1)] += S(nn);
                a[row][nodes_.index(k, l)] -= S(4 * nn);
                a[row][gcol()] = S(-1);
                ++row;
            }
        for (int side = 0; side < 2; ++side) {
            int sk = side == 0 ? -n : n;
            for (int l = -n + 1; l <= n - 1; ++l) {
                a[row][nodes_.index(sk, l)] += S(1);
                a[row][nodes_.index(0, l)] -= S(1);
                ++row;
            }
        }
        for (int side = 0; side < 2; ++side) {
            int sl = side == 0 ? -n : n;
            for (int k = -n + 1; k <= n - 1; ++k) {
                a[row][nodes_.index(k, sl)] += S(1);
                a[row][nodes_.index(k, 0)] -= S(1);
                ++row;
            }
        }
        a[row][nodes_.index(0, 0)] = S(1);
        ++row;
        HODIS_NUMERIC_CHECK(row == dim, "correction system row count mismatch");
        lu_ = DenseLU<S>(std::move(a));
    }

    const NodeGrid& nodes() const { return nodes_; }
    int dim() const { return nodes_.count() + 1; }
    int gcol() const { return nodes_.count(); }

    // row layout helpers (rhs vectors follow this order)
    int row_interior(int k, int l) const {
        const int n = nodes_.n();
        return (k + n - 1) * (2 * n - 1) + (l + n - 1);
    }
    int row_edge_x(int side, int l) const {
        const int n = nodes_.n();
        return nodes_.interior_count() + (side > 0 ? 1 : 0) * (2 * n - 1) + (l + n - 1);
    }
    int row_edge_y(int side, int k) const {
        const int n = nodes_.n();
        return nodes_.interior_count() + 2 * (2 * n - 1) + (side > 0 ? 1 : 0) * (2 * n - 1) +
               (k + n - 1);
    }
    int row_amplitude() const { return dim() - 1; }

    void solve(std::vector<S>& rhs) const { lu_.solve(rhs); }

private:
    NodeGrid nodes_;
    DenseLU<S> lu_;
};

} // namespace hodis

#endif
