#include "bdq/qlinalg.hpp"

#include <optional>

namespace bdq {

QMat qmat_inverse(const QMat& m) {
    if (m.rows != m.cols) throw Error(Error::Kind::Internal, "inverse of non-square matrix");
    int n = m.rows;
    QMat w = m, inv = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (w(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw invalid("singular matrix");
        if (piv != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(w(piv, c), w(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        Rat d = w(col, col);
        for (int c = 0; c < n; ++c) {
            w(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w(r, col) == 0) continue;
            Rat f = w(r, col);
            for (int c = 0; c < n; ++c) {
                w(r, c) -= f * w(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

bool qmat_is_integral(const QMat& m) {
    for (auto& v : m.a)
        if (!is_integer(v)) return false;
    return true;
}

AffineSolution solve_affine(const QMat& A, const std::vector<Rat>& b) {
    int m = A.rows, n = A.cols;
    QMat w(m, n + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) w(r, c) = A(r, c);
        w(r, n) = b[static_cast<size_t>(r)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r) {
            if (w(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c <= n; ++c) std::swap(w(piv, c), w(row, c));
        Rat d = w(row, col);
        for (int c = col; c <= n; ++c) w(row, c) /= d;
        for (int r = 0; r < m; ++r) {
            if (r == row || w(r, col) == 0) continue;
            Rat f = w(r, col);
            for (int c = col; c <= n; ++c) w(r, c) -= f * w(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }
    AffineSolution sol;
    for (int r = row; r < m; ++r) {
        if (w(r, n) != 0) return sol; // inconsistent
    }
    sol.feasible = true;
    sol.x0.assign(n, Rat(0));
    std::vector<bool> is_pivot(n, false);
    for (size_t k = 0; k < pivot_col.size(); ++k) {
        is_pivot[pivot_col[k]] = true;
        sol.x0[pivot_col[k]] = w(static_cast<int>(k), n);
    }
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> basis(n, Rat(0));
        basis[c] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) basis[pivot_col[k]] = -w(static_cast<int>(k), c);
        sol.nullspace.push_back(std::move(basis));
    }
    return sol;
}

std::optional<std::vector<Rat>> affine_point_avoiding(const AffineSolution& sol,
                                                      const std::vector<int>& nonzero_idx) {
    if (!sol.feasible) return std::nullopt;
    // Each forbidden hyperplane is avoidable iff the solution set is not
    // contained in it; a finite union of proper affine subspaces cannot cover
    // the set over Q, so scanning small parameter vectors terminates.
    for (int idx : nonzero_idx) {
        bool contained = sol.x0[idx] == 0;
        if (contained) {
            for (auto& nb : sol.nullspace) {
                if (nb[idx] != 0) {
                    contained = false;
                    break;
                }
            }
        }
        if (contained) return std::nullopt;
    }
    auto ok = [&](const std::vector<Rat>& x) {
        for (int idx : nonzero_idx)
            if (x[idx] == 0) return false;
        return true;
    };
    if (ok(sol.x0)) return sol.x0;
    size_t k = sol.nullspace.size();
    std::vector<Rat> params(k, Rat(0));
    // x0 + lambda * v for each basis vector, then pairs; small integer
    // lambdas are enough since each hyperplane excludes at most one lambda
    // per direction.
    for (size_t i = 0; i < k; ++i) {
        for (long lam = 1; lam <= static_cast<long>(nonzero_idx.size()) + 1; ++lam) {
            params.assign(k, Rat(0));
            params[i] = lam;
            auto x = sol.point(params);
            if (ok(x)) return x;
        }
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            for (long li = 1; li <= 3; ++li)
                for (long lj = 1; lj <= 3; ++lj) {
                    params.assign(k, Rat(0));
                    params[i] = li;
                    params[j] = lj;
                    auto x = sol.point(params);
                    if (ok(x)) return x;
                }
        }
    }
    // Dense fallback: a random-free deterministic sweep with growing weights.
    for (long w = 1; w <= 8; ++w) {
        params.assign(k, Rat(0));
        for (size_t i = 0; i < k; ++i) params[i] = w + static_cast<long>(i);
        auto x = sol.point(params);
        if (ok(x)) return x;
    }
    throw Error(Error::Kind::Internal, "affine_point_avoiding: sweep exhausted");
}

} // namespace bdq
