#pragma once

#include "bdq/rational.hpp"

#include <optional>
#include <vector>

namespace bdq {

// Dense matrix over Q.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Rat& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    QMat transposed() const {
        QMat m(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    friend QMat operator*(const QMat& x, const QMat& y) {
        QMat m(x.rows, y.cols);
        for (int r = 0; r < x.rows; ++r)
            for (int k = 0; k < x.cols; ++k) {
                const Rat& v = x(r, k);
                if (v == 0) continue;
                for (int c = 0; c < y.cols; ++c) m(r, c) += v * y(k, c);
            }
        return m;
    }
    friend QMat operator+(const QMat& x, const QMat& y) {
        QMat m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
        return m;
    }
    friend QMat operator-(const QMat& x, const QMat& y) {
        QMat m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
        return m;
    }
    friend QMat operator*(const Rat& s, const QMat& x) {
        QMat m = x;
        for (auto& v : m.a) v *= s;
        return m;
    }
};

QMat qmat_inverse(const QMat& m); // throws on singular
bool qmat_is_integral(const QMat& m);

// Solution of A x = b over Q: particular point plus nullspace basis.
struct AffineSolution {
    bool feasible = false;
    std::vector<Rat> x0;
    std::vector<std::vector<Rat>> nullspace;

    int dim() const { return feasible ? static_cast<int>(nullspace.size()) : -1; }
    std::vector<Rat> point(const std::vector<Rat>& params) const {
        std::vector<Rat> x = x0;
        for (size_t k = 0; k < nullspace.size(); ++k)
            for (size_t i = 0; i < x.size(); ++i) x[i] += params[k] * nullspace[k][i];
        return x;
    }
};

AffineSolution solve_affine(const QMat& A, const std::vector<Rat>& b);

// A point of the solution set avoiding the hyperplanes x[idx] = 0 for each
// idx in nonzero_idx, if one exists.
std::optional<std::vector<Rat>> affine_point_avoiding(const AffineSolution& sol,
                                                      const std::vector<int>& nonzero_idx);

} // namespace bdq
