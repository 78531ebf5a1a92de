#pragma once

#include "bdq/rational.hpp"

#include <vector>

namespace bdq {

// Dense matrix over Z (arbitrary precision).
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Int& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        IntMat m(x.rows, y.cols);
        for (int r = 0; r < x.rows; ++r)
            for (int k = 0; k < x.cols; ++k) {
                if (x(r, k) == 0) continue;
                for (int c = 0; c < y.cols; ++c) m(r, c) += x(r, k) * y(k, c);
            }
        return m;
    }
};

Int intmat_det(const IntMat& m);

struct SmithForm {
    IntMat U, D, V; // U * M * V = D
};

// Smith normal form with unimodular transforms; D diagonal, nonnegative,
// d1 | d2 | ...  Pivot choice: entry of minimal nonzero absolute value,
// scanned row-major (ties to the first seen).
SmithForm smith_normal_form(const IntMat& m);

// Nonzero diagonal entries of D.
std::vector<Int> invariant_factors(const IntMat& m);

} // namespace bdq
