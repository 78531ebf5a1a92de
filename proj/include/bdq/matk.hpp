#pragma once

#include "bdq/laurent.hpp"

#include <optional>
#include <vector>

namespace bdq {

// Dense matrix over K (Laurent-polynomial entries).
struct MatK {
    int rows = 0, cols = 0;
    std::vector<Laurent> a;

    MatK() = default;
    MatK(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static MatK identity(int n) {
        MatK m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Laurent(1);
        return m;
    }

    Laurent& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Laurent& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const MatK& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    friend MatK operator*(const MatK& x, const MatK& y) {
        MatK m(x.rows, y.cols);
        for (int r = 0; r < x.rows; ++r)
            for (int k = 0; k < x.cols; ++k) {
                if (x(r, k).is_zero()) continue;
                for (int c = 0; c < y.cols; ++c) {
                    if (y(k, c).is_zero()) continue;
                    m(r, c) += x(r, k) * y(k, c);
                }
            }
        return m;
    }

    std::vector<Laurent> col(int c) const {
        std::vector<Laurent> v(rows);
        for (int r = 0; r < rows; ++r) v[static_cast<size_t>(r)] = (*this)(r, c);
        return v;
    }
    int col_valuation(int c, int if_zero) const {
        int v = if_zero;
        bool any = false;
        for (int r = 0; r < rows; ++r) {
            if (auto e = (*this)(r, c).valuation()) {
                v = any ? std::min(v, *e) : *e;
                any = true;
            }
        }
        return any ? v : if_zero;
    }
    void scale_col(int c, int e, const Rat& f) { // col *= f * t^e
        for (int r = 0; r < rows; ++r) (*this)(r, c) = (f * (*this)(r, c)).shifted(e);
    }
};

Laurent matk_det(const MatK& m); // minor expansion, exact (n <= 4 expected)

// Column Hermite form over O for a full-row-rank n x m matrix (m >= n):
// lower triangular n x n, pivot t^{e_k} on the diagonal, entries left of a
// pivot reduced to exponents < e_k. Canonical per lattice. prec_hint bounds
// pivot exponents for rectangular inputs (callers that know the lattice
// contains t^N O^n pass N).
MatK hermite_over_O(const MatK& m, std::optional<int> prec_hint = std::nullopt);

// True iff v lies in the O-span of the columns of basis (square invertible).
bool lattice_contains(const MatK& basis, const std::vector<Laurent>& v);
bool same_lattice(const MatK& a, const MatK& b);

} // namespace bdq
