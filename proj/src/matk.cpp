#include "bdq/matk.hpp"

namespace bdq {

namespace {

Laurent det_rec(const MatK& m, std::vector<int>& cols, int row) {
    if (row == m.rows) return Laurent(1);
    Laurent acc;
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!m(row, c).is_zero()) {
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            Laurent sub = det_rec(m, rest, row + 1);
            Laurent term = m(row, c) * sub;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

Laurent matk_det(const MatK& m) {
    if (m.rows != m.cols) throw Error(Error::Kind::Internal, "det of non-square matrix");
    std::vector<int> cols(static_cast<size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c) cols[static_cast<size_t>(c)] = c;
    return det_rec(m, cols, 0);
}

MatK hermite_over_O(const MatK& input, std::optional<int> prec_hint) {
    int n = input.rows, m = input.cols;
    if (m < n) throw invalid("not a lattice basis");

    int min_val = 0;
    bool any = false;
    for (auto& e : input.a) {
        if (auto v = e.valuation()) {
            min_val = any ? std::min(min_val, *v) : *v;
            any = true;
        }
    }
    if (!any) throw invalid("not a lattice basis");

    int pivot_bound;
    if (prec_hint) {
        pivot_bound = *prec_hint;
    } else if (n == m) {
        Laurent d = matk_det(input);
        if (d.is_zero()) throw invalid("not a lattice basis");
        pivot_bound = *d.valuation() - (n - 1) * std::min(min_val, 0);
    } else {
        // Scan column subsets in lexicographic order for an invertible minor.
        std::vector<int> pick;
        std::vector<int> idx(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
        Laurent d;
        while (true) {
            MatK sub(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) sub(r, c) = input(r, idx[static_cast<size_t>(c)]);
            d = matk_det(sub);
            if (!d.is_zero()) break;
            int i = n - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - n + i) --i;
            if (i < 0) throw invalid("not a lattice basis");
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
        pivot_bound = *d.valuation() - (n - 1) * std::min(min_val, 0);
    }
    const int prec = pivot_bound + 1;

    MatK w = input;
    auto trunc_col = [&](int c) {
        for (int r = 0; r < n; ++r) w(r, c) = w(r, c).truncated(prec);
    };
    for (int c = 0; c < m; ++c) trunc_col(c);

    for (int r = 0; r < n; ++r) {
        int best = -1, bestval = 0;
        for (int c = r; c < m; ++c) {
            if (auto v = w(r, c).valuation()) {
                if (best < 0 || *v < bestval) {
                    best = c;
                    bestval = *v;
                }
            }
        }
        if (best < 0) throw invalid("not a lattice basis");
        if (best != r)
            for (int i = 0; i < n; ++i) std::swap(w(i, r), w(i, best));
        const int e = bestval;
        // Normalize the pivot column so the pivot is exactly t^e.
        Laurent unit = w(r, r).shifted(-e); // valuation 0
        for (int i = 0; i < n; ++i) w(i, r) = Laurent::div_unit(w(i, r), unit, prec);
        w(r, r) = Laurent::t_pow(e);
        // Clear row r to the right.
        for (int c = r + 1; c < m; ++c) {
            if (w(r, c).is_zero()) continue;
            Laurent f = w(r, c).shifted(-e); // in O by pivot minimality
            for (int i = 0; i < n; ++i) w(i, c) = (w(i, c) - f * w(i, r)).truncated(prec);
        }
        // Reduce row r to the left modulo t^e.
        for (int c = 0; c < r; ++c) {
            Laurent g = w(r, c).shifted(-e).nonnegative_part();
            if (g.is_zero()) continue;
            for (int i = 0; i < n; ++i) w(i, c) = (w(i, c) - g * w(i, r)).truncated(prec);
        }
    }

    MatK out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = w(r, c);
    return out;
}

bool lattice_contains(const MatK& basis, const std::vector<Laurent>& v) {
    Laurent d = matk_det(basis);
    if (d.is_zero()) throw invalid("not a lattice basis");
    int vd = *d.valuation();
    int n = basis.rows;
    for (int i = 0; i < n; ++i) {
        MatK sub = basis;
        for (int r = 0; r < n; ++r) sub(r, i) = v[static_cast<size_t>(r)];
        Laurent num = matk_det(sub);
        if (num.is_zero()) continue;
        if (*num.valuation() < vd) return false;
    }
    return true;
}

bool same_lattice(const MatK& a, const MatK& b) {
    if (a.rows != b.rows) return false;
    return hermite_over_O(a) == hermite_over_O(b);
}

} // namespace bdq
