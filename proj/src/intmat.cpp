#include "bdq/intmat.hpp"

namespace bdq {

Int intmat_det(const IntMat& m) {
    if (m.rows != m.cols) throw Error(Error::Kind::Internal, "det of non-square matrix");
    int n = m.rows;
    if (n == 0) return Int(1);
    // Fraction-free over Q via rationals; result is integral.
    std::vector<Rat> w(m.a.begin(), m.a.end());
    auto at = [&](int r, int c) -> Rat& { return w[static_cast<size_t>(r) * n + c]; };
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Int(0);
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(col, c));
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            Rat f = at(r, col) / at(col, col);
            for (int c = col; c < n; ++c) at(r, c) -= f * at(col, c);
        }
    }
    if (!is_integer(det)) throw Error(Error::Kind::Internal, "integer det not integral");
    return det.get_num();
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
    for (int c = 0; c < m.cols; ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(IntMat& m, int a, int b) {
    for (int r = 0; r < m.rows; ++r) std::swap(m(r, a), m(r, b));
}
void add_row(IntMat& m, int dst, int src, const Int& f) { // row dst += f * row src
    for (int c = 0; c < m.cols; ++c) m(dst, c) += f * m(src, c);
}
void add_col(IntMat& m, int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows; ++r) m(r, dst) += f * m(r, src);
}

} // namespace

SmithForm smith_normal_form(const IntMat& input) {
    SmithForm out;
    out.D = input;
    out.U = IntMat::identity(input.rows);
    out.V = IntMat::identity(input.cols);
    IntMat& D = out.D;
    IntMat& U = out.U;
    IntMat& V = out.V;
    int n = std::min(D.rows, D.cols);

    for (int k = 0; k < n; ++k) {
        // Locate pivot: minimal nonzero |entry| in the trailing block.
        int pr = -1, pc = -1;
        Int best;
        for (int r = k; r < D.rows; ++r)
            for (int c = k; c < D.cols; ++c) {
                if (D(r, c) == 0) continue;
                Int v = abs(D(r, c));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break; // trailing block zero
        if (pr != k) {
            swap_rows(D, pr, k);
            swap_rows(U, pr, k);
        }
        if (pc != k) {
            swap_cols(D, pc, k);
            swap_cols(V, pc, k);
        }
        // Reduce row and column until the pivot divides everything there.
        bool again = true;
        while (again) {
            again = false;
            for (int r = k + 1; r < D.rows; ++r) {
                if (D(r, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(r, k).get_mpz_t(), D(k, k).get_mpz_t());
                add_row(D, r, k, -q);
                add_row(U, r, k, -q);
                if (D(r, k) != 0) {
                    swap_rows(D, r, k);
                    swap_rows(U, r, k);
                    again = true;
                }
            }
            for (int c = k + 1; c < D.cols; ++c) {
                if (D(k, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(k, c).get_mpz_t(), D(k, k).get_mpz_t());
                add_col(D, c, k, -q);
                add_col(V, c, k, -q);
                if (D(k, c) != 0) {
                    swap_cols(D, c, k);
                    swap_cols(V, c, k);
                    again = true;
                }
            }
        }
        // Divisibility sweep: pivot must divide the whole trailing block.
        for (int r = k + 1; r < D.rows && D(k, k) != 0; ++r) {
            bool bad = false;
            for (int c = k + 1; c < D.cols; ++c) {
                if (D(r, c) % D(k, k) != 0) {
                    bad = true;
                    break;
                }
            }
            if (bad) {
                add_row(D, k, r, Int(1));
                add_row(U, k, r, Int(1));
                --k; // redo this pivot
                break;
            }
        }
    }
    // Sign normalization.
    for (int k = 0; k < n; ++k) {
        if (D(k, k) < 0) {
            for (int c = 0; c < D.cols; ++c) D(k, c) = -D(k, c);
            for (int c = 0; c < U.cols; ++c) U(k, c) = -U(k, c);
        }
    }
    return out;
}

std::vector<Int> invariant_factors(const IntMat& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<Int> out;
    int n = std::min(m.rows, m.cols);
    for (int k = 0; k < n; ++k) {
        if (f.D(k, k) != 0) out.push_back(f.D(k, k));
    }
    return out;
}

} // namespace bdq
