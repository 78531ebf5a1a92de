#include "bdq/orders.hpp"

#include <algorithm>

namespace bdq {

namespace {

MatK adjugate(const MatK& m) {
    int n = m.rows;
    MatK adj(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            MatK minor(n - 1, n - 1);
            for (int i = 0, mi = 0; i < n; ++i) {
                if (i == c) continue; // adj = transposed cofactors
                for (int j = 0, mj = 0; j < n; ++j) {
                    if (j == r) continue;
                    minor(mi, mj) = m(i, j);
                    ++mj;
                }
                ++mi;
            }
            Laurent d = matk_det(minor);
            if ((r + c) % 2 == 1) d = -d;
            adj(r, c) = d;
        }
    return adj;
}

// { x in O^n : every constraint sum_c w_c x_c lies in O }, as a canonical
// lattice basis. Each constraint is a length-n vector of Laurent entries.
MatK solve_O_constraints(int n, const std::vector<std::vector<Laurent>>& constraints) {
    int min_val = 0;
    for (auto& w : constraints)
        for (auto& e : w) min_val = std::min(min_val, e.val_or(0));
    int N = -min_val;
    if (N <= 0) return MatK::identity(n);

    // Unknowns: coefficients x_{c,e}, e < N; conditions kill every negative
    // coefficient of each constraint value.
    int nvars = n * N;
    std::vector<std::vector<Rat>> rows;
    for (auto& w : constraints) {
        int lo = 0;
        for (auto& e : w) lo = std::min(lo, e.val_or(0));
        for (int s = lo; s <= -1; ++s) {
            std::vector<Rat> row(static_cast<size_t>(nvars), Rat(0));
            bool nonzero = false;
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < N; ++e) {
                    Rat v = w[static_cast<size_t>(c)].coeff(s - e);
                    if (v != 0) {
                        row[static_cast<size_t>(c * N + e)] = v;
                        nonzero = true;
                    }
                }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMat A(static_cast<int>(rows.size()), nvars);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nvars; ++c) A(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    AffineSolution sol = solve_affine(A, std::vector<Rat>(rows.size(), Rat(0)));
    if (!sol.feasible) throw Error(Error::Kind::Internal, "homogeneous system infeasible");

    MatK gens(n, static_cast<int>(sol.nullspace.size()) + n);
    for (size_t k = 0; k < sol.nullspace.size(); ++k) {
        for (int c = 0; c < n; ++c) {
            Laurent entry;
            for (int e = 0; e < N; ++e) entry.add_to(e, sol.nullspace[k][static_cast<size_t>(c * N + e)]);
            gens(c, static_cast<int>(k)) = entry;
        }
    }
    for (int c = 0; c < n; ++c)
        gens(c, static_cast<int>(sol.nullspace.size()) + c) = Laurent::t_pow(N);
    return hermite_over_O(gens, N);
}

// Constraint vectors for x with dst^{-1} M_x src integral: entry (a,b) of
// adj(dst) * M_c * src, scaled by t^{-v(det dst)}.
std::vector<std::vector<Laurent>> integrality_constraints(const MatK& src, const MatK& dst,
                                                          const std::vector<MatK>& mult_mats) {
    int n = src.rows;
    Laurent det = matk_det(dst);
    if (det.is_zero() || matk_det(src).is_zero()) throw invalid("not a lattice basis");
    int vd = *det.valuation();
    MatK adj = adjugate(dst);
    std::vector<std::vector<Laurent>> constraints;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Laurent> w(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c) {
                Laurent acc;
                for (int r = 0; r < n; ++r) {
                    if (adj(a, r).is_zero()) continue;
                    for (int s = 0; s < n; ++s) {
                        const Laurent& mv = mult_mats[static_cast<size_t>(c)](r, s);
                        if (mv.is_zero() || src(s, b).is_zero()) continue;
                        acc += adj(a, r) * mv * src(s, b);
                    }
                }
                w[static_cast<size_t>(c)] = acc.shifted(-vd);
            }
            constraints.push_back(std::move(w));
        }
    return constraints;
}

} // namespace

MatK multiplier_in_algebra(const MatK& lattice_basis, const std::vector<MatK>& mult_mats) {
    return solve_O_constraints(lattice_basis.rows,
                               integrality_constraints(lattice_basis, lattice_basis, mult_mats));
}

MatK multiplier_hom(const MatK& src, const MatK& dst, const std::vector<MatK>& mult_mats) {
    for (auto& e : src.a)
        if (!e.in_O()) throw invalid("multiplier_hom expects lattices inside O^n");
    for (auto& e : dst.a)
        if (!e.in_O()) throw invalid("multiplier_hom expects lattices inside O^n");
    int n = src.rows;
    // src contains t^{v(det src)} O^n, so solutions satisfy x t^{v} in O^n;
    // substitute x = t^{-v} y and solve for y in O^n.
    int shift = *matk_det(src).valuation();
    auto constraints = integrality_constraints(src, dst, mult_mats);
    for (auto& w : constraints)
        for (auto& e : w) e = e.shifted(-shift);
    MatK y = solve_O_constraints(n, constraints);
    MatK out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = y(r, c).shifted(-shift);
    return out;
}

MatK multiplier_order(const MatK& lattice_basis) {
    int n = lattice_basis.rows;
    std::vector<MatK> mult(static_cast<size_t>(n), MatK(n, n));
    for (int c = 0; c < n; ++c) mult[static_cast<size_t>(c)](c, c) = Laurent(1);
    return multiplier_in_algebra(lattice_basis, mult);
}

MatK multiplier_order_LK(const MatK& lattice_basis) {
    if (lattice_basis.rows != 3) throw invalid("L+K lattices have rank 3");
    // coordinates (even, odd, K-part): (e,o,a)*(E,O,A) = (eE+t oO, eO+oE, aA)
    std::vector<MatK> mult(3, MatK(3, 3));
    mult[0](0, 0) = Laurent(1); // e acts
    mult[0](1, 1) = Laurent(1);
    mult[1](0, 1) = Laurent::t_pow(1); // o acts
    mult[1](1, 0) = Laurent(1);
    mult[2](2, 2) = Laurent(1); // a acts
    return multiplier_in_algebra(lattice_basis, mult);
}

MatK order_K2_basis(int k) {
    if (k < 0) throw invalid("order index must be nonnegative");
    MatK m(2, 2);
    m(0, 0) = Laurent(1);
    m(1, 0) = Laurent(1);
    m(0, 1) = Laurent::t_pow(k);
    return m;
}

int classify_order_K2(const MatK& basis) {
    if (basis.rows != 2 || basis.cols != 2) throw invalid("K^2 order basis must be 2x2");
    Laurent d = matk_det(basis);
    if (d.is_zero()) throw invalid("rank defect, not an order basis");
    for (auto& e : basis.a)
        if (!e.in_O()) throw invalid("order must be contained in O^2");
    std::vector<Laurent> one{Laurent(1), Laurent(1)};
    if (!lattice_contains(basis, one)) throw invalid("order must contain (1,1)");
    int k = *d.valuation();
    if (!same_lattice(basis, order_K2_basis(k)))
        throw Error(Error::Kind::Internal, "K^2 lattice with 1 is not Lambda_k");
    return k;
}

int classify_order_L(const Ext& b1, const Ext& b2) {
    MatK basis(2, 2);
    basis(0, 0) = b1.even;
    basis(1, 0) = b1.odd;
    basis(0, 1) = b2.even;
    basis(1, 1) = b2.odd;
    Laurent d = matk_det(basis);
    if (d.is_zero()) throw invalid("rank defect, not an order basis");
    for (auto& e : basis.a)
        if (!e.in_O()) throw invalid("order must be contained in O_L");
    std::vector<Laurent> one{Laurent(1), Laurent()};
    if (!lattice_contains(basis, one)) throw invalid("order must contain 1");
    // Lambda = O + O b j after translating by O, so the index is v(det).
    return *d.valuation();
}

int index_of_suborder(const MatK& sub, const MatK& sup) {
    if (sub.rows != sup.rows || sub.cols != sup.cols) throw invalid("dimension mismatch");
    Laurent dsub = matk_det(sub), dsup = matk_det(sup);
    if (dsub.is_zero() || dsup.is_zero()) throw invalid("not a lattice basis");
    for (int c = 0; c < sub.cols; ++c)
        if (!lattice_contains(sup, sub.col(c))) throw invalid("not contained");
    return *dsub.valuation() - *dsup.valuation();
}

std::vector<OrderClassK3> enumerate_suborders_K3(int n) {
    if (n < 0) throw invalid("index must be nonnegative");
    std::vector<OrderClassK3> out;
    if (n == 0) {
        out.push_back({K3Tag::Maximal, 0, 0});
        return out;
    }
    out.push_back({K3Tag::Lk, n, 0});
    for (int l = 1; 2 * l <= n; ++l) out.push_back({K3Tag::Lkl, n - 2 * l, l});
    return out;
}

std::vector<OrderClassKL> enumerate_suborders_KL(int n) {
    if (n < 0) throw invalid("index must be nonnegative");
    std::vector<OrderClassKL> out;
    if (n == 0) {
        out.push_back({KLTag::Maximal, 0, 0});
        return out;
    }
    out.push_back({KLTag::Lk, n, 0});
    if (n == 1) out.push_back({KLTag::L1Prime, 0, 0});
    if (n >= 3 && n % 2 == 1) out.push_back({KLTag::LkPrimeSeries, (n - 1) / 2, 0});
    for (int l = 1; 2 * l <= n; ++l) out.push_back({KLTag::Lkl, n - 2 * l, l});
    return out;
}

bool is_gorenstein(const OrderClassK3& c) {
    return c.tag == K3Tag::Maximal || c.tag == K3Tag::Lk || c.tag == K3Tag::LkPrime;
}

bool is_gorenstein(const OrderClassKL& c) {
    return c.tag == KLTag::Maximal || c.tag == KLTag::Lk || c.tag == KLTag::L1Prime;
}

int index_of(const OrderClassK3& c) {
    switch (c.tag) {
    case K3Tag::Maximal:
        return 0;
    case K3Tag::Lk:
    case K3Tag::LkPrime:
        return c.k;
    case K3Tag::Lkl:
    case K3Tag::LklPrime:
        return c.k + 2 * c.l;
    }
    return 0;
}

int index_of(const OrderClassKL& c) {
    switch (c.tag) {
    case KLTag::Maximal:
        return 0;
    case KLTag::Lk:
        return c.k;
    case KLTag::L1Prime:
        return 1;
    case KLTag::Lkl:
        return c.k + 2 * c.l;
    case KLTag::LkPrimeSeries:
        return 2 * c.k + 1;
    }
    return 0;
}

MatK order_K3_class_basis(const OrderClassK3& c) {
    MatK m(3, 3);
    auto set_col = [&](int col, const Laurent& x, const Laurent& y, const Laurent& z) {
        m(0, col) = x;
        m(1, col) = y;
        m(2, col) = z;
    };
    Laurent one(1), zero;
    set_col(0, one, one, one); // 1 = (1,1,1)
    switch (c.tag) {
    case K3Tag::Maximal:
        set_col(1, zero, one, zero);
        set_col(2, zero, zero, one);
        break;
    case K3Tag::Lk:
        set_col(1, zero, one, zero);
        set_col(2, zero, zero, Laurent::t_pow(c.k));
        break;
    case K3Tag::LkPrime:
        set_col(1, zero, one, one);
        set_col(2, zero, zero, Laurent::t_pow(c.k));
        break;
    case K3Tag::Lkl:
        set_col(1, zero, Laurent::t_pow(c.l), zero);
        set_col(2, zero, zero, Laurent::t_pow(c.k + c.l));
        break;
    case K3Tag::LklPrime:
        set_col(1, zero, Laurent::t_pow(c.l), Laurent::t_pow(c.l));
        set_col(2, zero, zero, Laurent::t_pow(c.k + c.l));
        break;
    }
    return m;
}

MatK order_KL_class_basis(const OrderClassKL& c) {
    // coordinates (even, odd, K-part); e2 = (1,0,0), e3 = (0,1,0), 1 = (1,0,1)
    MatK m(3, 3);
    auto set_col = [&](int col, const Laurent& e, const Laurent& o, const Laurent& a) {
        m(0, col) = e;
        m(1, col) = o;
        m(2, col) = a;
    };
    Laurent one(1), zero;
    set_col(0, one, zero, one);
    switch (c.tag) {
    case KLTag::Maximal:
        set_col(1, one, zero, zero);
        set_col(2, zero, one, zero);
        break;
    case KLTag::Lk:
        set_col(1, one, zero, zero);
        set_col(2, zero, Laurent::t_pow(c.k), zero);
        break;
    case KLTag::L1Prime:
        set_col(1, Laurent::t_pow(1), zero, zero);
        set_col(2, zero, one, zero);
        break;
    case KLTag::Lkl:
        set_col(1, Laurent::t_pow(c.l), zero, zero);
        set_col(2, zero, Laurent::t_pow(c.k + c.l), zero);
        break;
    case KLTag::LkPrimeSeries:
        set_col(1, Laurent::t_pow(c.k + 1), zero, zero);
        set_col(2, zero, Laurent::t_pow(c.k), zero);
        break;
    }
    return m;
}

MatExt J2() {
    MatExt m(2, 2);
    m(0, 0) = Ext::one();
    m(0, 1) = Ext::one();
    m(1, 0) = -Ext::j();
    m(1, 1) = Ext::j();
    return m;
}

MatExt J3() {
    MatExt m(3, 3);
    m(0, 0) = Ext::one();
    m(0, 2) = Ext::one();
    m(1, 1) = Ext::one();
    m(2, 0) = -Ext::j();
    m(2, 2) = Ext::j();
    return m;
}

Ext matext_det2(const MatExt& m) {
    if (m.rows != 2 || m.cols != 2) throw invalid("det2 expects 2x2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

} // namespace bdq
