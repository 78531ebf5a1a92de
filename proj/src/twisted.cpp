#include "bdq/twisted.hpp"

#include <algorithm>
#include <set>

namespace bdq {

QMat omega0_matrix(const RootSystem& rs) {
    int n = rs.rank();
    QMat a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = Rat(rs.cartan(r, c));
    QMat om = qmat_inverse(a);
    for (int r = 0; r < n; ++r) {
        Rat dr(rs.sym[static_cast<size_t>(r)]);
        for (int c = 0; c < n; ++c) om(r, c) = dr * om(r, c);
    }
    if (!(om == om.transposed()))
        throw Error(Error::Kind::Internal, "Omega_0 matrix not symmetric");
    return om;
}

namespace {

struct SkewBasis {
    int n = 0;
    std::vector<std::pair<int, int>> pos; // (k, l), k < l

    explicit SkewBasis(int dim) : n(dim) {
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) pos.emplace_back(k, l);
    }
    int size() const { return static_cast<int>(pos.size()); }
    QMat matrix(const std::vector<Rat>& x, size_t offset) const {
        QMat m(n, n);
        for (size_t r = 0; r < pos.size(); ++r) {
            auto [k, l] = pos[r];
            m(k, l) = x[offset + r];
            m(l, k) = -x[offset + r];
        }
        return m;
    }
};

struct RowBuilder {
    int nvars;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;

    explicit RowBuilder(int vars) : nvars(vars) {}
    void add(std::vector<Rat> row, Rat b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
    QMat matrix() const {
        QMat m(static_cast<int>(rows.size()), nvars);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < nvars; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
        return m;
    }
};

// (tau(alpha) (x) 1 + 1 (x) alpha)(r_0) = 0 for C = C0 + sum x_r S_r,
// S_r the skew basis at the given variable offset. alpha_p(h_k) = a_{kp}.
void add_gamma1_rows(const RootSystem& rs, const AdmissibleTriple& t, const QMat& c0,
                     const SkewBasis& sb, size_t offset, RowBuilder& out) {
    int n = rs.rank();
    auto cartan = [&](int k, int p) { return Rat(rs.cartan(k, p)); };
    for (size_t idx = 0; idx < t.g1.size(); ++idx) {
        int i = t.g1[idx] - 1;
        int j = t.tau[idx] - 1;
        for (int m = 0; m < n; ++m) {
            std::vector<Rat> row(static_cast<size_t>(out.nvars), Rat(0));
            Rat b(0);
            // sum_k a_{kj} C_{km} + sum_l a_{li} C_{ml}
            for (int r = 0; r < sb.size(); ++r) {
                auto [k, l] = sb.pos[static_cast<size_t>(r)];
                Rat coeff(0);
                // S_r contributes +1 at (k,l), -1 at (l,k).
                if (l == m) coeff += cartan(k, j);
                if (k == m) coeff -= cartan(l, j);
                if (k == m) coeff += cartan(l, i);
                if (l == m) coeff -= cartan(k, i);
                row[offset + static_cast<size_t>(r)] = coeff;
            }
            for (int k = 0; k < n; ++k) b -= cartan(k, j) * c0(k, m);
            for (int l = 0; l < n; ++l) b -= cartan(l, i) * c0(m, l);
            out.add(std::move(row), b);
        }
    }
}

QMat perm_matrix(const Perm& d) {
    int n = static_cast<int>(d.size());
    QMat m(n, n);
    for (int k = 0; k < n; ++k) m(d[static_cast<size_t>(k)] - 1, k) = 1;
    return m;
}

// Entrywise rows for F(C) = 0 with F(C) = C - sign * M C^T M^T, C affine in
// the skew variables at offset.
void add_conj_rows(const QMat& md, int sign, const QMat& c0, const SkewBasis& sb, size_t offset,
                   RowBuilder& out) {
    int n = c0.rows;
    auto f_of = [&](const QMat& c) {
        QMat r = c;
        QMat m2 = md * c.transposed() * md.transposed();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) r(p, q) -= Rat(sign) * m2(p, q);
        return r;
    };
    QMat fc0 = f_of(c0);
    std::vector<QMat> fb; // F is linear, so the coefficient of x_r is F(S_r)
    for (int r = 0; r < sb.size(); ++r) {
        std::vector<Rat> x(static_cast<size_t>(sb.size()), Rat(0));
        x[static_cast<size_t>(r)] = 1;
        fb.push_back(f_of(sb.matrix(x, 0)));
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            std::vector<Rat> row(static_cast<size_t>(out.nvars), Rat(0));
            for (int r = 0; r < sb.size(); ++r) row[offset + static_cast<size_t>(r)] = fb[static_cast<size_t>(r)](p, q);
            out.add(std::move(row), -fc0(p, q));
        }
}

} // namespace

bool discrete_twistable(const AdmissibleTriple& t) {
    if (!is_admissible(t)) throw invalid("triple is not admissible");
    if (chevalley_is_inner(t.type)) return t.empty();
    Perm d = involution_d(t.type);
    auto dd = [&](int r) { return d[static_cast<size_t>(r - 1)]; };
    std::set<int> g2(t.g2.begin(), t.g2.end());
    std::set<int> dg1;
    for (int a : t.g1) dg1.insert(dd(a));
    if (dg1 != g2) return false;
    for (int a : t.g1) {
        int pre = t.tau_inv_of(dd(a)); // d(a) in Gamma_2
        if (t.tau_of(a) != dd(pre)) return false;
    }
    return true;
}

ContinuousSpace continuous_space_nontwisted(const AdmissibleTriple& t) {
    RootSystem rs = build_root_system(t.type);
    int n = rs.rank();
    QMat om = omega0_matrix(rs);
    QMat half = Rat(1, 2) * om;
    SkewBasis sb(n);
    RowBuilder rb(sb.size());
    add_gamma1_rows(rs, t, half, sb, 0, rb);
    AffineSolution sol = solve_affine(rb.matrix(), rb.rhs);
    ContinuousSpace out;
    if (!sol.feasible) return out;
    out.dim = sol.dim();
    out.witness = ContinuousParameter{half + sb.matrix(sol.x0, 0)};
    return out;
}

TwistCheck continuous_space_twisted(const AdmissibleTriple& t) {
    TwistCheck out;
    out.discreteOk = discrete_twistable(t);
    if (!out.discreteOk) throw invalid("discrete conditions fail");
    RootSystem rs = build_root_system(t.type);
    int n = rs.rank();
    QMat om = omega0_matrix(rs);
    QMat half = Rat(1, 2) * om;
    QMat zero(n, n);
    Perm d = involution_d(t.type);
    QMat md = perm_matrix(d);
    SkewBasis sb(n);
    int s = sb.size();
    RowBuilder rb(2 * s);
    // Gamma_1 constraints on both K-components of r_0 = u + j v.
    add_gamma1_rows(rs, t, half, sb, 0, rb);
    add_gamma1_rows(rs, t, zero, sb, static_cast<size_t>(s), rb);
    // gamma_1(r_0) = Ad_S(r_0)^{21}: u = M u^T M^T and -v = M v^T M^T.
    add_conj_rows(md, +1, half, sb, 0, rb);
    add_conj_rows(md, -1, zero, sb, static_cast<size_t>(s), rb);
    AffineSolution sol = solve_affine(rb.matrix(), rb.rhs);
    if (!sol.feasible) {
        out.continuousDim = -1;
        return out;
    }
    out.continuousDim = sol.dim();
    TwistedParameter w;
    w.u = half + sb.matrix(sol.x0, 0);
    w.v = sb.matrix(sol.x0, static_cast<size_t>(s));
    out.witness = std::move(w);
    return out;
}

std::vector<AdmissibleTriple> d_odd_twisted_families(int m) {
    if (m % 2 == 0) throw invalid("D_m family requires odd m");
    if (m < 3) throw invalid("D_m requires m >= 3");
    SimpleType type{Family::D, m};
    build_root_system(type);
    std::vector<AdmissibleTriple> out;
    auto add_with_mirror = [&](std::vector<int> g1, std::vector<int> tau) {
        AdmissibleTriple t;
        t.type = type;
        // sort g1 keeping tau aligned
        std::vector<std::pair<int, int>> arrows;
        for (size_t k = 0; k < g1.size(); ++k) arrows.emplace_back(g1[k], tau[k]);
        std::sort(arrows.begin(), arrows.end());
        for (auto& [a, b] : arrows) {
            t.g1.push_back(a);
            t.tau.push_back(b);
        }
        t.g2 = t.tau;
        std::sort(t.g2.begin(), t.g2.end());
        out.push_back(t);
        out.push_back(t.mirror());
    };
    add_with_mirror({m - 1}, {m});
    for (int k = 1; k <= m - 2; ++k) add_with_mirror({m - 1, k}, {k, m});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AdmissibleTriple> e6_twisted_list() {
    auto all = enumerate_triples(SimpleType{Family::E, 6}, /*include_empty=*/false);
    std::vector<AdmissibleTriple> out;
    for (auto& t : all)
        if (discrete_twistable(t)) out.push_back(t);
    return out;
}

bool satisfies_gamma1_constraints(const AdmissibleTriple& t, const QMat& c) {
    RootSystem rs = build_root_system(t.type);
    int n = rs.rank();
    for (size_t idx = 0; idx < t.g1.size(); ++idx) {
        int i = t.g1[idx] - 1;
        int j = t.tau[idx] - 1;
        for (int m = 0; m < n; ++m) {
            Rat acc(0);
            for (int k = 0; k < n; ++k) acc += Rat(rs.cartan(k, j)) * c(k, m);
            for (int l = 0; l < n; ++l) acc += Rat(rs.cartan(l, i)) * c(m, l);
            if (acc != 0) return false;
        }
    }
    return true;
}

} // namespace bdq
