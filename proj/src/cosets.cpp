#include "bdq/orders.hpp"

#include <algorithm>

namespace bdq {

MatK coset2_matrix(const CosetForm2& f) {
    MatK m = MatK::identity(2);
    m(0, 1) = Laurent::t_pow(-f.i);
    return m;
}

MatK coset3_matrix(const CosetForm3& f) {
    MatK m = MatK::identity(3);
    m(0, 1) = Laurent::t_pow(-f.i);
    m(1, 2) = Laurent::t_pow(-f.j);
    m(0, 2) = f.q;
    return m;
}

Laurent bracket_negative(const Laurent& f) { return f.negative_part(); }

CosetForm2 reduce_gl2(const MatK& m) {
    if (m.rows != 2 || m.cols != 2) throw invalid("reduce_gl2 expects a 2x2 matrix");
    Laurent d = matk_det(m);
    if (d.is_zero()) throw invalid("singular matrix");
    // The index is the valuation defect of the columns against the
    // determinant; both sides are invariant under GL(2,O) x Diag(2,K).
    int i = *d.valuation() - m.col_valuation(0, 0) - m.col_valuation(1, 0);
    return CosetForm2{i};
}

namespace {

// Polynomial xgcd over Q[t] for Laurent inputs with valuation >= 0.
// Returns (g, x, y) with x a + y b = g, g monic.
struct XGcd {
    Laurent g, x, y;
};

std::pair<Laurent, Laurent> poly_divmod(const Laurent& a, const Laurent& b) {
    Laurent q, r = a;
    int db = b.max_exp_or(0);
    Rat lb = b.coeff(db);
    while (!r.is_zero() && r.max_exp_or(0) >= db) {
        int dr = r.max_exp_or(0);
        Rat f = r.coeff(dr) / lb;
        Laurent term = Laurent::t_pow(dr - db, f);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

XGcd poly_xgcd(const Laurent& a, const Laurent& b) {
    // invariant: r0 = x0 a + y0 b, r1 = x1 a + y1 b
    Laurent r0 = a, r1 = b;
    Laurent x0(1), y0, x1, y1(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Laurent x2 = x0 - q * x1, y2 = y0 - q * y1;
        r0 = r1;
        r1 = r;
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    Rat lead = r0.coeff(r0.max_exp_or(0));
    XGcd out;
    out.g = Laurent::div_monomial(r0, 0, lead);
    out.x = Laurent::div_monomial(x0, 0, lead);
    out.y = Laurent::div_monomial(y0, 0, lead);
    return out;
}

// Left-multiplies rows (r0, r1) of W by [[x, y], [-b/g, a/g]] where
// x a + y b = g for a = W(r0,col), b = W(r1,col); afterwards
// W(r0,col) = g and W(r1,col) = 0. Determinant-1 polynomial row operation.
void xgcd_rows(MatK& w, int r0, int r1, int col) {
    Laurent a = w(r0, col), b = w(r1, col);
    if (b.is_zero()) return;
    XGcd e = poly_xgcd(a, b);
    auto [qa, ra] = poly_divmod(a, e.g);
    auto [qb, rb] = poly_divmod(b, e.g);
    if (!ra.is_zero() || !rb.is_zero())
        throw Error(Error::Kind::Internal, "xgcd_rows: gcd does not divide");
    for (int c = 0; c < w.cols; ++c) {
        Laurent top = e.x * w(r0, c) + e.y * w(r1, c);
        Laurent bot = qa * w(r1, c) - qb * w(r0, c);
        w(r0, c) = top;
        w(r1, c) = bot;
    }
}

// Linear system for the N_ij relation q2 = [y1 q1 + (y2 - y1) t^{-i-j}]:
// rows indexed by negative exponents, unknowns the truncated coefficients
// of y1, y2 (DD-16 bound). Unit indices are 0 and B.
struct CosetSystem {
    int i, j, B, E;
    Laurent q1;

    CosetSystem(int i_, int j_, const Laurent& q1_, int extra_deg)
        : i(i_), j(j_), q1(q1_) {
        B = std::max({neg_degree(q1), i + j, 1});
        E = std::max({neg_degree(q1), i + j, extra_deg});
    }
    int nvars() const { return 2 * B; }

    // Coefficient row of the orbit element at exponent e (linear in y).
    std::vector<Rat> expr_row(int e) const {
        std::vector<Rat> row(static_cast<size_t>(nvars()), Rat(0));
        for (int s = 0; s < B; ++s) {
            Rat c = q1.coeff(e - s);
            if (c != 0) row[static_cast<size_t>(s)] += c;
        }
        int s = e + i + j;
        if (s >= 0 && s < B) {
            row[static_cast<size_t>(B + s)] += 1;
            row[static_cast<size_t>(s)] -= 1;
        }
        return row;
    }

    void add_congruences(std::vector<std::vector<Rat>>& rows, std::vector<Rat>& rhs) const {
        auto unit_row = [&](int var, Rat val) {
            std::vector<Rat> r(static_cast<size_t>(nvars()), Rat(0));
            r[static_cast<size_t>(var)] = 1;
            rows.push_back(std::move(r));
            rhs.push_back(val);
        };
        for (int s = 0; s < std::min(j, B); ++s) unit_row(B + s, Rat(s == 0 ? 1 : 0));
        for (int s = 0; s < std::min(i, B); ++s) {
            std::vector<Rat> r(static_cast<size_t>(nvars()), Rat(0));
            r[static_cast<size_t>(s)] = 1;
            r[static_cast<size_t>(B + s)] = -1;
            rows.push_back(std::move(r));
            rhs.push_back(Rat(0));
        }
    }

    AffineSolution solve(const std::vector<std::pair<int, Rat>>& coeff_constraints) const {
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        for (auto& [e, val] : coeff_constraints) {
            rows.push_back(expr_row(e));
            rhs.push_back(val);
        }
        add_congruences(rows, rhs);
        QMat m(static_cast<int>(rows.size()), nvars());
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < nvars(); ++c) m(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
        return solve_affine(m, rhs);
    }

    std::optional<std::vector<Rat>> unit_point(const AffineSolution& sol) const {
        return affine_point_avoiding(sol, {0, B});
    }

    std::pair<Laurent, Laurent> units_from(const std::vector<Rat>& x) const {
        Laurent y1, y2;
        for (int s = 0; s < B; ++s) {
            y1.add_to(s, x[static_cast<size_t>(s)]);
            y2.add_to(s, x[static_cast<size_t>(B + s)]);
        }
        return {y1, y2};
    }

    Laurent orbit_element(const Laurent& y1, const Laurent& y2) const {
        return (y1 * q1 + (y2 - y1).shifted(-i - j)).negative_part();
    }
};

void validate_form3(const CosetForm3& f) {
    if (f.i < 0 || f.j < 0) throw invalid("coset indices must be nonnegative");
    if (f.q != f.q.negative_part()) throw invalid("q must satisfy q(0) = 0 (negative exponents only)");
}

} // namespace

std::optional<std::pair<Laurent, Laurent>> coset3_witness(const CosetForm3& a,
                                                          const CosetForm3& b) {
    validate_form3(a);
    validate_form3(b);
    if (a.i != b.i || a.j != b.j) return std::nullopt;
    CosetSystem sys(a.i, a.j, a.q, neg_degree(b.q));
    std::vector<std::pair<int, Rat>> constraints;
    for (int e = -sys.E; e <= -1; ++e) constraints.emplace_back(e, b.q.coeff(e));
    AffineSolution sol = sys.solve(constraints);
    if (!sol.feasible) return std::nullopt;
    auto pt = sys.unit_point(sol);
    if (!pt) return std::nullopt;
    auto [y1, y2] = sys.units_from(*pt);
    if (sys.orbit_element(y1, y2) != b.q)
        throw Error(Error::Kind::Internal, "coset witness fails residual check");
    return std::make_pair(y1, y2);
}

bool same_coset_gl3(const CosetForm3& a, const CosetForm3& b) {
    return coset3_witness(a, b).has_value();
}

namespace {

// DD-18 orbit representative: minimize the degree in t^{-1}, then zero out
// coefficients greedily from the most negative exponent up, then take the
// solver's deterministic unit point.
Laurent canonicalize_q(int i, int j, const Laurent& q) {
    if (q.is_zero()) return q;
    CosetSystem sys(i, j, q, 0);
    auto feasible = [&](const std::vector<std::pair<int, Rat>>& cons,
                        std::vector<Rat>* point) -> bool {
        AffineSolution sol = sys.solve(cons);
        if (!sol.feasible) return false;
        auto pt = sys.unit_point(sol);
        if (!pt) return false;
        if (point) *point = *pt;
        return true;
    };
    int deg = neg_degree(q);
    std::vector<std::pair<int, Rat>> cons;
    int dmin = deg;
    for (int d = 0; d < deg; ++d) {
        cons.clear();
        for (int e = -sys.E; e < -d; ++e) cons.emplace_back(e, Rat(0));
        if (feasible(cons, nullptr)) {
            dmin = d;
            break;
        }
    }
    cons.clear();
    for (int e = -sys.E; e < -dmin; ++e) cons.emplace_back(e, Rat(0));
    for (int e = -dmin; e <= -1; ++e) {
        cons.emplace_back(e, Rat(0));
        if (!feasible(cons, nullptr)) cons.pop_back();
    }
    std::vector<Rat> pt;
    if (!feasible(cons, &pt)) throw Error(Error::Kind::Internal, "canonicalize_q lost feasibility");
    auto [y1, y2] = sys.units_from(pt);
    return sys.orbit_element(y1, y2);
}

} // namespace

CosetForm3 reduce_gl3(const MatK& m) {
    if (m.rows != 3 || m.cols != 3) throw invalid("reduce_gl3 expects a 3x3 matrix");
    if (matk_det(m).is_zero()) throw invalid("singular matrix");
    MatK w = m;
    // Scale every column to valuation 0 (right Diag move), so entries are
    // polynomials and gcd row reduction applies.
    for (int c = 0; c < 3; ++c) w.scale_col(c, -w.col_valuation(c, 0), Rat(1));
    // Column 0 -> (g, 0, 0) with g a unit polynomial.
    xgcd_rows(w, 0, 1, 0);
    xgcd_rows(w, 0, 2, 0);
    // Column 1 rows {1,2}: rescale so min valuation is 0, then clear row 2.
    {
        int v = std::min(w(1, 1).val_or(1 << 20), w(2, 1).val_or(1 << 20));
        if (v == (1 << 20)) throw invalid("singular matrix");
        w.scale_col(1, -v, Rat(1));
        xgcd_rows(w, 1, 2, 1);
    }
    // Column 2: make the (2,2) entry a unit polynomial.
    {
        if (w(2, 2).is_zero()) throw invalid("singular matrix");
        w.scale_col(2, -*w(2, 2).valuation(), Rat(1));
    }
    const Laurent &g = w(0, 0), &x2 = w(0, 1), &gp = w(1, 1), &x3 = w(0, 2), &y3 = w(1, 2),
                  &z3 = w(2, 2);
    (void)g;
    int i = std::max(0, -x2.val_or(0));
    int j = std::max(0, -y3.val_or(0));

    // Upper-triangular completion: with P = [[1,p12,0],[0,p2,p23],[0,0,p3]]
    // the (1,2) and (2,3) conditions pin p2 = t^i [x2/g'] and
    // p3 = t^j [p2 y3/z3]; q = [(x3 + p12 y3)/(p3 z3)] with
    // p12 = p2 t^{-i} - x2/g'.
    Laurent p2(1);
    if (i > 0) p2 = Laurent::div_unit(x2, gp, 0).negative_part().shifted(i);
    Laurent p12;
    {
        Laurent d = Laurent::div_unit(x2, gp, std::max(j, 1));
        Laurent full = p2.shifted(-i) - d;
        if (!full.negative_part().is_zero())
            throw Error(Error::Kind::Internal, "reduce_gl3: p12 not integral");
        p12 = full.truncated(std::max(j, 1));
    }
    Laurent p3(1);
    if (j > 0) p3 = Laurent::div_unit(p2 * y3, z3, 0).negative_part().shifted(j);

    Laurent num = x3 + p12 * y3;
    Laurent q_raw = Laurent::div_unit(num, p3 * z3, 0).negative_part();

    CosetForm3 out;
    out.i = i;
    out.j = j;
    out.q = canonicalize_q(i, j, q_raw);
    return out;
}

} // namespace bdq
