#include "bdq/rmatrix.hpp"

#include "bdq/twisted.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace bdq {

namespace {

// Dense n x n matrix over Q used to materialize basis elements.
QMat unit_mat(int n, int i, int j) {
    QMat m(n, n);
    m(i, j) = 1;
    return m;
}

QMat lie_bracket(const QMat& x, const QMat& y) { return x * y - y * x; }

Rat trace_prod(const QMat& x, const QMat& y) {
    Rat acc(0);
    int n = x.rows;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) acc += x(i, k) * y(k, i);
    return acc;
}

} // namespace

GlBasis::GlBasis(int n) : n_(n), dim_(n * n - 1) {
    if (n < 2 || n > 4) throw invalid("sl(n) basis supported for 2 <= n <= 4");
    std::vector<QMat> elems;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) elems.push_back(unit_mat(n, i, j));
    for (int k = 0; k + 1 < n; ++k) elems.push_back(unit_mat(n, k, k) - unit_mat(n, k + 1, k + 1));

    gram_ = QMat(dim_, dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) gram_(a, b) = trace_prod(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
    gram_inv_ = qmat_inverse(gram_);

    // Expand a traceless matrix in the basis: off-diagonal entries are unit
    // coefficients; the diagonal part expands in h_k by partial sums.
    auto expand = [&](const QMat& m) {
        std::vector<std::pair<int, Rat>> out;
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (m(i, j) != 0) out.emplace_back(idx, m(i, j));
                ++idx;
            }
        // diag = sum c_k h_k with c_k = m_00 + ... + m_kk.
        Rat partial(0);
        for (int k = 0; k + 1 < n; ++k) {
            partial += m(k, k);
            if (partial != 0) out.emplace_back(n * (n - 1) + k, partial);
        }
        return out;
    };

    brackets_.resize(static_cast<size_t>(dim_) * dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            brackets_[static_cast<size_t>(a) * dim_ + b] =
                expand(lie_bracket(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
}

int GlBasis::unit_index(int i, int j) const {
    int idx = 0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            if (r == c) continue;
            if (r == i && c == j) return idx;
            ++idx;
        }
    throw Error(Error::Kind::Internal, "unit_index: bad indices");
}

int GlBasis::cartan_index(int k) const { return n_ * (n_ - 1) + k; }

const GlBasis& gl_basis(int n) {
    static std::map<int, GlBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GlBasis(n)).first;
    return it->second;
}

Tensor2 casimir(int n) {
    const GlBasis& B = gl_basis(n);
    Tensor2 om(B.dim());
    // Omega = sum_{a,b} (g^{-1})_{ab} B_a (x) B_b.
    for (int a = 0; a < B.dim(); ++a)
        for (int b = 0; b < B.dim(); ++b) om(a, b) = B.gram_inv()(a, b);
    return om;
}

Tensor2 cartan_casimir(int n) {
    const GlBasis& B = gl_basis(n);
    Tensor2 om = casimir(n);
    Tensor2 out(B.dim());
    for (int a = 0; a < B.dim(); ++a)
        for (int b = 0; b < B.dim(); ++b)
            if (B.is_cartan(a) && B.is_cartan(b)) out(a, b) = om(a, b);
    return out;
}

Tensor2 r_dj(int n) {
    const GlBasis& B = gl_basis(n);
    Tensor2 r = cartan_casimir(n);
    for (auto& v : r.a) v /= 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r(B.unit_index(i, j), B.unit_index(j, i)) += 1;
    return r;
}

namespace {

// Positive roots of A_{n-1} as segments [i, j): alpha = alpha_{i+1} + ... +
// alpha_j in 1-based simple-root labels, e_alpha = E_ij.
struct Segment {
    int i, j; // 0 <= i < j <= n-1 as matrix indices: E_{i,j}
};

// tau extended additively to a segment; nullopt when undefined.
std::optional<Segment> tau_segment(const AdmissibleTriple& t, const Segment& s) {
    std::vector<int> imgs;
    for (int r = s.i + 1; r <= s.j; ++r) { // simple roots r = i+1 .. j (1-based)
        int img = t.tau_of(r);
        if (img == 0) return std::nullopt;
        imgs.push_back(img);
    }
    std::sort(imgs.begin(), imgs.end());
    for (size_t k = 1; k < imgs.size(); ++k)
        if (imgs[k] != imgs[k - 1] + 1) return std::nullopt; // not a root
    return Segment{imgs.front() - 1, imgs.back()};
}

} // namespace

Tensor2 build_rbd(const AdmissibleTriple& t, const QMat& r0) {
    if (t.type.family != Family::A) throw invalid("explicit tensors are built for type A only");
    int n = t.type.rank + 1;
    if (n < 2 || n > 4) throw invalid("sl(n) tensors supported for 2 <= n <= 4");
    if (!is_admissible(t)) throw invalid("triple is not admissible");
    const GlBasis& B = gl_basis(n);
    int rank = t.type.rank;
    if (r0.rows != rank || r0.cols != rank) throw invalid("r0 must be rank x rank");

    // Validate the continuous parameter.
    RootSystem rs = build_root_system(t.type);
    QMat om = omega0_matrix(rs);
    if (!(r0 + r0.transposed() == om)) throw invalid("r0 + r0^21 = Omega_0 fails");
    if (!satisfies_gamma1_constraints(t, r0)) throw invalid("Gamma_1 constraint on r0 fails");

    Tensor2 r(B.dim());
    // Cartan part.
    for (int k = 0; k < rank; ++k)
        for (int l = 0; l < rank; ++l) r(B.cartan_index(k), B.cartan_index(l)) = r0(k, l);
    // Standard part.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r(B.unit_index(i, j), B.unit_index(j, i)) += 1;
    // Wedge sum over (Span Gamma_1)^+ and tau-iterates.
    std::set<int> g1(t.g1.begin(), t.g1.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool in_span = true;
            for (int ridx = i + 1; ridx <= j && in_span; ++ridx)
                if (!g1.count(ridx)) in_span = false;
            if (!in_span) continue;
            Segment cur{i, j};
            while (true) {
                auto next = tau_segment(t, cur);
                if (!next) break;
                cur = *next;
                int ea = B.unit_index(i, j);                 // e_alpha
                int fb = B.unit_index(cur.j, cur.i);         // e_{-tau^k(alpha)}
                r(ea, fb) += 1;
                r(fb, ea) -= 1;
            }
        }
    return r;
}

Tensor3 cyb(const Tensor2& r, int n) {
    const GlBasis& B = gl_basis(n);
    int dim = B.dim();
    Tensor3 out(dim);
    std::vector<std::pair<std::pair<int, int>, Rat>> nz;
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y)
            if (r(x, y) != 0) nz.push_back({{x, y}, r(x, y)});
    for (auto& [ab, va] : nz)
        for (auto& [cd, vb] : nz) {
            Rat coeff = va * vb;
            auto [a, b] = ab;
            auto [c, d] = cd;
            // [r12, r13] = [B_a, B_c] (x) B_b (x) B_d
            for (auto& [e, f] : B.bracket(a, c)) out(e, b, d) += coeff * f;
            // [r12, r23] = B_a (x) [B_b, B_c] (x) B_d
            for (auto& [e, f] : B.bracket(b, c)) out(a, e, d) += coeff * f;
            // [r13, r23] = B_a (x) B_c (x) [B_b, B_d]
            for (auto& [e, f] : B.bracket(b, d)) out(a, c, e) += coeff * f;
        }
    return out;
}

bool verify_rmatrix(const Tensor2& r, int n) {
    Tensor2 sym = r + r.swapped();
    if (!(sym == casimir(n))) return false;
    return cyb(r, n).is_zero();
}

} // namespace bdq
