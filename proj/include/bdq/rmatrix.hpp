#pragma once

#include "bdq/bdtriple.hpp"
#include "bdq/qlinalg.hpp"

#include <vector>

namespace bdq {

// Fixed ordered basis of sl(n): matrix units E_ij (i != j, row-major order)
// followed by h_k = E_kk - E_{k+1,k+1}. Structure constants and the
// trace-form Gram matrix are precomputed.
class GlBasis {
public:
    explicit GlBasis(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }

    int unit_index(int i, int j) const; // E_ij, 0-based, i != j
    int cartan_index(int k) const;      // h_k, 0-based k < n-1
    bool is_cartan(int idx) const { return idx >= n_ * (n_ - 1); }

    // [B_a, B_b] as sparse (index, coeff) pairs.
    const std::vector<std::pair<int, Rat>>& bracket(int a, int b) const {
        return brackets_[static_cast<size_t>(a) * dim_ + b];
    }
    const QMat& gram() const { return gram_; }
    const QMat& gram_inv() const { return gram_inv_; }

private:
    int n_, dim_;
    std::vector<std::vector<std::pair<int, Rat>>> brackets_;
    QMat gram_, gram_inv_;
};

const GlBasis& gl_basis(int n); // cached, 2 <= n <= 4

// Element of sl(n) (x) sl(n) with exact rational coefficients.
struct Tensor2 {
    int dim = 0;
    std::vector<Rat> a;

    Tensor2() = default;
    explicit Tensor2(int d) : dim(d), a(static_cast<size_t>(d) * d, Rat(0)) {}
    Rat& operator()(int x, int y) { return a[static_cast<size_t>(x) * dim + y]; }
    const Rat& operator()(int x, int y) const { return a[static_cast<size_t>(x) * dim + y]; }
    bool is_zero() const {
        for (auto& v : a)
            if (v != 0) return false;
        return true;
    }
    Tensor2 swapped() const { // r^{21}
        Tensor2 s(dim);
        for (int x = 0; x < dim; ++x)
            for (int y = 0; y < dim; ++y) s(y, x) = (*this)(x, y);
        return s;
    }
    friend Tensor2 operator+(const Tensor2& p, const Tensor2& q) {
        Tensor2 s = p;
        for (size_t i = 0; i < s.a.size(); ++i) s.a[i] += q.a[i];
        return s;
    }
    friend Tensor2 operator-(const Tensor2& p, const Tensor2& q) {
        Tensor2 s = p;
        for (size_t i = 0; i < s.a.size(); ++i) s.a[i] -= q.a[i];
        return s;
    }
    bool operator==(const Tensor2& o) const { return dim == o.dim && a == o.a; }
};

struct Tensor3 {
    int dim = 0;
    std::vector<Rat> a;

    explicit Tensor3(int d) : dim(d), a(static_cast<size_t>(d) * d * d, Rat(0)) {}
    Rat& operator()(int x, int y, int z) {
        return a[(static_cast<size_t>(x) * dim + y) * dim + z];
    }
    bool is_zero() const {
        for (auto& v : a)
            if (v != 0) return false;
        return true;
    }
};

Tensor2 casimir(int n);        // trace-form dual bases
Tensor2 cartan_casimir(int n); // the h (x) h component
Tensor2 r_dj(int n);           // sum e_alpha (x) e_{-alpha} + Omega_0 / 2

// Full Belavin-Drinfeld tensor for a triple on A_{n-1}; r0 is the n-1 x n-1
// coefficient matrix in the coroot basis and is validated against
// r0 + r0^{21} = Omega_0 and the Gamma_1 constraints.
Tensor2 build_rbd(const AdmissibleTriple& t, const QMat& r0);

Tensor3 cyb(const Tensor2& r, int n); // [r12,r13] + [r12,r23] + [r13,r23]

bool verify_rmatrix(const Tensor2& r, int n); // CYB(r) = 0 and r + r^{21} = Omega

} // namespace bdq
