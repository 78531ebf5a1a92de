#pragma once

#include "bdq/ext.hpp"
#include "bdq/matk.hpp"
#include "bdq/qlinalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace bdq {

// ---------------------------------------------------------------------------
// Double-coset canonical forms GL(n,O) \ GL(n,K) / Diag(n,K), n = 2, 3.
// ---------------------------------------------------------------------------

struct CosetForm2 {
    int i = 0; // T_i = [[1, t^-i],[0,1]]
    bool operator==(const CosetForm2& o) const { return i == o.i; }
};

struct CosetForm3 {
    int i = 0, j = 0;
    Laurent q; // supported in strictly negative exponents
    bool operator==(const CosetForm3& o) const { return i == o.i && j == o.j && q == o.q; }
};

MatK coset2_matrix(const CosetForm2& f);
MatK coset3_matrix(const CosetForm3& f);

CosetForm2 reduce_gl2(const MatK& m);
CosetForm3 reduce_gl3(const MatK& m);

// [f]: strictly negative part.
Laurent bracket_negative(const Laurent& f);

bool same_coset_gl3(const CosetForm3& a, const CosetForm3& b);
// Unit pair (y1, y2) with b.q = [y1 a.q + (y2 - y1) t^{-i-j}], if any;
// polynomials truncated at the DD-16 bound.
std::optional<std::pair<Laurent, Laurent>> coset3_witness(const CosetForm3& a,
                                                          const CosetForm3& b);

// ---------------------------------------------------------------------------
// Multiplier orders of lattices.
// ---------------------------------------------------------------------------

// I(M) = { x : x M <= M } for M a lattice in K^n with componentwise
// multiplication; returns the canonical (Hermite) basis.
MatK multiplier_order(const MatK& lattice_basis);

// Lattices in L + K in coordinates (even, odd, K-part); multiplication
// (e,o,a)*(e',o',a') = (ee' + t oo', eo' + oe', aa').
MatK multiplier_order_LK(const MatK& lattice_basis);

// General form: mult_mats[c] is the matrix of multiplication by the c-th
// coordinate unit of the ambient algebra.
MatK multiplier_in_algebra(const MatK& lattice_basis, const std::vector<MatK>& mult_mats);

// { x : x * src <= dst } for lattices with entries in O; the result may have
// entries of negative valuation.
MatK multiplier_hom(const MatK& src, const MatK& dst, const std::vector<MatK>& mult_mats);

// Canonical basis of Lambda_k in O^2: {(1,1), (t^k, 0)}.
MatK order_K2_basis(int k);

// The unique k with Lambda = Lambda_k; input must be an order in O^2.
int classify_order_K2(const MatK& basis);

// The unique m with Lambda = O[t^{m+1/2}]; basis given as two elements of L.
int classify_order_L(const Ext& b1, const Ext& b2);

// Index exponent k with product of invariant factors t^k for sub <= sup.
int index_of_suborder(const MatK& sub, const MatK& sup);

// ---------------------------------------------------------------------------
// Suborder classification in K^3 and K + L (isomorphism classes).
// ---------------------------------------------------------------------------

enum class K3Tag { Maximal, Lk, LkPrime, Lkl, LklPrime };
struct OrderClassK3 {
    K3Tag tag = K3Tag::Maximal;
    int k = 0, l = 0;
    bool operator==(const OrderClassK3& o) const { return tag == o.tag && k == o.k && l == o.l; }
};

enum class KLTag { Maximal, Lk, L1Prime, Lkl, LkPrimeSeries };
struct OrderClassKL {
    KLTag tag = KLTag::Maximal;
    int k = 0, l = 0;
    bool operator==(const OrderClassKL& o) const { return tag == o.tag && k == o.k && l == o.l; }
};

// All classes of given index; counts floor(n/2)+1 resp. floor(n/2)+1 (even) /
// floor(n/2)+2 (odd).
std::vector<OrderClassK3> enumerate_suborders_K3(int n);
std::vector<OrderClassKL> enumerate_suborders_KL(int n);

bool is_gorenstein(const OrderClassK3& c);
bool is_gorenstein(const OrderClassKL& c);

int index_of(const OrderClassK3& c);
int index_of(const OrderClassKL& c);

// Concrete basis in K^3 (columns), basis 1, e2, e3 of R^3.
MatK order_K3_class_basis(const OrderClassK3& c);
// Concrete basis in (even, odd, K) coordinates of L + K.
MatK order_KL_class_basis(const OrderClassKL& c);

// ---------------------------------------------------------------------------
// Index forms and cubic rings (Delone-Faddeev).
// ---------------------------------------------------------------------------

struct IndexForm {
    Laurent a, b, c, d; // all in O

    IndexForm() = default;
    IndexForm(Laurent a_, Laurent b_, Laurent c_, Laurent d_);
};

// Multiplication table of the cubic ring on the basis (1, omega, theta).
struct CubicRing {
    IndexForm f;
    // products as coordinate triples (x0, x1, x2) = x0 + x1 omega + x2 theta
    std::array<Laurent, 3> omega_theta, omega_sq, theta_sq;

    // product of arbitrary elements given as coordinate triples
    std::array<Laurent, 3> mul(const std::array<Laurent, 3>& x,
                               const std::array<Laurent, 3>& y) const;
};

CubicRing cubic_from_index_form(const IndexForm& f);

// Multiplication matrices for 1, omega, theta in the basis (1, omega, theta).
std::vector<MatK> cubic_mult_matrices(const CubicRing& r);

// Cubic polynomial c3 X^3 + c2 X^2 + c1 X + c0 over K.
struct CubicPoly {
    Laurent c3, c2, c1, c0;
};

// P_omega = X^3 - b X^2 + ac X - a^2 d, P_theta = X^3 + c X^2 + bd X + a d^2.
std::pair<CubicPoly, CubicPoly> char_polys(const IndexForm& f);

// 18abcd + b^2c^2 - 4ac^3 - 4db^3 - 27a^2d^2.
Laurent discriminant(const IndexForm& f);

enum class CubicAlgebraClass { Field, LPlusK, KCubed, Inseparable, Indeterminate };
CubicAlgebraClass classify_cubic_algebra(const IndexForm& f);
const char* to_string(CubicAlgebraClass c);

// 2 iff a,b,c,d all in tO, else 1; throws on discriminant 0.
int lattice_class_count(const IndexForm& f);

// g . f(u,v) = f((u,v) g) / det g for g in GL(2,O).
IndexForm gl2_action_on_forms(const MatK& g, const IndexForm& f);

// ---------------------------------------------------------------------------
// Twisted-case constants over L.
// ---------------------------------------------------------------------------

struct MatExt {
    int rows = 0, cols = 0;
    std::vector<Ext> a;
    MatExt() = default;
    MatExt(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Ext& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Ext& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    friend MatExt operator*(const MatExt& x, const MatExt& y) {
        MatExt m(x.rows, y.cols);
        for (int r = 0; r < x.rows; ++r)
            for (int k = 0; k < x.cols; ++k)
                for (int c = 0; c < y.cols; ++c)
                    m(r, c) = m(r, c) + x(r, k) * y(k, c);
        return m;
    }
};

MatExt J2(); // [[1, 1], [-j, j]]
MatExt J3(); // [[1,0,1],[0,1,0],[-j,0,j]]
Ext matext_det2(const MatExt& m);

} // namespace bdq
