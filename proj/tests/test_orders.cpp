#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdq/orders.hpp"

#include <random>

using namespace bdq;

namespace {

Laurent L(const std::string& s) { return laurent_parse(s); }

MatK random_glO(std::mt19937& rng, int n, int deg) {
    std::uniform_int_distribution<int> coeff(-2, 2), nz(1, 3), pick(0, 2), idx(0, n - 1);
    auto rand_poly = [&]() {
        Laurent p;
        for (int e = 0; e <= deg; ++e) p.add_to(e, Rat(coeff(rng)));
        return p;
    };
    MatK g = MatK::identity(n);
    for (int step = 0; step < 5; ++step) {
        MatK e = MatK::identity(n);
        int a = idx(rng), b = idx(rng);
        switch (pick(rng)) {
        case 0:
            if (a != b) e(a, b) = rand_poly();
            break;
        case 1:
            e(a, a) = Laurent(Rat(nz(rng)));
            break;
        default:
            if (a != b) { // swap
                e(a, a) = Laurent();
                e(b, b) = Laurent();
                e(a, b) = Laurent(1);
                e(b, a) = Laurent(1);
            }
            break;
        }
        g = g * e;
    }
    return g;
}

MatK diag_monomials(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> expo(-3, 3), nz(1, 4);
    MatK h(n, n);
    for (int k = 0; k < n; ++k) h(k, k) = Laurent::t_pow(expo(rng), Rat(nz(rng)));
    return h;
}

} // namespace

TEST_CASE("reduce_gl2: canonical forms and spec examples") {
    CHECK(reduce_gl2(coset2_matrix({3})).i == 3);
    CHECK(reduce_gl2(MatK::identity(2)).i == 0);
    MatK m(2, 2);
    m(0, 0) = L("t^-1");
    m(0, 1) = Laurent(1);
    m(1, 0) = Laurent(1);
    CHECK(reduce_gl2(m).i == 1);
    MatK sing(2, 2);
    sing(0, 0) = Laurent(1);
    CHECK_THROWS_AS(reduce_gl2(sing), Error);
}

TEST_CASE("reduce_gl2: 1000 random P T_i H instances round-trip") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> iidx(0, 6);
    for (int it = 0; it < 1000; ++it) {
        int i = iidx(rng);
        MatK m = random_glO(rng, 2, 4) * coset2_matrix({i}) * diag_monomials(rng, 2);
        CHECK(reduce_gl2(m).i == i);
    }
}

TEST_CASE("multiplier orders in K^2: T_i columns give Lambda_i") {
    for (int i = 0; i <= 6; ++i) {
        MatK lat = coset2_matrix({i});
        MatK ord = multiplier_order(lat);
        CHECK(same_lattice(ord, order_K2_basis(i)));
        CHECK(classify_order_K2(ord) == i);
    }
}

TEST_CASE("multiplier order spec examples") {
    CHECK(same_lattice(multiplier_order(MatK::identity(2)), order_K2_basis(0)));
    MatK m(2, 2);
    m(0, 0) = L("t^-1");
    m(0, 1) = Laurent(1);
    m(1, 0) = Laurent(1);
    CHECK(same_lattice(multiplier_order(m), order_K2_basis(1)));
}

TEST_CASE("multiplier idempotence on orders: I(Lambda) = Lambda") {
    for (int k = 0; k <= 8; ++k) {
        MatK basis = order_K2_basis(k);
        CHECK(same_lattice(multiplier_order(basis), basis));
    }
    for (int n = 0; n <= 8; ++n) {
        for (auto& cls : enumerate_suborders_K3(n)) {
            MatK basis = order_K3_class_basis(cls);
            CHECK(same_lattice(multiplier_order(basis), basis));
        }
        for (auto& cls : enumerate_suborders_KL(n)) {
            MatK basis = order_KL_class_basis(cls);
            CHECK(same_lattice(multiplier_order_LK(basis), basis));
        }
    }
}

TEST_CASE("multiplier order properties on random lattices") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-2, 2);
    int tested = 0;
    for (int it = 0; it < 200 && tested < 120; ++it) {
        int n = (it % 2) ? 2 : 3;
        MatK m(n, n);
        for (auto& v : m.a)
            for (int k = 0; k < 2; ++k) v.add_to(expo(rng), Rat(coeff(rng)));
        if (matk_det(m).is_zero()) continue;
        ++tested;
        MatK ord = multiplier_order(m);
        std::vector<Laurent> one(static_cast<size_t>(n), Laurent(1));
        CHECK(lattice_contains(ord, one)); // any order contains 1
        for (auto& e : ord.a) CHECK(e.in_O()); // and sits inside O^n
        for (int a = 0; a < n; ++a) // multiplicative closure
            for (int b = 0; b < n; ++b) {
                std::vector<Laurent> prod(static_cast<size_t>(n));
                for (int r = 0; r < n; ++r) prod[static_cast<size_t>(r)] = ord(r, a) * ord(r, b);
                CHECK(lattice_contains(ord, prod));
            }
        CHECK(same_lattice(multiplier_order(ord), ord)); // I(Lambda) = Lambda
        // lattices in one class share the multiplier order
        MatK scaled = m;
        for (int r = 0; r < n; ++r) {
            Laurent s = Laurent::t_pow(expo(rng), Rat(1 + (r + it) % 3));
            for (int c = 0; c < n; ++c) scaled(r, c) = s * scaled(r, c);
        }
        CHECK(same_lattice(multiplier_order(scaled), ord));
    }
    CHECK(tested >= 120);
}

TEST_CASE("classify_order_K2 examples") {
    MatK a(2, 2);
    a(0, 0) = Laurent(1);
    a(1, 0) = Laurent(1);
    a(0, 1) = Laurent(1);
    CHECK(classify_order_K2(a) == 0);

    MatK b(2, 2);
    b(0, 0) = Laurent(1);
    b(1, 0) = Laurent(1);
    b(0, 1) = L("t^2+t^3");
    b(1, 1) = L("t^3");
    CHECK(classify_order_K2(b) == 2);

    MatK c(2, 2);
    c(0, 0) = Laurent(1);
    c(1, 0) = Laurent(1);
    c(0, 1) = L("t");
    c(1, 1) = L("t");
    CHECK_THROWS_AS(classify_order_K2(c), Error);
}

TEST_CASE("classify_order_L examples") {
    CHECK(classify_order_L(Ext::one(), Ext::j()) == 0);
    CHECK(classify_order_L(Ext::one(), Ext(Laurent(), L("t"))) == 1);
    CHECK(classify_order_L(Ext::one(), Ext(L("t"), Laurent(1))) == 0); // j + t: translate by O
    CHECK_THROWS_AS(classify_order_L(Ext::one(), Ext::one()), Error);
}

TEST_CASE("index of suborders") {
    for (int k = 0; k <= 6; ++k)
        CHECK(index_of_suborder(order_K2_basis(k), MatK::identity(2)) == k);
    CHECK(index_of_suborder(order_K2_basis(3), order_K2_basis(3)) == 0);
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            OrderClassK3 cls{K3Tag::Lkl, k, l};
            MatK maximal = order_K3_class_basis({K3Tag::Maximal, 0, 0});
            CHECK(index_of_suborder(order_K3_class_basis(cls), maximal) == k + 2 * l);
        }
    CHECK_THROWS_AS(index_of_suborder(MatK::identity(2), order_K2_basis(2)), Error);
}

TEST_CASE("suborder counts match the closed forms") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(static_cast<int>(enumerate_suborders_K3(n).size()) == n / 2 + 1);
        int expected = (n % 2 == 0) ? n / 2 + 1 : n / 2 + 2;
        CHECK(static_cast<int>(enumerate_suborders_KL(n).size()) == expected);
        for (auto& cls : enumerate_suborders_K3(n)) CHECK(index_of(cls) == n);
        for (auto& cls : enumerate_suborders_KL(n)) CHECK(index_of(cls) == n);
    }
    // KL spec anchors
    CHECK(enumerate_suborders_KL(1).size() == 2);
    CHECK(enumerate_suborders_KL(2).size() == 2);
    CHECK(enumerate_suborders_KL(3).size() == 3);
}

TEST_CASE("suborder indices agree with the invariant-factor computation") {
    MatK maxK3 = order_K3_class_basis({K3Tag::Maximal, 0, 0});
    for (int n = 0; n <= 8; ++n)
        for (auto& cls : enumerate_suborders_K3(n))
            CHECK(index_of_suborder(order_K3_class_basis(cls), maxK3) == n);
    MatK maxKL = order_KL_class_basis({KLTag::Maximal, 0, 0});
    for (int n = 0; n <= 8; ++n)
        for (auto& cls : enumerate_suborders_KL(n))
            CHECK(index_of_suborder(order_KL_class_basis(cls), maxKL) == n);
}

TEST_CASE("gorenstein tags") {
    CHECK(is_gorenstein(OrderClassK3{K3Tag::Lk, 3, 0}));
    CHECK(!is_gorenstein(OrderClassK3{K3Tag::Lkl, 1, 1}));
    CHECK(is_gorenstein(OrderClassK3{K3Tag::Maximal, 0, 0}));
    CHECK(is_gorenstein(OrderClassKL{KLTag::L1Prime, 0, 0}));
    CHECK(!is_gorenstein(OrderClassKL{KLTag::LkPrimeSeries, 2, 0}));
}

TEST_CASE("multiplier order in L + K: spec examples") {
    MatK max = order_KL_class_basis({KLTag::Maximal, 0, 0});
    CHECK(same_lattice(multiplier_order_LK(max), max));

    // N with basis {1, j t, e_K}: multipliers form O[t^{3/2}] + O
    MatK n(3, 3);
    n(0, 0) = Laurent(1);
    n(2, 0) = Laurent(1); // 1 = (1, 0, 1)
    n(1, 1) = L("t");     // j t
    n(2, 2) = Laurent(1); // e_K
    MatK ord = multiplier_order_LK(n);
    CHECK(same_lattice(ord, order_KL_class_basis({KLTag::Lk, 1, 0})));

    // scaling the lattice by an invertible element preserves the multiplier order
    MatK scaled(3, 3);
    // multiply componentwise by (x, a) with x = j, a = t^2: action matrix
    MatK mult(3, 3);
    mult(0, 1) = L("t"); // j * (E + jO) = tO + jE
    mult(1, 0) = Laurent(1);
    mult(2, 2) = L("t^2");
    scaled = mult * n;
    CHECK(same_lattice(multiplier_order_LK(scaled), ord));
}

TEST_CASE("J2 and J3 constants") {
    MatExt j2 = J2();
    Ext det = matext_det2(j2);
    CHECK(det.even.is_zero());
    CHECK(det.odd == L("2")); // det = 2j

    MatExt j3 = J3();
    CHECK(j3(1, 1) == Ext::one()); // fixes the middle coordinate
    CHECK(j3(1, 0).is_zero());
    CHECK(j3(0, 1).is_zero());

    // conjugation by J2 maps diag(d, gamma_1(d)) into GL(2, K)
    // J2^{-1} = (1/(2j)) [[j, -1],[j, 1]] and 1/(2j) = j/(2t)
    MatExt j2inv(2, 2);
    Ext half_j_over_t(Laurent(), L("1/2t^-1"));
    j2inv(0, 0) = half_j_over_t * Ext::j();
    j2inv(0, 1) = half_j_over_t * Ext(-Laurent(1));
    j2inv(1, 0) = half_j_over_t * Ext::j();
    j2inv(1, 1) = half_j_over_t * Ext::one();
    // sanity: J2 * J2^{-1} = 1
    MatExt prod = j2 * j2inv;
    CHECK(prod(0, 0) == Ext::one());
    CHECK(prod(1, 1) == Ext::one());
    CHECK(prod(0, 1).is_zero());
    CHECK(prod(1, 0).is_zero());

    for (Ext d : {Ext::j(), Ext(L("1+t"), L("2")), Ext(L("t^-1"), L("3+t"))}) {
        MatExt dd(2, 2);
        dd(0, 0) = d;
        dd(1, 1) = d.conj();
        MatExt conj = j2 * dd * j2inv;
        for (auto& entry : conj.a) CHECK(entry.odd.is_zero()); // lands in K
    }
}

TEST_CASE("bracket_negative") {
    CHECK(bracket_negative(L("t^-2+3+t")) == L("t^-2"));
    CHECK(bracket_negative(L("5")).is_zero());
    CHECK(bracket_negative(L("2t^-1+t^-3")) == L("2t^-1+t^-3"));
}

TEST_CASE("reduce_gl3: canonical inputs") {
    CosetForm3 f{2, 1, Laurent()};
    CHECK(reduce_gl3(coset3_matrix(f)) == f);
    CosetForm3 id{0, 0, Laurent()};
    CHECK(reduce_gl3(MatK::identity(3)) == id);
    MatK sing(3, 3);
    sing(0, 0) = Laurent(1);
    CHECK_THROWS_AS(reduce_gl3(sing), Error);
}

TEST_CASE("reduce_gl3: random coset round-trips") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> iidx(0, 3), qc(-2, 2), qd(0, 3);
    for (int it = 0; it < 120; ++it) {
        CosetForm3 f;
        f.i = iidx(rng);
        f.j = iidx(rng);
        int d = qd(rng);
        for (int e = 1; e <= d; ++e) f.q.add_to(-e, Rat(qc(rng)));
        MatK m = random_glO(rng, 3, 3) * coset3_matrix(f) * diag_monomials(rng, 3);
        CosetForm3 r = reduce_gl3(m);
        CHECK(r.i == f.i);
        CHECK(r.j == f.j);
        CHECK(same_coset_gl3(r, f));
        // determinism and idempotence up to the chosen representative
        CHECK(reduce_gl3(coset3_matrix(r)) == r);
    }
}

TEST_CASE("same_coset_gl3: basics") {
    CosetForm3 a{1, 1, L("t^-1")};
    CHECK(same_coset_gl3(a, a));
    CosetForm3 b{1, 2, L("t^-1")};
    CHECK(!same_coset_gl3(a, b)); // indices differ

    // (i,j) = (1,1): all q of degree <= 1 are in the orbit of 0
    CHECK(same_coset_gl3({1, 1, L("t^-1")}, {1, 1, Laurent()}));
    CHECK(same_coset_gl3({1, 1, L("-2t^-1")}, {1, 1, Laurent()}));
    // degree > j leaves the orbit
    CHECK(!same_coset_gl3({1, 1, L("t^-2")}, {1, 1, Laurent()}));
    CHECK(!same_coset_gl3({1, 2, L("t^-3")}, {1, 2, Laurent()}));
}

TEST_CASE("coset witness substitutes back exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> iidx(0, 2), qc(-2, 2);
    for (int it = 0; it < 200; ++it) {
        CosetForm3 a;
        a.i = iidx(rng);
        a.j = iidx(rng);
        for (int e = 1; e <= 2; ++e) a.q.add_to(-e, Rat(qc(rng)));
        // act with a known group element to produce an equivalent form
        Laurent y1(1), y2(1);
        y1.add_to(a.i, Rat(qc(rng)));
        y1.add_to(a.i + 1, Rat(qc(rng)));
        y2.add_to(std::max(a.i, a.j), Rat(qc(rng)));
        if (y1.coeff(0) == 0 || y2.coeff(0) == 0) continue; // must stay units
        CosetForm3 b = a;
        b.q = (y1 * a.q + (y2 - y1).shifted(-a.i - a.j)).negative_part();
        auto w = coset3_witness(a, b);
        REQUIRE(w.has_value());
        // the witness itself is revalidated inside coset3_witness; also check
        // the group constraints
        auto& [w1, w2] = *w;
        CHECK(w1.coeff(0) != 0);
        CHECK(w2.coeff(0) != 0);
        for (int s = 1; s < a.j; ++s) CHECK(w2.coeff(s) == 0);
        if (a.j >= 1) CHECK(w2.coeff(0) == 1);
        for (int s = 0; s < a.i; ++s) CHECK(w1.coeff(s) == w2.coeff(s));
    }
}

TEST_CASE("N_01 orbit boundary: the action fixes coefficient 1") {
    // For i = 0 the action on q = c t^{-1} is c -> y1 c + (1 - y1), an
    // affine map fixing c = 1, so t^{-1} is NOT in the orbit of 0 even
    // though deg(q) <= j. Direct matrix check: P = T2 H^{-1} T1^{-1} forces
    // residues r1 - r2 + r3 = 0 with r2 = r3, impossible for units.
    CHECK(!same_coset_gl3({0, 1, L("t^-1")}, {0, 1, Laurent()}));
    CHECK(same_coset_gl3({0, 1, L("2t^-1")}, {0, 1, Laurent()}));
    CHECK(same_coset_gl3({0, 1, L("-t^-1")}, {0, 1, Laurent()}));
    // the orbit of t^{-1} is the singleton {t^-1}
    CHECK(!same_coset_gl3({0, 1, L("t^-1")}, {0, 1, L("2t^-1")}));
    // with i >= 1 the translation part is free and degree <= j suffices
    CHECK(same_coset_gl3({1, 1, L("t^-1")}, {1, 1, Laurent()}));
}

TEST_CASE("N_ij orbit of zero: affine solver vs brute-force unit grid") {
    // positive instances get an exact witness; negatives are confirmed by a
    // coarse grid over unit coefficients
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}}) {
        for (int c2 = -2; c2 <= 2; ++c2)
            for (int c1 = -2; c1 <= 2; ++c1) {
                CosetForm3 f{i, j, Laurent()};
                f.q.add_to(-1, Rat(c1));
                f.q.add_to(-2, Rat(c2));
                CosetForm3 zero{i, j, Laurent()};
                bool solver = same_coset_gl3(f, zero);
                // brute force: scan unit pairs with small coefficients
                bool grid = false;
                int B = std::max({neg_degree(f.q), i + j, 1});
                std::vector<int> coeffs(static_cast<size_t>(2 * B), -2);
                while (true) {
                    Laurent y1, y2;
                    for (int s = 0; s < B; ++s) {
                        y1.add_to(s, Rat(coeffs[static_cast<size_t>(s)]));
                        y2.add_to(s, Rat(coeffs[static_cast<size_t>(B + s)]));
                    }
                    bool unit_ok = y1.coeff(0) != 0 && y2.coeff(0) != 0;
                    bool cong_ok = true;
                    if (j >= 1 && y2.coeff(0) != 1) cong_ok = false;
                    for (int s = 1; s < j && cong_ok; ++s)
                        if (y2.coeff(s) != 0) cong_ok = false;
                    for (int s = 0; s < i && cong_ok; ++s)
                        if (y1.coeff(s) != y2.coeff(s)) cong_ok = false;
                    if (unit_ok && cong_ok) {
                        Laurent img = (y1 * f.q + (y2 - y1).shifted(-i - j)).negative_part();
                        if (img.is_zero()) {
                            grid = true;
                            break;
                        }
                    }
                    size_t pos = 0;
                    while (pos < coeffs.size() && coeffs[pos] == 2) coeffs[pos++] = -2;
                    if (pos == coeffs.size()) break;
                    ++coeffs[pos];
                }
                if (grid) CHECK(solver);          // grid witnesses are sound
                if (!solver) CHECK(!grid);        // solver negatives have no witness
            }
    }
}
