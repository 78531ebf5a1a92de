#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdq/twisted.hpp"

#include <algorithm>
#include <set>

using namespace bdq;

namespace {

AdmissibleTriple make(SimpleType type, std::vector<int> g1, std::vector<int> tau) {
    AdmissibleTriple t;
    t.type = type;
    t.g1 = std::move(g1);
    t.tau = std::move(tau);
    t.g2 = t.tau;
    std::sort(t.g2.begin(), t.g2.end());
    return t;
}

bool check_twisted_conditions(const AdmissibleTriple& t, const TwistedParameter& w) {
    RootSystem rs = build_root_system(t.type);
    int n = rs.rank();
    QMat om = omega0_matrix(rs);
    if (!(w.u + w.u.transposed() == om)) return false;
    QMat zero(n, n);
    if (!(w.v + w.v.transposed() == zero)) return false;
    Perm d = involution_d(t.type);
    QMat md(n, n);
    for (int k = 0; k < n; ++k) md(d[static_cast<size_t>(k)] - 1, k) = 1;
    if (!(w.u == md * w.u.transposed() * md.transposed())) return false;
    QMat mv = md * w.v.transposed() * md.transposed();
    for (auto& x : mv.a) x = -x;
    if (!(w.v == mv)) return false;
    return satisfies_gamma1_constraints(t, w.u) && satisfies_gamma1_constraints(t, w.v);
}

} // namespace

TEST_CASE("omega0 matrix: sl(2) and sl(3) normalization") {
    QMat om2 = omega0_matrix(build_root_system({Family::A, 1}));
    CHECK(om2(0, 0) == Rat(1, 2));

    QMat om3 = omega0_matrix(build_root_system({Family::A, 2}));
    CHECK(om3(0, 0) == Rat(2, 3));
    CHECK(om3(0, 1) == Rat(1, 3));
    CHECK(om3(1, 1) == Rat(2, 3));
}

TEST_CASE("discrete twistability: spec examples") {
    SimpleType e6{Family::E, 6};
    CHECK(discrete_twistable(make(e6, {1}, {5})));
    CHECK(!discrete_twistable(make(e6, {1}, {2})));

    // inner type: every nonempty triple fails, empty passes
    SimpleType e7{Family::E, 7};
    auto e7_triples = enumerate_triples(e7, true);
    for (auto& t : e7_triples) {
        if (t.empty())
            CHECK(discrete_twistable(t));
        else
            CHECK(!discrete_twistable(t));
        if (t.g1.size() > 2) break; // sample is enough here; the full run is in acceptance
    }
}

TEST_CASE("discrete twistability is mirror invariant") {
    auto list = e6_twisted_list();
    for (auto& t : list) CHECK(discrete_twistable(t.mirror()));
    auto all = enumerate_triples({Family::E, 6}, false);
    for (size_t k = 0; k < all.size(); k += 11)
        CHECK(discrete_twistable(all[k]) == discrete_twistable(all[k].mirror()));
}

TEST_CASE("nontwisted continuous space: dimensions") {
    auto a1 = make({Family::A, 1}, {}, {});
    auto s1 = continuous_space_nontwisted(a1);
    CHECK(s1.dim == 0);
    REQUIRE(s1.witness);
    CHECK(s1.witness->c(0, 0) == Rat(1, 4)); // unique r0 = Omega_0 / 2

    auto a2e = make({Family::A, 2}, {}, {});
    CHECK(continuous_space_nontwisted(a2e).dim == 1);

    auto cg = make({Family::A, 2}, {1}, {2});
    auto scg = continuous_space_nontwisted(cg);
    CHECK(scg.dim == 0);
    REQUIRE(scg.witness);
    // the unique Cremmer-Gervais continuous datum
    CHECK(scg.witness->c(0, 0) == Rat(1, 3));
    CHECK(scg.witness->c(0, 1) == Rat(1, 3));
    CHECK(scg.witness->c(1, 0) == Rat(0));
    CHECK(scg.witness->c(1, 1) == Rat(1, 3));
    CHECK(satisfies_gamma1_constraints(cg, scg.witness->c));
}

TEST_CASE("nontwisted witnesses satisfy all constraints exactly") {
    for (SimpleType type : {SimpleType{Family::A, 3}, SimpleType{Family::B, 3}, SimpleType{Family::E, 6}}) {
        RootSystem rs = build_root_system(type);
        QMat om = omega0_matrix(rs);
        auto all = enumerate_triples(type, true);
        for (size_t k = 0; k < all.size(); k += 13) {
            auto s = continuous_space_nontwisted(all[k]);
            REQUIRE(s.dim >= 0);
            CHECK(s.witness->c + s.witness->c.transposed() == om);
            CHECK(satisfies_gamma1_constraints(all[k], s.witness->c));
        }
    }
}

TEST_CASE("twisted continuous space") {
    auto a1 = make({Family::A, 1}, {}, {});
    TwistCheck c1 = continuous_space_twisted(a1);
    CHECK(c1.discreteOk);
    CHECK(c1.continuousDim == 0);
    REQUIRE(c1.witness);
    CHECK(c1.witness->u(0, 0) == Rat(1, 4));
    CHECK(c1.witness->v(0, 0) == Rat(0));

    auto e6 = make({Family::E, 6}, {1}, {5});
    TwistCheck c6 = continuous_space_twisted(e6);
    CHECK(c6.discreteOk);
    CHECK(c6.continuousDim >= 0);
    REQUIRE(c6.witness);
    CHECK(check_twisted_conditions(e6, *c6.witness));

    auto bad = make({Family::E, 6}, {1}, {2});
    CHECK_THROWS_AS(continuous_space_twisted(bad), Error);
}

TEST_CASE("Drinfeld-Jimbo twist exists for inner types") {
    for (SimpleType type : {SimpleType{Family::A, 1}, SimpleType{Family::B, 2}, SimpleType{Family::C, 3},
                            SimpleType{Family::D, 4}, SimpleType{Family::G, 2}, SimpleType{Family::E, 7}}) {
        auto t = make(type, {}, {});
        TwistCheck c = continuous_space_twisted(t);
        CHECK(c.discreteOk);
        CHECK(c.continuousDim >= 0);
    }
}

TEST_CASE("D5 twisted families") {
    auto fam = d_odd_twisted_families(5);
    CHECK(fam.size() == 8); // 2 * (1 + 3)
    for (auto& t : fam) {
        CHECK(is_admissible(t));
        CHECK(discrete_twistable(t));
        // the set of continuous parameters is nonempty for these families
        TwistCheck c = continuous_space_twisted(t);
        CHECK(c.continuousDim >= 0);
        REQUIRE(c.witness);
        CHECK(check_twisted_conditions(t, *c.witness));
    }
    // the generic filter agrees (also an acceptance criterion)
    std::vector<AdmissibleTriple> filtered;
    for (auto& t : enumerate_triples({Family::D, 5}, false))
        if (discrete_twistable(t)) filtered.push_back(t);
    CHECK(filtered == fam);

    CHECK_THROWS_AS(d_odd_twisted_families(4), Error);
}

TEST_CASE("D7 twisted families match the generic filter") {
    auto fam = d_odd_twisted_families(7);
    CHECK(fam.size() == 12);
    std::vector<AdmissibleTriple> filtered;
    for (auto& t : enumerate_triples({Family::D, 7}, false))
        if (discrete_twistable(t)) filtered.push_back(t);
    CHECK(filtered == fam);
}

TEST_CASE("E6 twisted list: 40 triples, all with continuous parameters") {
    auto list = e6_twisted_list();
    CHECK(list.size() == 40);
    std::set<AdmissibleTriple> set(list.begin(), list.end());
    CHECK(set.count(make({Family::E, 6}, {2}, {4})) == 1);
    CHECK(set.count(make({Family::E, 6}, {1}, {2})) == 0);
    // conditions (3)-(4) are solvable for every member of the (1)-(2) filter,
    // so the two filters coincide on E6
    for (auto& t : list) {
        TwistCheck c = continuous_space_twisted(t);
        CHECK(c.continuousDim >= 0);
        REQUIRE(c.witness);
        CHECK(check_twisted_conditions(t, *c.witness));
    }
}
