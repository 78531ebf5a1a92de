#include "bdq/bdtriple.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bdq {

int AdmissibleTriple::tau_of(int root) const {
    for (size_t k = 0; k < g1.size(); ++k)
        if (g1[k] == root) return tau[k];
    return 0;
}

int AdmissibleTriple::tau_inv_of(int root) const {
    for (size_t k = 0; k < tau.size(); ++k)
        if (tau[k] == root) return g1[k];
    return 0;
}

AdmissibleTriple AdmissibleTriple::mirror() const {
    AdmissibleTriple m;
    m.type = type;
    m.g1 = g2;
    m.g2 = g1;
    m.tau.resize(g1.size());
    for (size_t k = 0; k < m.g1.size(); ++k) m.tau[k] = tau_inv_of(m.g1[k]);
    return m;
}

bool AdmissibleTriple::operator<(const AdmissibleTriple& o) const {
    if (g1.size() != o.g1.size()) return g1.size() < o.g1.size();
    if (g1 != o.g1) return g1 < o.g1;
    if (g2 != o.g2) return g2 < o.g2;
    return tau < o.tau;
}

bool is_admissible(const RootSystem& rs, const std::vector<int>& g1, const std::vector<int>& g2,
                   const std::vector<int>& tau) {
    int n = rs.rank();
    if (g1.size() != g2.size() || g1.size() != tau.size()) return false;
    auto in_range = [&](int i) { return i >= 1 && i <= n; };
    for (int i : g1)
        if (!in_range(i)) throw invalid("root index out of range");
    for (int i : g2)
        if (!in_range(i)) throw invalid("root index out of range");
    for (int i : tau)
        if (!in_range(i)) throw invalid("root index out of range");
    std::set<int> s1(g1.begin(), g1.end()), s2(g2.begin(), g2.end()), simg(tau.begin(), tau.end());
    if (s1.size() != g1.size() || s2.size() != g2.size()) return false;
    if (simg != s2) return false; // bijective onto Gamma_2
    // Isometry for the symmetrized pairing.
    for (size_t x = 0; x < g1.size(); ++x)
        for (size_t y = 0; y < g1.size(); ++y)
            if (rs.pairing(g1[x], g1[y]) != rs.pairing(tau[x], tau[y])) return false;
    // Nilpotency: every tau-orbit leaves Gamma_1.
    auto tau_of = [&](int r) -> int {
        for (size_t k = 0; k < g1.size(); ++k)
            if (g1[k] == r) return tau[k];
        return 0;
    };
    for (int a : g1) {
        int cur = a;
        size_t steps = 0;
        while (s1.count(cur)) {
            cur = tau_of(cur);
            if (++steps > g1.size()) return false; // cycled inside Gamma_1
        }
    }
    return true;
}

bool is_admissible(const AdmissibleTriple& t) {
    RootSystem rs = build_root_system(t.type);
    return is_admissible(rs, t.g1, t.g2, t.tau);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic
    std::vector<int> idx(static_cast<size_t>(k));
    if (k == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// All admissible triples for one (Gamma_1, Gamma_2) pair, tau graphs in
// lexicographic order.
void triples_for_pair(const RootSystem& rs, const std::vector<int>& g1, const std::vector<int>& g2,
                      std::vector<AdmissibleTriple>& out) {
    std::vector<int> tau = g2; // sorted; next_permutation yields lex order
    do {
        if (is_admissible(rs, g1, g2, tau)) {
            AdmissibleTriple t;
            t.type = rs.type;
            t.g1 = g1;
            t.g2 = g2;
            t.tau = tau;
            out.push_back(std::move(t));
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> subset_pairs(int n, bool include_empty) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (int k = include_empty ? 0 : 1; k <= n; ++k) {
        auto subs = subsets_of_size(n, k);
        for (auto& a : subs)
            for (auto& b : subs) pairs.emplace_back(a, b);
    }
    return pairs;
}

void check_guard(SimpleType type, int rank_guard) {
    if (type.rank > rank_guard)
        throw guard_exceeded("rank " + std::to_string(type.rank) + " exceeds enumeration guard " +
                             std::to_string(rank_guard));
}

} // namespace

std::vector<AdmissibleTriple> enumerate_triples_serial(SimpleType type, bool include_empty,
                                                       int rank_guard) {
    check_guard(type, rank_guard);
    RootSystem rs = build_root_system(type);
    std::vector<AdmissibleTriple> out;
    for (auto& [g1, g2] : subset_pairs(type.rank, include_empty)) triples_for_pair(rs, g1, g2, out);
    return out;
}

std::vector<AdmissibleTriple> enumerate_triples(SimpleType type, bool include_empty,
                                                int rank_guard) {
    check_guard(type, rank_guard);
    RootSystem rs = build_root_system(type);
    auto pairs = subset_pairs(type.rank, include_empty);
    std::vector<std::vector<AdmissibleTriple>> cell(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
        triples_for_pair(rs, pairs[static_cast<size_t>(p)].first, pairs[static_cast<size_t>(p)].second,
                         cell[static_cast<size_t>(p)]);
    }
    std::vector<AdmissibleTriple> out;
    for (auto& c : cell)
        for (auto& t : c) out.push_back(std::move(t));
    return out;
}

StringDecomposition strings(const AdmissibleTriple& t) {
    int n = build_root_system(t.type).rank();
    std::set<int> in_g2(t.g2.begin(), t.g2.end());
    std::set<int> in_g1(t.g1.begin(), t.g1.end());
    StringDecomposition out;
    for (int head = 1; head <= n; ++head) {
        if (in_g2.count(head)) continue; // not a chain head
        std::vector<int> chain{head};
        int cur = head;
        while (in_g1.count(cur)) {
            cur = t.tau_of(cur);
            chain.push_back(cur);
        }
        out.push_back(std::move(chain));
    }
    return out; // heads scanned in order, so sorted by first element
}

AdmissibleTriple out_action(const Perm& d, const AdmissibleTriple& t) {
    AdmissibleTriple r;
    r.type = t.type;
    std::vector<std::pair<int, int>> arrows;
    for (size_t k = 0; k < t.g1.size(); ++k)
        arrows.emplace_back(d[static_cast<size_t>(t.g1[k] - 1)], d[static_cast<size_t>(t.tau[k] - 1)]);
    std::sort(arrows.begin(), arrows.end());
    for (auto& [a, b] : arrows) {
        r.g1.push_back(a);
        r.tau.push_back(b);
    }
    r.g2 = r.tau;
    std::sort(r.g2.begin(), r.g2.end());
    return r;
}

std::vector<std::vector<AdmissibleTriple>> orbits_under_out(
    const std::vector<AdmissibleTriple>& triples) {
    if (triples.empty()) return {};
    auto autos = diagram_automorphisms(triples.front().type);
    std::map<AdmissibleTriple, int> index;
    for (size_t i = 0; i < triples.size(); ++i) index.emplace(triples[i], static_cast<int>(i));
    std::vector<bool> seen(triples.size(), false);
    std::vector<std::vector<AdmissibleTriple>> orbits;
    for (size_t i = 0; i < triples.size(); ++i) {
        if (seen[i]) continue;
        std::set<AdmissibleTriple> orbit;
        for (auto& d : autos) {
            AdmissibleTriple img = out_action(d, triples[i]);
            auto it = index.find(img);
            if (it == index.end())
                throw Error(Error::Kind::Internal, "Out-action image missing from triple list");
            seen[static_cast<size_t>(it->second)] = true;
            orbit.insert(std::move(img));
        }
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

std::vector<AdmissibleTriple> collapse_mirrors(const std::vector<AdmissibleTriple>& triples) {
    std::vector<AdmissibleTriple> out;
    for (auto& t : triples) {
        AdmissibleTriple m = t.mirror();
        if (!(m < t)) out.push_back(t);
    }
    return out;
}

} // namespace bdq
