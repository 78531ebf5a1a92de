#pragma once

#include "bdq/rootsys.hpp"

#include <vector>

namespace bdq {

// Discrete Belavin-Drinfeld parameter (Gamma_1, Gamma_2, tau).
// Root indices are 1-based; g1 is sorted and tau[k] is the image of g1[k].
struct AdmissibleTriple {
    SimpleType type;
    std::vector<int> g1;
    std::vector<int> g2; // sorted copy of the image set
    std::vector<int> tau;

    bool empty() const { return g1.empty(); }
    int tau_of(int root) const; // 0 if root not in g1
    int tau_inv_of(int root) const;

    AdmissibleTriple mirror() const; // (Gamma_2, Gamma_1, tau^{-1})

    bool operator==(const AdmissibleTriple& o) const {
        return type == o.type && g1 == o.g1 && tau == o.tau;
    }
    // Enumeration order: |Gamma_1|, then Gamma_1, Gamma_2, then the tau graph.
    bool operator<(const AdmissibleTriple& o) const;
};

bool is_admissible(const RootSystem& rs, const std::vector<int>& g1, const std::vector<int>& g2,
                   const std::vector<int>& tau);
bool is_admissible(const AdmissibleTriple& t);

inline constexpr int kDefaultRankGuard = 8;

// All admissible triples in the canonical order; (Gamma_1,Gamma_2,tau) and
// its mirror are distinct entries. OpenMP-parallel over subset pairs with a
// deterministic merge.
std::vector<AdmissibleTriple> enumerate_triples(SimpleType type, bool include_empty,
                                                int rank_guard = kDefaultRankGuard);
// Serial reference implementation (kept for testing and benchmarking).
std::vector<AdmissibleTriple> enumerate_triples_serial(SimpleType type, bool include_empty,
                                                       int rank_guard = kDefaultRankGuard);

// Maximal tau-chains covering all simple roots, sorted by first element.
using StringDecomposition = std::vector<std::vector<int>>;
StringDecomposition strings(const AdmissibleTriple& t);

AdmissibleTriple out_action(const Perm& d, const AdmissibleTriple& t);

// Partition into Out(g)-orbits; each orbit is sorted, orbits ordered by
// their minimal element.
std::vector<std::vector<AdmissibleTriple>> orbits_under_out(
    const std::vector<AdmissibleTriple>& triples);

// Collapse mirror pairs: keeps min(t, mirror(t)) of each pair.
std::vector<AdmissibleTriple> collapse_mirrors(const std::vector<AdmissibleTriple>& triples);

} // namespace bdq
