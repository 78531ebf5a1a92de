#pragma once

#include "bdq/intmat.hpp"

#include <string>
#include <vector>

namespace bdq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    static SimpleType parse(const std::string& label); // "A2", "E6", ...
    std::string str() const;
    bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const SimpleType& o) const { return !(*this == o); }
};

// Cartan matrix convention: a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
// sym holds the minimal positive integers d_i making (d_i a_ij) symmetric.
// E-series labeling: alpha_1..alpha_{n-1} an A-chain, alpha_n attached to
// alpha_3 (Appendix-style; E6 gets the A5 chain with the branch at alpha_3).
struct RootSystem {
    SimpleType type;
    IntMat cartan;
    std::vector<long> sym;

    int rank() const { return type.rank; }
    long pairing(int i, int j) const { // symmetrized (alpha_i, alpha_j), 1-based
        return sym[static_cast<size_t>(i - 1)] * cartan(i - 1, j - 1).get_si();
    }
};

RootSystem build_root_system(SimpleType type);

// Permutation of {1..n} stored 0-based: perm[i-1] = image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& f, const Perm& g); // f after g
Perm inverse_perm(const Perm& p);

// Full automorphism group of the Cartan matrix, identity first, then sorted.
std::vector<Perm> diagram_automorphisms(SimpleType type);

// True iff the Chevalley involution is inner: A1, Bn, Cn, D_{2n}, G2, F4, E7, E8.
bool chevalley_is_inner(SimpleType type);

// The diagram involution d with cd = S inner: identity in the inner case,
// otherwise the unique order-2 diagram automorphism (A_n reversal, D_{odd}
// fork swap, the E6 involution).
Perm involution_d(SimpleType type);

enum class LatticeTag { Q, P, Intermediate };

// Row i of rootCoords gives alpha_i in the chosen basis (gamma_j):
// identity for Q, the Cartan matrix for P (alpha_i = sum_j a_ij omega_j).
struct CharacterLattice {
    SimpleType type;
    LatticeTag tag;
    IntMat rootCoords;
    IntMat basis; // for Intermediate: rows = basis vectors in weight coordinates
};

CharacterLattice root_coordinates(SimpleType type, LatticeTag tag);
// Intermediate lattice from an explicit basis in weight coordinates;
// checks Q <= X <= P.
CharacterLattice root_coordinates(SimpleType type, const IntMat& basis_in_weights);

} // namespace bdq
