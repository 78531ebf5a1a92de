#pragma once

#include "bdq/bdtriple.hpp"
#include "bdq/intmat.hpp"

namespace bdq {

// Structure of C(G_X, r_BD) as a diagonalizable group: torus rank plus the
// component group's invariant factors (each >= 2, divisibility order).
struct CentralizerShape {
    int torusRank = 0;
    std::vector<Int> torsion;

    bool connected() const { return torsion.empty(); }
    bool operator==(const CentralizerShape& o) const {
        return torusRank == o.torusRank && torsion == o.torsion;
    }
};

// Rows alpha - tau(alpha) in the basis (gamma_j), sorted Gamma_1 order.
IntMat relation_matrix(const AdmissibleTriple& t, const CharacterLattice& lattice);

CentralizerShape centralizer_shape(const AdmissibleTriple& t, const CharacterLattice& lattice);

bool is_connected(const AdmissibleTriple& t, const CharacterLattice& lattice);

// H^1(K, C) = Z/m_1 x ... as the torsion list itself; empty means trivial.
std::vector<Int> nontwisted_H_size(const CentralizerShape& shape);

// Upper bound m_1 * ... * m_k for the twisted cohomology cardinality.
Int twisted_H_bound(const CentralizerShape& shape);

struct ReportRow {
    AdmissibleTriple triple;
    StringDecomposition strs;
    CentralizerShape shape;
};

// Shapes for a whole triple list; OpenMP over triples, deterministic order.
std::vector<ReportRow> centralizer_report(const std::vector<AdmissibleTriple>& triples,
                                          const CharacterLattice& lattice);
std::vector<ReportRow> centralizer_report_serial(const std::vector<AdmissibleTriple>& triples,
                                                 const CharacterLattice& lattice);

// Full enumeration with per-triple shapes for E6 / E7.
std::vector<ReportRow> exceptional_report(SimpleType type, const CharacterLattice& lattice);

} // namespace bdq
