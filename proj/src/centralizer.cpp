#include "bdq/centralizer.hpp"

namespace bdq {

IntMat relation_matrix(const AdmissibleTriple& t, const CharacterLattice& lattice) {
    if (lattice.type != t.type) throw invalid("lattice type does not match triple type");
    int n = lattice.rootCoords.cols;
    IntMat m(static_cast<int>(t.g1.size()), n);
    for (size_t k = 0; k < t.g1.size(); ++k) {
        int i = t.g1[k] - 1, j = t.tau[k] - 1;
        for (int c = 0; c < n; ++c)
            m(static_cast<int>(k), c) = lattice.rootCoords(i, c) - lattice.rootCoords(j, c);
    }
    return m;
}

CentralizerShape centralizer_shape(const AdmissibleTriple& t, const CharacterLattice& lattice) {
    IntMat rel = relation_matrix(t, lattice);
    CentralizerShape s;
    if (rel.rows == 0) {
        s.torusRank = lattice.rootCoords.cols;
        return s;
    }
    std::vector<Int> factors = invariant_factors(rel);
    s.torusRank = lattice.rootCoords.cols - static_cast<int>(factors.size());
    for (auto& f : factors)
        if (f > 1) s.torsion.push_back(f);
    return s;
}

bool is_connected(const AdmissibleTriple& t, const CharacterLattice& lattice) {
    return centralizer_shape(t, lattice).connected();
}

std::vector<Int> nontwisted_H_size(const CentralizerShape& shape) { return shape.torsion; }

Int twisted_H_bound(const CentralizerShape& shape) {
    Int b(1);
    for (auto& m : shape.torsion) b *= m;
    return b;
}

std::vector<ReportRow> centralizer_report(const std::vector<AdmissibleTriple>& triples,
                                          const CharacterLattice& lattice) {
    std::vector<ReportRow> rows(triples.size());
#pragma omp parallel for schedule(dynamic, 32)
    for (long long i = 0; i < static_cast<long long>(triples.size()); ++i) {
        auto& t = triples[static_cast<size_t>(i)];
        rows[static_cast<size_t>(i)] = ReportRow{t, strings(t), centralizer_shape(t, lattice)};
    }
    return rows;
}

std::vector<ReportRow> centralizer_report_serial(const std::vector<AdmissibleTriple>& triples,
                                                 const CharacterLattice& lattice) {
    std::vector<ReportRow> rows;
    rows.reserve(triples.size());
    for (auto& t : triples) rows.push_back(ReportRow{t, strings(t), centralizer_shape(t, lattice)});
    return rows;
}

std::vector<ReportRow> exceptional_report(SimpleType type, const CharacterLattice& lattice) {
    if (!(type.family == Family::E && (type.rank == 6 || type.rank == 7)))
        throw invalid("exceptional report is defined for E6 and E7");
    auto triples = enumerate_triples(type, /*include_empty=*/false);
    return centralizer_report(triples, lattice);
}

} // namespace bdq
