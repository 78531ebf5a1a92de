#include "bdq/rootsys.hpp"

#include "bdq/qlinalg.hpp"

#include <algorithm>

namespace bdq {

SimpleType SimpleType::parse(const std::string& label) {
    if (label.size() < 2) throw invalid("bad type label: " + label);
    char f = label[0];
    if (f < 'A' || f > 'G') throw invalid("bad type family: " + label);
    int rank;
    try {
        size_t pos = 0;
        rank = std::stoi(label.substr(1), &pos);
        if (pos + 1 != label.size()) throw invalid("bad type label: " + label);
    } catch (const std::exception&) {
        throw invalid("bad type label: " + label);
    }
    SimpleType t{static_cast<Family>(f), rank};
    build_root_system(t); // validates
    return t;
}

std::string SimpleType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootSystem build_root_system(SimpleType type) {
    int n = type.rank;
    auto chain = [&](IntMat& c, int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
    };
    IntMat c(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    std::vector<long> d(static_cast<size_t>(n), 1);

    switch (type.family) {
    case Family::A:
        if (n < 1) throw invalid("rank must be >= 1 for A");
        chain(c, n);
        break;
    case Family::B:
        if (n < 2) throw invalid("rank must be >= 2 for B");
        chain(c, n);
        c(n - 1, n - 2) = -2; // alpha_n short
        for (int i = 0; i < n - 1; ++i) d[static_cast<size_t>(i)] = 2;
        break;
    case Family::C:
        if (n < 2) throw invalid("rank must be >= 2 for C");
        chain(c, n);
        c(n - 2, n - 1) = -2; // alpha_n long
        d[static_cast<size_t>(n - 1)] = 2;
        break;
    case Family::D:
        if (n < 3) throw invalid("rank must be >= 3 for D");
        chain(c, n - 1);
        c(n - 3, n - 1) = -1;
        c(n - 1, n - 3) = -1;
        break;
    case Family::E:
        if (n < 6 || n > 8) throw invalid("rank must be 6, 7 or 8 for E");
        chain(c, n - 1);
        c(2, n - 1) = -1; // branch node attached to alpha_3
        c(n - 1, 2) = -1;
        break;
    case Family::F:
        if (n != 4) throw invalid("rank must be 4 for F");
        chain(c, 4);
        c(2, 1) = -2; // alpha_3, alpha_4 short
        d[0] = d[1] = 2;
        break;
    case Family::G:
        if (n != 2) throw invalid("rank must be 2 for G");
        c(0, 1) = -3;
        c(1, 0) = -1;
        d[1] = 3;
        break;
    }
    return RootSystem{type, std::move(c), std::move(d)};
}

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    return p;
}

Perm compose(const Perm& f, const Perm& g) {
    Perm p(g.size());
    for (size_t i = 0; i < g.size(); ++i) p[i] = f[static_cast<size_t>(g[i] - 1)];
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
    return q;
}

namespace {

// Backtracking over Cartan-matrix-preserving permutations.
void search_autos(const IntMat& c, Perm& partial, std::vector<bool>& used,
                  std::vector<Perm>& out) {
    int n = c.rows;
    int i = static_cast<int>(partial.size());
    if (i == n) {
        out.push_back(partial);
        return;
    }
    for (int img = 1; img <= n; ++img) {
        if (used[static_cast<size_t>(img - 1)]) continue;
        bool ok = c(img - 1, img - 1) == c(i, i);
        for (int j = 0; ok && j < i; ++j) {
            int pj = partial[static_cast<size_t>(j)];
            if (c(i, j) != c(img - 1, pj - 1) || c(j, i) != c(pj - 1, img - 1)) ok = false;
        }
        if (!ok) continue;
        partial.push_back(img);
        used[static_cast<size_t>(img - 1)] = true;
        search_autos(c, partial, used, out);
        used[static_cast<size_t>(img - 1)] = false;
        partial.pop_back();
    }
}

} // namespace

std::vector<Perm> diagram_automorphisms(SimpleType type) {
    RootSystem rs = build_root_system(type);
    std::vector<Perm> out;
    Perm partial;
    std::vector<bool> used(static_cast<size_t>(type.rank), false);
    search_autos(rs.cartan, partial, used, out);
    std::sort(out.begin(), out.end());
    auto id = identity_perm(type.rank);
    auto it = std::find(out.begin(), out.end(), id);
    std::rotate(out.begin(), it, it + 1);
    return out;
}

bool chevalley_is_inner(SimpleType type) {
    switch (type.family) {
    case Family::A:
        return type.rank == 1;
    case Family::B:
    case Family::C:
    case Family::G:
    case Family::F:
        return true;
    case Family::D:
        return type.rank % 2 == 0;
    case Family::E:
        return type.rank != 6;
    }
    return false;
}

Perm involution_d(SimpleType type) {
    int n = type.rank;
    Perm p = identity_perm(n);
    if (chevalley_is_inner(type)) return p;
    switch (type.family) {
    case Family::A:
        for (int i = 1; i <= n; ++i) p[static_cast<size_t>(i - 1)] = n + 1 - i;
        break;
    case Family::D:
        std::swap(p[static_cast<size_t>(n - 2)], p[static_cast<size_t>(n - 1)]);
        break;
    case Family::E: // E6
        p[0] = 5;
        p[4] = 1;
        p[1] = 4;
        p[3] = 2;
        break;
    default:
        throw Error(Error::Kind::Internal, "involution_d: unexpected type");
    }
    return p;
}

CharacterLattice root_coordinates(SimpleType type, LatticeTag tag) {
    RootSystem rs = build_root_system(type);
    int n = type.rank;
    CharacterLattice x;
    x.type = type;
    x.tag = tag;
    switch (tag) {
    case LatticeTag::Q:
        x.rootCoords = IntMat::identity(n);
        break;
    case LatticeTag::P:
        x.rootCoords = rs.cartan;
        break;
    case LatticeTag::Intermediate:
        throw invalid("intermediate lattice needs an explicit basis");
    }
    return x;
}

CharacterLattice root_coordinates(SimpleType type, const IntMat& basis_in_weights) {
    RootSystem rs = build_root_system(type);
    int n = type.rank;
    if (basis_in_weights.rows != n || basis_in_weights.cols != n)
        throw invalid("lattice basis must be rank x rank");
    QMat b(n, n), a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            b(r, c) = Rat(basis_in_weights(r, c));
            a(r, c) = Rat(rs.cartan(r, c));
        }
    QMat binv;
    try {
        binv = qmat_inverse(b);
    } catch (const Error&) {
        throw invalid("lattice basis is singular");
    }
    QMat coords = a * binv; // alpha_i in the gamma basis
    if (!qmat_is_integral(coords)) throw invalid("lattice does not contain the root lattice Q");
    CharacterLattice x;
    x.type = type;
    x.tag = LatticeTag::Intermediate;
    x.basis = basis_in_weights;
    x.rootCoords = IntMat(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x.rootCoords(r, c) = coords(r, c).get_num();
    return x;
}

} // namespace bdq
