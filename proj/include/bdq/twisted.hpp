#pragma once

#include "bdq/bdtriple.hpp"
#include "bdq/qlinalg.hpp"

#include <optional>

namespace bdq {

// Matrix of Omega_0 in the coroot basis: D * A^{-1} with A the Cartan matrix
// and D = diag(d_i). For type A this is the trace-form Cartan Casimir.
QMat omega0_matrix(const RootSystem& rs);

// Continuous parameter r_0 = sum c_kl h_k (x) h_l; c + c^T = Omega_0 matrix.
struct ContinuousParameter {
    QMat c;
};

// Twisted parameter r_0 = u + j v over L; u + u^T = Omega_0 matrix, v skew.
struct TwistedParameter {
    QMat u, v;
};

struct TwistCheck {
    bool discreteOk = false;
    int continuousDim = -1;
    std::optional<TwistedParameter> witness;
};

// Conditions (1)-(2): inner types need an empty triple; outer types need
// Gamma_2 = d(Gamma_1) and tau = d tau^{-1} d^{-1}.
bool discrete_twistable(const AdmissibleTriple& t);

// Affine solution space of { r_0 : r_0 + r_0^{21} = Omega_0,
// (tau(alpha) (x) 1 + 1 (x) alpha)(r_0) = 0 for alpha in Gamma_1 }.
struct ContinuousSpace {
    int dim = -1;
    std::optional<ContinuousParameter> witness;
};
ContinuousSpace continuous_space_nontwisted(const AdmissibleTriple& t);

// Conditions (3)-(4) on top of the Gamma_1 constraints, solved over the
// j-decomposition (u, v); requires discrete_twistable.
TwistCheck continuous_space_twisted(const AdmissibleTriple& t);

// D_m (m odd): the discrete-twistable families {alpha_{m-1}} -> {alpha_m}
// and {alpha_{m-1}, alpha_k} -> {alpha_k, alpha_m}, with mirrors, in
// enumeration order.
std::vector<AdmissibleTriple> d_odd_twisted_families(int m);

// The 40 E6 triples passing the discrete filter, in enumeration order.
std::vector<AdmissibleTriple> e6_twisted_list();

// Exact residual check of the Gamma_1 constraints for a parameter matrix.
bool satisfies_gamma1_constraints(const AdmissibleTriple& t, const QMat& c);

} // namespace bdq
