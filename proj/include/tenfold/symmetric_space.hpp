#pragma once

#include <variant>

#include "tenfold/ensembles.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

// Involutive automorphism of the unitary group, either U -> T U T^{-1}
// with T anti-unitary, or U -> g U g^{-1} with g a unitary involution.
struct Involution {
    enum class Kind { antiunitary_conjugation, unitary_conjugation };
    Kind kind;
    Matrix w;  // linear part of T, or g itself

    static Involution antiunitary(const AntiUnitaryOp& t) {
        return {Kind::antiunitary_conjugation, t.w};
    }
    static Involution unitary(const Matrix& g) {
        return {Kind::unitary_conjugation, g};
    }

    Matrix apply(const Matrix& u) const {
        if (kind == Kind::antiunitary_conjugation) return w * u.conjugate() * w.adjoint();
        return w * u * w.adjoint();
    }
};

// exp(-i t H) via Hermitian eigendecomposition.
Matrix time_evolution(const Matrix& h, double t,
                      double tol_struct = default_tol().tol_struct);

// k * tau(k)^{-1}
Matrix cartan_embed(const Matrix& k, const Involution& tau);

// p0 * p^{-1} * p0
Matrix geodesic_inversion(const Matrix& p0, const Matrix& p);

// U in M iff U = tau(U)^{-1} within tol
bool membership(const Matrix& u, const Involution& tau, double tol);

// p0 p^{-1} p0 with membership asserted on inputs and output
Matrix closure_under_inversion_product(const Matrix& p0, const Matrix& p,
                                       const Involution& tau,
                                       double tol = default_tol().tol_eig);

// The canonical involution realizing each class's space of good time
// evolutions as M = {U = tau(U)^{-1}}. The type-II classes (A, D, C) are
// groups rather than fixed-point sets; they are realized through the
// standard doubling trick: the evolution U is embedded as diag(U, U^-1)
// and tau is conjugation by the block swap. doubled reports whether
// embed_evolution doubles the matrix.
struct ClassInvolution {
    Involution tau;
    bool doubled;
};
ClassInvolution canonical_tau(SymmetryClass cls, Eigen::Index dim,
                              Eigen::Index p = 0, Eigen::Index q = 0);

// The matrix to test membership on: U itself, or diag(U, U^-1) for the
// doubled type-II classes.
Matrix embed_evolution(const Matrix& u, const ClassInvolution& ci);

// Real dimension of the linearized fixed-point space of tau at Id inside
// the class's evolution group (supported for DIII and CI).
Eigen::Index fixed_point_dimension(SymmetryClass cls, Eigen::Index dim,
                                   const Tolerances& tol = default_tol());

}  // namespace tenfold
