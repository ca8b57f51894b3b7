#pragma once

#include <utility>
#include <vector>

#include "tenfold/rng.hpp"
#include "tenfold/types.hpp"

namespace tenfold {

struct EigResult {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // columns, unitary
};

// Eigendecomposition of a Hermitian matrix. Throws NotHermitian if the
// input fails the structural check, NoConvergence on solver failure.
EigResult hermitian_eig(const Matrix& h, double tol_struct = default_tol().tol_struct);

// Anti-unitary operator psi -> w * conj(psi). Only the linear part is
// stored; conjugation is implicit.
struct AntiUnitaryOp {
    Matrix w;

    explicit AntiUnitaryOp(Matrix w_) : w(std::move(w_)) {}

    Eigen::Index dim() const { return w.rows(); }

    Vector apply(const Vector& psi) const;

    // Linear part of the composition (this after other):
    // w1*conj(w2*conj(psi)) = (w1*conj(w2)) psi, a unitary matrix.
    Matrix compose_linear(const AntiUnitaryOp& other) const {
        return w * other.w.conjugate();
    }

    // Conjugation of a linear operator: T A T^{-1} = w conj(A) w^dagger.
    Matrix conjugate_operator(const Matrix& a) const {
        return w * a.conjugate() * w.adjoint();
    }
};

// The scalar sign in w*conj(w) = +-Id. Throws NotInvolutive when
// w*conj(w) is not scalar within tolerance.
int antiunitary_square_sign(const AntiUnitaryOp& op,
                            double tol = default_tol().tol_struct);

// Numeric rank with the singular-value gap rule: the ratio between the
// last kept and first dropped singular value must exceed tol.rank_gap,
// otherwise RankAmbiguous is thrown.
Eigen::Index numeric_rank(const RealVector& singular_values, Eigen::Index rows,
                          Eigen::Index cols, const Tolerances& tol = default_tol());

// Orthonormal basis of the (right) nullspace of a complex matrix.
Matrix complex_nullspace(const Matrix& a, const Tolerances& tol = default_tol());

// Nullity of a real matrix (rank-gap checked).
Eigen::Index real_nullity(const RealMatrix& a, const Tolerances& tol = default_tol());

// Orthonormal nullspace basis of a real matrix.
RealMatrix real_nullspace(const RealMatrix& a, const Tolerances& tol = default_tol());

// Random unitary (Haar via QR of a Ginibre matrix).
Matrix random_unitary(RngStream& rng, Eigen::Index n);

// Random Hermitian with independent Gaussian entries (test utility).
Matrix random_hermitian(RngStream& rng, Eigen::Index n, double sigma = 1.0);

}  // namespace tenfold
