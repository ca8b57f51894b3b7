#pragma once

#include "tenfold/ensembles.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

// Nambu space C^{2N} with the creation-side coordinates first: the field
// psi = u + v has u (components along c^dagger) in the first N slots and
// v in the last N.
struct NambuSpace {
    Eigen::Index n_orbitals;
    AntiUnitaryOp c_op;

    explicit NambuSpace(Eigen::Index n);
    Eigen::Index dim() const { return 2 * n_orbitals; }
};

// Coefficient data of a quadratic Hamiltonian: A Hermitian, B skew.
struct QuadraticHamiltonian {
    Matrix a;
    Matrix b;

    void validate(double tol = default_tol().tol_struct) const;  // throws StructureViolation
};

// The canonical symmetric bilinear form {psi1, psi2} (the CAR pairing).
Complex symmetric_form(const Vector& psi1, const Vector& psi2);

// Particle-hole conjugation C(u + v) = conj(v) + conj(u); C^2 = +Id and
// <C psi1, psi2> = {psi1, psi2}.
AntiUnitaryOp particle_hole_op(Eigen::Index n_orbitals);

// The 2N x 2N Bogoliubov-de Gennes matrix [[A, B], [-conj(B), -conj(A)]].
Hamiltonian assemble_bdg(const QuadraticHamiltonian& h,
                         double tol = default_tol().tol_struct);

// Unitary W built from (c + c^dagger) and i(c - c^dagger) combinations;
// W H W^dagger is imaginary skew for every BdG H.
Matrix majorana_basis(Eigen::Index n_orbitals);

// Spin factorization V = W (x) C^2 for spin-1/2 doublets.
struct SpinFactorization {
    Eigen::Index w_dim;      // 2 * n_half
    Matrix skew_form;        // [.,.] on W
    Matrix embedding;        // unitary map from W (x) C^2 to V (column-major
                             // tensor index: spin fast, W slow)
};
SpinFactorization spin_factorize(Eigen::Index n_half);

// Q = iCT eigenspace split (requires C^2 = +1, T^2 = -1, CT = TC).
struct QSplit {
    Matrix q;
    Matrix v_plus;   // orthonormal basis of the +1 eigenspace
    Matrix v_minus;  // orthonormal basis of the -1 eigenspace
};
QSplit q_split(const AntiUnitaryOp& c, const AntiUnitaryOp& t,
               double tol = default_tol().tol_struct);

}  // namespace tenfold
