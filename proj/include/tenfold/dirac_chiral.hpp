#pragma once

#include <array>
#include <vector>

#include "tenfold/ensembles.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

// The 8x8 Majorana gamma matrices. All entries are exact (Gaussian)
// integers; the invariant checks below are exact, not tolerance-based.
struct GammaSet {
    std::array<Matrix, 4> gamma;  // real symmetric, Clifford
    Matrix gamma5;                // real symmetric involution
    Matrix q_gen;                 // U(1) generator, imaginary

    void check() const;  // throws AlgebraViolation on any exact failure
};

GammaSet gamma_matrices();

// Gauge field in the Majorana representation: for each mu,
// I_2 (x) A_mu^(-)  -  (i sigma_y) (x) (A_mu^(+)/i), a real skew matrix
// on (sigma_y slot) (x) color. a_mu must be anti-Hermitian traceless.
std::vector<Matrix> majorana_gauge(const std::vector<Matrix>& a_mu,
                                   double tol = default_tol().tol_struct);

// H = i Gamma^mu (d_mu - A_mu) on (8 (x) N_c (x) mode doublet); the
// derivative of a single plane-wave mode is k_mu [[0,-1],[1,0]].
Matrix dirac_hamiltonian(const GammaSet& g, const std::array<double, 4>& k,
                         const std::vector<Matrix>& a_mu,
                         double tol = default_tol().tol_struct);

// True iff conj(H) = -H and g5 H g5 = -H, and then the recast identity
// H = g5 conj(H) g5 holds (it is implied by the first two).
bool chirality_recast_check(const Matrix& h, const Matrix& gamma5,
                            double tol = default_tol().tol_struct);

enum class ChiralField { complex_entries, real_entries, quaternion_entries };

struct ChiralOperator {
    Matrix z;         // p x q (2p x 2q complex embedding for quaternions)
    Matrix d;         // [[0, Z], [Z^dagger, 0]]
    Eigen::Index nu;  // p - q
    ChiralField field = ChiralField::complex_entries;

    Matrix gamma5() const;  // diag(Id_p, -Id_q) in the assembled dimension
};

ChiralOperator sample_chiral(Eigen::Index p, Eigen::Index q, ChiralField field,
                             double sigma, RngStream& rng);

// Assemble D from a given Z (validation hook and test utility).
ChiralOperator assemble_chiral(const Matrix& z, ChiralField field);

struct ZeroModes {
    Eigen::Index raw = 0;         // kernel dimension in the complex embedding
    Eigen::Index quaternionic = 0;  // raw/2 for quaternion entries, else raw
};

// Counts |lambda| <= tol. tol <= 0 selects 1e-8 * spectral radius. Throws
// ToleranceAmbiguous if some |lambda| falls in (tol, 10 tol], and
// AlgebraViolation if fewer modes than the index bound are found.
ZeroModes zero_modes(const ChiralOperator& d, double tol = 0.0);

}  // namespace tenfold
