#pragma once

#include <optional>
#include <vector>

#include "tenfold/classes.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

// Symmetry input: generators of a finite unitary group, optional
// time-reversal and particle-hole operators, optional chirality, and the
// Nambu flag that switches the classification route.
struct SymmetryData {
    Eigen::Index dim = 0;
    std::vector<Matrix> g0_generators;
    std::optional<AntiUnitaryOp> t_op;
    std::optional<AntiUnitaryOp> c_op;
    std::optional<Matrix> chirality;
    bool nambu = false;
};

struct IsotypicBlock {
    Matrix projection;        // Hermitian idempotent onto the block
    Matrix basis;             // orthonormal columns spanning the block
    Eigen::Index block_dim = 0;
    Eigen::Index irrep_dim = 0;
    Eigen::Index multiplicity = 0;
    bool t_invariant = false;
    SymmetryClass block_class = SymmetryClass::A;
    std::optional<int> epsilon;
};

inline constexpr Eigen::Index max_group_order = 1024;

// All distinct elements generated by the given unitaries, closed under
// product and inverse. Deduplication by matrix distance < tol_group.
std::vector<Matrix> group_closure(const std::vector<Matrix>& generators,
                                  const Tolerances& tol = default_tol(),
                                  Eigen::Index max_order = max_group_order);

// Complex dimension of {X : Xg = gX for all g}.
Eigen::Index commutant_dimension(const std::vector<Matrix>& group,
                                 const Tolerances& tol = default_tol());

// Orthonormal (as vectors) basis of the commutant algebra.
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& group,
                                    const Tolerances& tol = default_tol());

// Isotypic decomposition by diagonalizing a generic Hermitian element of
// the commutant's center. Blocks come back with projection, dimensions
// and T-invariance filled in; block_class/epsilon are left for
// dyson_block_class.
std::vector<IsotypicBlock> isotypic_decompose(const SymmetryData& data,
                                              RngStream rng = RngStream(20240817),
                                              const Tolerances& tol = default_tol());

struct IntertwinerResult {
    Matrix s;     // empty when fs_sign == 0
    int fs_sign;  // +1, -1, or 0 (not self-conjugate)
};

// The unitary s with conj(g) = s^{-1} g s on one irreducible copy inside
// the block, and the sign in s*conj(s) = +-Id (the Frobenius-Schur type).
IntertwinerResult conjugation_intertwiner(const IsotypicBlock& block,
                                          const std::vector<Matrix>& group,
                                          RngStream rng = RngStream(20240818),
                                          const Tolerances& tol = default_tol());

struct BlockClassResult {
    SymmetryClass cls;  // A, AI, or AII
    std::optional<int> epsilon;
    Eigen::Index dim_h = 0;  // real dimension of the invariant Hermitian space
};

// The Dyson dichotomy for one isotypic block, decided by counting the
// real dimension of {H Hermitian on the block : [H,g] = 0, T H T^{-1} = H}.
// epsilon is filled when the T-automorphism is inner (R found in the
// group image) and is cross-checked against the dimension count.
BlockClassResult dyson_block_class(const IsotypicBlock& block,
                                   const SymmetryData& data,
                                   const std::vector<Matrix>& group,
                                   RngStream rng = RngStream(20240819),
                                   const Tolerances& tol = default_tol());

// The full ten-row signature table. 0 means "absent".
SymmetryClass classify_by_involutions(int t_square, int c_square,
                                      bool has_chirality);

struct BlockReport {
    Eigen::Index block_dim;
    Eigen::Index irrep_dim;
    Eigen::Index multiplicity;
    SymmetryClass cls;
    std::optional<int> epsilon;
};

struct ClassifyReport {
    std::vector<BlockReport> blocks;
    bool nambu_route = false;
};

ClassifyReport classify(const SymmetryData& data,
                        RngStream rng = RngStream(20240820),
                        const Tolerances& tol = default_tol());

}  // namespace tenfold
