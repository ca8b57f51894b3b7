#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tenfold/classes.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold {

// Sampler configuration. n is the total matrix dimension for the
// non-chiral classes; the chiral classes take their dimensions from
// (p, q) instead (CII doubles both for the quaternion embedding).
struct EnsembleSpec {
    SymmetryClass cls = SymmetryClass::A;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
    Eigen::Index q = 0;
    double sigma = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    Eigen::Index total_dim() const;
    void validate() const;  // throws SpecInvalid
};

struct Hamiltonian {
    Matrix matrix;
    SymmetryClass cls = SymmetryClass::A;
    std::vector<Eigen::Index> block_meta;  // canonical block sizes
};

struct CanonicalInvolutions {
    std::optional<AntiUnitaryOp> t;
    std::optional<AntiUnitaryOp> c;
    std::optional<Matrix> chirality;
};

// The fixed reference operators of each class's canonical realization,
// matching the relations checked by validate_structure.
CanonicalInvolutions canonical_involutions(SymmetryClass cls, Eigen::Index dim,
                                           Eigen::Index p = 0, Eigen::Index q = 0);

// Draw one Hamiltonian in the canonical form, with entry variances fixed
// so the density is exp(-Tr H^2 / 2 sigma^2) on the class's matrix space.
Hamiltonian sample(const EnsembleSpec& spec);
Hamiltonian sample(const EnsembleSpec& spec, RngStream& rng);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationReport validate_structure(const Hamiltonian& h,
                                    double tol = default_tol().tol_struct);

// exp(-Tr(H^2)/2 sigma^2); unitarily invariant.
double gue_weight(const Hamiltonian& h, double sigma);

}  // namespace tenfold
