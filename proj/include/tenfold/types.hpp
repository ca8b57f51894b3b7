#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tenfold {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Global default tolerances. Structural identities (unitarity, Hermiticity,
// involution squares) are held to tol_struct; eigensolver residuals to
// tol_eig. Group element equality uses the looser tol_group since elements
// are products of up to order-many unitaries.
struct Tolerances {
    double tol_struct = 1e-10;
    double tol_eig = 1e-9;
    double tol_group = 1e-8;
    double rank_gap = 1e6;  // singular-value ratio required at a rank cut
};

inline const Tolerances& default_tol() {
    static const Tolerances t{};
    return t;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct NotInvolutive : Error {
    using Error::Error;
};
struct InvalidSigma : Error {
    using Error::Error;
};
struct GroupTooLarge : Error {
    using Error::Error;
};
struct NonUnitaryGenerator : Error {
    using Error::Error;
};
struct RankAmbiguous : Error {
    using Error::Error;
};
struct DegenerateGenericElement : Error {
    using Error::Error;
};
struct NotSelfConjugate : Error {
    using Error::Error;
};
struct NonScalarSquare : Error {
    using Error::Error;
};
struct InvalidSignature : Error {
    using Error::Error;
};
struct SpecInvalid : Error {
    using Error::Error;
};
struct StructureViolation : Error {
    using Error::Error;
};
struct NotInM : Error {
    using Error::Error;
};
struct DimensionNotDivisible : Error {
    using Error::Error;
};
struct AlgebraViolation : Error {
    using Error::Error;
};
struct NotSuNc : Error {
    using Error::Error;
};
struct TooFewLevels : Error {
    using Error::Error;
};
struct TooFewSpacings : Error {
    using Error::Error;
};
struct InvalidBeta : Error {
    using Error::Error;
};
struct ToleranceAmbiguous : Error {
    using Error::Error;
};

// max|A - B| over entries
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
}

inline bool is_hermitian(const Matrix& h, double tol) {
    if (h.rows() != h.cols()) return false;
    return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_finite(const Matrix& m) {
    return m.allFinite();
}

}  // namespace tenfold
