#include "tenfold/linalg.hpp"

#include <Eigen/SVD>

namespace tenfold {

RealVector gaussian_real(RngStream& rng, Eigen::Index n, double sigma) {
    if (!(sigma > 0.0)) throw InvalidSigma("gaussian_real: sigma must be > 0");
    RealVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = sigma * rng.normal();
    return v;
}

EigResult hermitian_eig(const Matrix& h, double tol_struct) {
    if (h.rows() != h.cols())
        throw DimensionMismatch("hermitian_eig: matrix not square");
    if (!is_hermitian(h, tol_struct))
        throw NotHermitian("hermitian_eig: input exceeds Hermiticity tolerance");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eig: solver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Vector AntiUnitaryOp::apply(const Vector& psi) const {
    if (psi.size() != w.cols())
        throw DimensionMismatch("AntiUnitaryOp::apply: dimension mismatch");
    return w * psi.conjugate();
}

int antiunitary_square_sign(const AntiUnitaryOp& op, double tol) {
    const Matrix sq = op.w * op.w.conjugate();
    const Eigen::Index n = sq.rows();
    const Complex c = sq.trace() / static_cast<double>(n);
    if ((sq - c * Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
        throw NotInvolutive("antiunitary_square_sign: w*conj(w) is not scalar");
    if (std::abs(c - Complex(1.0, 0.0)) <= tol) return +1;
    if (std::abs(c + Complex(1.0, 0.0)) <= tol) return -1;
    throw NotInvolutive("antiunitary_square_sign: scalar square is not +-1");
}

// Absolute noise floor: every system fed through here is assembled from
// O(1)-normalized matrices (unitaries, unit-norm Hermitian basis elements),
// so a largest singular value at this scale is rounding noise from an
// exactly-zero constraint, not a rank-1 signal.
constexpr double sv_noise_floor = 1e-12;

Eigen::Index numeric_rank(const RealVector& sv, Eigen::Index rows,
                          Eigen::Index cols, const Tolerances& tol) {
    if (sv.size() == 0) return 0;
    const double smax = sv[0];
    if (smax <= sv_noise_floor) return 0;  // numerically zero matrix
    const double cutoff =
        smax * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(rows, cols));
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    if (rank > 0 && rank < sv.size()) {
        const double kept = sv[rank - 1];
        const double dropped = sv[rank];
        if (dropped > 0.0 && kept / dropped < tol.rank_gap)
            throw RankAmbiguous("numeric_rank: singular values straddle the cut");
    }
    return rank;
}

Matrix complex_nullspace(const Matrix& a, const Tolerances& tol) {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
    const Eigen::Index rank = numeric_rank(svd.singularValues(), a.rows(), a.cols(), tol);
    return svd.matrixV().rightCols(a.cols() - rank);
}

Eigen::Index real_nullity(const RealMatrix& a, const Tolerances& tol) {
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const Eigen::Index rank = numeric_rank(svd.singularValues(), a.rows(), a.cols(), tol);
    return a.cols() - rank;
}

RealMatrix real_nullspace(const RealMatrix& a, const Tolerances& tol) {
    Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
    const Eigen::Index rank = numeric_rank(svd.singularValues(), a.rows(), a.cols(), tol);
    return svd.matrixV().rightCols(a.cols() - rank);
}

Matrix random_unitary(RngStream& rng, Eigen::Index n) {
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // fix phases so the distribution is Haar
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

Matrix random_hermitian(RngStream& rng, Eigen::Index n, double sigma) {
    Matrix h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = Complex(sigma * rng.normal(), 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Complex z(sigma * M_SQRT1_2 * rng.normal(),
                            sigma * M_SQRT1_2 * rng.normal());
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

}  // namespace tenfold
