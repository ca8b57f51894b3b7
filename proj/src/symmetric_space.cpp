#include "tenfold/symmetric_space.hpp"

#include <cmath>

namespace tenfold {

namespace {

std::vector<Matrix> hermitian_basis_full(Eigen::Index n) {
    std::vector<Matrix> basis;
    basis.reserve(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Matrix e = Matrix::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(e);
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Matrix e = Matrix::Zero(n, n);
            e(i, j) = M_SQRT1_2;
            e(j, i) = M_SQRT1_2;
            basis.push_back(e);
            Matrix f = Matrix::Zero(n, n);
            f(i, j) = Complex(0, M_SQRT1_2);
            f(j, i) = Complex(0, -M_SQRT1_2);
            basis.push_back(f);
        }
    return basis;
}

void append_real_rows(RealMatrix& sys, Eigen::Index row, Eigen::Index col,
                      const Matrix& residual) {
    Eigen::Map<const RealVector> flat(
        reinterpret_cast<const double*>(residual.data()), 2 * residual.size());
    sys.block(row, col, flat.size(), 1) = flat;
}

}  // namespace

Matrix time_evolution(const Matrix& h, double t, double tol_struct) {
    EigResult eig = hermitian_eig(h, tol_struct);
    const Eigen::Index n = h.rows();
    Vector phases(n);
    for (Eigen::Index i = 0; i < n; ++i)
        phases[i] = std::exp(Complex(0, -t * eig.eigenvalues[i]));
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix cartan_embed(const Matrix& k, const Involution& tau) {
    if (k.rows() != tau.w.rows())
        throw DimensionMismatch("cartan_embed: dimension mismatch");
    return k * tau.apply(k).adjoint();
}

Matrix geodesic_inversion(const Matrix& p0, const Matrix& p) {
    if (p0.rows() != p.rows() || p0.cols() != p.cols())
        throw DimensionMismatch("geodesic_inversion: dimension mismatch");
    return p0 * p.adjoint() * p0;
}

bool membership(const Matrix& u, const Involution& tau, double tol) {
    return max_abs_diff(u, tau.apply(u).adjoint()) <= tol;
}

Matrix closure_under_inversion_product(const Matrix& p0, const Matrix& p,
                                       const Involution& tau, double tol) {
    if (!membership(p0, tau, tol) || !membership(p, tau, tol))
        throw NotInM("closure_under_inversion_product: input not in M");
    Matrix out = geodesic_inversion(p0, p);
    if (!membership(out, tau, 10 * tol))
        throw NotInM("closure_under_inversion_product: output left M");
    return out;
}

ClassInvolution canonical_tau(SymmetryClass cls, Eigen::Index dim,
                              Eigen::Index p, Eigen::Index q) {
    switch (cls) {
        case SymmetryClass::A:
        case SymmetryClass::D:
        case SymmetryClass::C: {
            // type II: doubled embedding, tau = conjugation by the swap
            Matrix swap = Matrix::Zero(2 * dim, 2 * dim);
            swap.topRightCorner(dim, dim) = Matrix::Identity(dim, dim);
            swap.bottomLeftCorner(dim, dim) = Matrix::Identity(dim, dim);
            return {Involution::unitary(swap), true};
        }
        case SymmetryClass::AIII: {
            if (p == 0 && q == 0) {
                p = (dim + 1) / 2;
                q = dim - p;
            }
            Matrix g = Matrix::Identity(dim, dim);
            g.bottomRightCorner(q, q) *= -1.0;
            return {Involution::unitary(g), false};
        }
        case SymmetryClass::BDI:
            return {Involution::antiunitary(AntiUnitaryOp(Matrix::Identity(dim, dim))),
                    false};
        case SymmetryClass::CII: {
            // blockdiag(J_2p, J_2q) equals the interleaved symplectic unit
            // for every split, so no p/q is needed here
            CanonicalInvolutions inv = canonical_involutions(SymmetryClass::AII, dim);
            return {Involution::antiunitary(*inv.t), false};
        }
        default: {
            CanonicalInvolutions inv = canonical_involutions(cls, dim);
            if (inv.t) return {Involution::antiunitary(*inv.t), false};
            throw SpecInvalid("canonical_tau: class has no canonical involution");
        }
    }
}

Matrix embed_evolution(const Matrix& u, const ClassInvolution& ci) {
    if (!ci.doubled) return u;
    const Eigen::Index n = u.rows();
    Matrix v = Matrix::Zero(2 * n, 2 * n);
    v.topLeftCorner(n, n) = u;
    v.bottomRightCorner(n, n) = u.adjoint();
    return v;
}

Eigen::Index fixed_point_dimension(SymmetryClass cls, Eigen::Index dim,
                                   const Tolerances& tol) {
    if (cls != SymmetryClass::DIII && cls != SymmetryClass::CI)
        throw SpecInvalid("fixed_point_dimension: supported for DIII and CI only");
    const CanonicalInvolutions inv = canonical_involutions(cls, dim);
    // Lie algebra of K: X = -iH with C H C^{-1} = -H (class D resp. C
    // structure); fixed points of dtau: T H T^{-1} = -H.
    const std::vector<Matrix> basis = hermitian_basis_full(dim);
    const Eigen::Index np = static_cast<Eigen::Index>(basis.size());
    RealMatrix sys(2 * 2 * dim * dim, np);
    for (Eigen::Index p = 0; p < np; ++p) {
        const Matrix& h = basis[p];
        const Matrix rc = inv.c->conjugate_operator(h) + h;
        const Matrix rt = inv.t->conjugate_operator(h) + h;
        append_real_rows(sys, 0, p, rc);
        append_real_rows(sys, 2 * dim * dim, p, rt);
    }
    return real_nullity(sys, tol);
}

}  // namespace tenfold
