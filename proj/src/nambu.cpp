#include "tenfold/nambu.hpp"

#include <cmath>

namespace tenfold {

NambuSpace::NambuSpace(Eigen::Index n)
    : n_orbitals(n), c_op(particle_hole_op(n)) {
    if (n < 1) throw SpecInvalid("NambuSpace: need at least one orbital");
}

void QuadraticHamiltonian::validate(double tol) const {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatch("QuadraticHamiltonian: A, B must be square of equal size");
    if (max_abs_diff(a, a.adjoint()) > tol)
        throw StructureViolation("QuadraticHamiltonian: A not Hermitian");
    if (max_abs_diff(b, -b.transpose()) > tol)
        throw StructureViolation("QuadraticHamiltonian: B not skew");
}

Complex symmetric_form(const Vector& psi1, const Vector& psi2) {
    if (psi1.size() != psi2.size() || psi1.size() % 2 != 0)
        throw DimensionMismatch("symmetric_form: vectors must share an even dimension");
    const Eigen::Index n = psi1.size() / 2;
    // {u1 + v1, u2 + v2} = sum_a (u1_a v2_a + u2_a v1_a), bilinear
    return psi1.head(n).cwiseProduct(psi2.tail(n)).sum() +
           psi2.head(n).cwiseProduct(psi1.tail(n)).sum();
}

AntiUnitaryOp particle_hole_op(Eigen::Index n_orbitals) {
    if (n_orbitals < 1) throw SpecInvalid("particle_hole_op: need at least one orbital");
    Matrix w = Matrix::Zero(2 * n_orbitals, 2 * n_orbitals);
    w.topRightCorner(n_orbitals, n_orbitals) = Matrix::Identity(n_orbitals, n_orbitals);
    w.bottomLeftCorner(n_orbitals, n_orbitals) = Matrix::Identity(n_orbitals, n_orbitals);
    return AntiUnitaryOp(w);
}

Hamiltonian assemble_bdg(const QuadraticHamiltonian& h, double tol) {
    h.validate(tol);
    const Eigen::Index n = h.a.rows();
    Matrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = h.a;
    m.topRightCorner(n, n) = h.b;
    m.bottomLeftCorner(n, n) = -h.b.conjugate();
    m.bottomRightCorner(n, n) = -h.a.conjugate();
    return Hamiltonian{std::move(m), SymmetryClass::D, {2 * n}};
}

Matrix majorana_basis(Eigen::Index n_orbitals) {
    const Eigen::Index n = n_orbitals;
    Matrix w(2 * n, 2 * n);
    w.topLeftCorner(n, n) = M_SQRT1_2 * Matrix::Identity(n, n);
    w.topRightCorner(n, n) = M_SQRT1_2 * Matrix::Identity(n, n);
    w.bottomLeftCorner(n, n) = Complex(0, M_SQRT1_2) * Matrix::Identity(n, n);
    w.bottomRightCorner(n, n) = Complex(0, -M_SQRT1_2) * Matrix::Identity(n, n);
    return w;
}

SpinFactorization spin_factorize(Eigen::Index n_half) {
    if (n_half < 1) throw DimensionNotDivisible("spin_factorize: need n_half >= 1");
    const Eigen::Index wd = 2 * n_half;  // basis w+_1..w+_h, w-_1..w-_h
    const Eigen::Index vd = 2 * wd;      // Nambu dim 4*n_half

    SpinFactorization out;
    out.w_dim = wd;
    out.skew_form = Matrix::Zero(wd, wd);
    out.skew_form.topRightCorner(n_half, n_half) =
        Matrix::Identity(n_half, n_half);
    out.skew_form.bottomLeftCorner(n_half, n_half) =
        -Matrix::Identity(n_half, n_half);

    // Nambu orbital index (a, s): u_{a s} = e_{2(a-1)+s}, v_{a s} at offset 2*n_half.
    // Column index of w_k (x) e_s is 2k + s (spin fast).
    out.embedding = Matrix::Zero(vd, vd);
    for (Eigen::Index a = 0; a < n_half; ++a) {
        out.embedding(2 * a + 0, 2 * a + 0) = 1.0;           // w+_a (x) up -> u_{a up}
        out.embedding(2 * a + 1, 2 * a + 1) = 1.0;           // w+_a (x) dn -> u_{a dn}
        const Eigen::Index km = 2 * (n_half + a);
        out.embedding(wd + 2 * a + 1, km + 0) = -1.0;        // w-_a (x) up -> -v_{a dn}
        out.embedding(wd + 2 * a + 0, km + 1) = 1.0;         // w-_a (x) dn -> v_{a up}
    }
    return out;
}

QSplit q_split(const AntiUnitaryOp& c, const AntiUnitaryOp& t, double tol) {
    if (c.dim() != t.dim())
        throw DimensionMismatch("q_split: C and T dimensions differ");
    if (antiunitary_square_sign(c, tol) != 1)
        throw AlgebraViolation("q_split: C^2 != +Id");
    if (antiunitary_square_sign(t, tol) != -1)
        throw AlgebraViolation("q_split: T^2 != -Id");
    if (max_abs_diff(c.compose_linear(t), t.compose_linear(c)) > tol)
        throw AlgebraViolation("q_split: C and T do not commute");

    QSplit out;
    out.q = Complex(0, 1) * c.compose_linear(t);
    if (!is_unitary(out.q, tol))
        throw AlgebraViolation("q_split: Q not unitary");
    if (max_abs_diff(out.q * out.q, Matrix::Identity(out.q.rows(), out.q.cols())) > tol)
        throw AlgebraViolation("q_split: Q^2 != Id");
    if (std::abs(out.q.trace()) > tol)
        throw AlgebraViolation("q_split: Tr Q != 0");

    // Q is unitary with Q^2 = Id, hence Hermitian; split its +-1 eigenspaces.
    EigResult eig = hermitian_eig(out.q, tol);
    const Eigen::Index n = out.q.rows();
    out.v_minus = eig.eigenvectors.leftCols(n / 2);
    out.v_plus = eig.eigenvectors.rightCols(n / 2);
    return out;
}

}  // namespace tenfold
