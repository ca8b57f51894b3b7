#include "tenfold/dirac_chiral.hpp"

#include <cmath>
#include <cstdlib>

namespace tenfold {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix pauli(char which) {
    Matrix s(2, 2);
    switch (which) {
        case 'x': s << 0, 1, 1, 0; break;
        case 'y': s << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default:  s << 1, 0, 0, -1; break;
    }
    return s;
}

bool exactly_zero(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Complex(0, 0)) return false;
    return true;
}

}  // namespace

void GammaSet::check() const {
    const Matrix id = Matrix::Identity(8, 8);
    for (int u = 0; u < 4; ++u) {
        if (!exactly_zero(gamma[u] - gamma[u].transpose()) ||
            !exactly_zero(gamma[u] - gamma[u].conjugate()))
            throw AlgebraViolation("GammaSet: gamma not real symmetric");
        for (int v = 0; v < 4; ++v) {
            const Matrix anti = gamma[u] * gamma[v] + gamma[v] * gamma[u];
            if (!exactly_zero(anti - (u == v ? 2.0 : 0.0) * id))
                throw AlgebraViolation("GammaSet: Clifford relation fails");
        }
        if (!exactly_zero(gamma5 * gamma[u] + gamma[u] * gamma5))
            throw AlgebraViolation("GammaSet: gamma5 does not anti-commute");
    }
    if (!exactly_zero(gamma5 * gamma5 - id))
        throw AlgebraViolation("GammaSet: gamma5 not an involution");
    if (!exactly_zero(q_gen * q_gen - id))
        throw AlgebraViolation("GammaSet: q_gen not an involution");
}

GammaSet gamma_matrices() {
    const Matrix one = Matrix::Identity(2, 2);
    const Matrix sx = pauli('x'), sy = pauli('y'), sz = pauli('z');
    GammaSet g;
    g.gamma[0] = kron(one, kron(sz, one));
    g.gamma[1] = kron(sx, kron(sy, sy));
    g.gamma[2] = kron(sy, kron(sy, one));
    g.gamma[3] = kron(sz, kron(sy, sy));
    g.gamma5 = kron(one, kron(sx, one));
    g.q_gen = kron(one, kron(one, sy));
    g.check();
    return g;
}

std::vector<Matrix> majorana_gauge(const std::vector<Matrix>& a_mu, double tol) {
    if (a_mu.size() != 4)
        throw DimensionMismatch("majorana_gauge: expected 4 components");
    const Eigen::Index nc = a_mu[0].rows();
    const Matrix isy = Complex(0, 1) * pauli('y');  // real skew [[0,1],[-1,0]]
    std::vector<Matrix> out;
    out.reserve(4);
    for (const Matrix& a : a_mu) {
        if (a.rows() != nc || a.cols() != nc)
            throw DimensionMismatch("majorana_gauge: inconsistent color dimensions");
        if (max_abs_diff(a, -a.adjoint()) > tol || std::abs(a.trace()) > tol)
            throw NotSuNc("majorana_gauge: component not in su(N_c)");
        const Matrix r = 0.5 * (a - a.transpose());              // real skew
        const Matrix s = Complex(0, -0.5) * (a + a.transpose()); // real symmetric
        out.push_back(kron(Matrix::Identity(2, 2), r) - kron(isy, s));
    }
    return out;
}

Matrix dirac_hamiltonian(const GammaSet& g, const std::array<double, 4>& k,
                         const std::vector<Matrix>& a_mu, double tol) {
    const std::vector<Matrix> cal_a = majorana_gauge(a_mu, tol);
    const Eigen::Index nc = a_mu[0].rows();
    const Matrix id_c = Matrix::Identity(nc, nc);
    const Matrix id_mode = Matrix::Identity(2, 2);
    Matrix j_mode(2, 2);
    j_mode << 0, -1, 1, 0;  // single plane-wave mode: d_mu -> k_mu * J

    Matrix h = Matrix::Zero(16 * nc, 16 * nc);
    const Complex i1(0, 1);
    for (int u = 0; u < 4; ++u) {
        // gamma slot 3 (dim 2) carries sigma_y; the gauge matrices act on
        // that slot tensored with color, so split gamma = front (x) slot3.
        const Matrix full_gamma = kron(g.gamma[u], id_c);
        h += i1 * k[u] * kron(full_gamma, j_mode);
        // cal_a acts on slot3 (x) color = trailing 2*nc dims of full_gamma's space
        const Matrix a_full = kron(Matrix::Identity(4, 4), cal_a[u]);
        h -= i1 * kron(full_gamma * a_full, id_mode);
    }
    return h;
}

bool chirality_recast_check(const Matrix& h, const Matrix& gamma5, double tol) {
    if (h.rows() != h.cols() || gamma5.rows() != h.rows())
        throw DimensionMismatch("chirality_recast_check: dimension mismatch");
    if (max_abs_diff(h, h.adjoint()) > tol)
        throw NotHermitian("chirality_recast_check: H not Hermitian");
    const bool imaginary = max_abs_diff(h.conjugate(), -h) <= tol;
    const bool chiral = max_abs_diff(gamma5 * h * gamma5, -h) <= tol;
    if (!(imaginary && chiral)) return false;
    // the recast identity H = gamma5 conj(H) gamma5 is implied; verify it
    return max_abs_diff(gamma5 * h.conjugate() * gamma5, h) <= tol;
}

Matrix ChiralOperator::gamma5() const {
    const Eigen::Index p = z.rows(), q = z.cols();
    Matrix g = Matrix::Identity(p + q, p + q);
    g.bottomRightCorner(q, q) *= -1.0;
    return g;
}

ChiralOperator assemble_chiral(const Matrix& z, ChiralField field) {
    const Eigen::Index p = z.rows(), q = z.cols();
    if (p < 1 || q < 1) throw SpecInvalid("assemble_chiral: need p, q >= 1");
    ChiralOperator op;
    op.field = field;
    op.z = z;
    op.d = Matrix::Zero(p + q, p + q);
    op.d.topRightCorner(p, q) = z;
    op.d.bottomLeftCorner(q, p) = z.adjoint();
    if (field == ChiralField::quaternion_entries) {
        if (p % 2 != 0 || q % 2 != 0)
            throw SpecInvalid("assemble_chiral: quaternion embedding needs even p, q");
        op.nu = p / 2 - q / 2;
    } else {
        op.nu = p - q;
    }
    return op;
}

ChiralOperator sample_chiral(Eigen::Index p, Eigen::Index q, ChiralField field,
                             double sigma, RngStream& rng) {
    if (p < 1 || q < 1) throw SpecInvalid("sample_chiral: need p, q >= 1");
    if (!(sigma > 0)) throw InvalidSigma("sample_chiral: sigma must be positive");
    Matrix z;
    switch (field) {
        case ChiralField::complex_entries: {
            z.resize(p, q);
            const double s = sigma * M_SQRT1_2;
            for (Eigen::Index j = 0; j < q; ++j)
                for (Eigen::Index i = 0; i < p; ++i)
                    z(i, j) = Complex(s * rng.normal(), s * rng.normal());
            break;
        }
        case ChiralField::real_entries: {
            z.resize(p, q);
            const double s = sigma * M_SQRT1_2;
            for (Eigen::Index j = 0; j < q; ++j)
                for (Eigen::Index i = 0; i < p; ++i)
                    z(i, j) = s * rng.normal();
            break;
        }
        case ChiralField::quaternion_entries: {
            z = Matrix::Zero(2 * p, 2 * q);
            const double s = 0.5 * sigma;
            for (Eigen::Index j = 0; j < q; ++j)
                for (Eigen::Index i = 0; i < p; ++i) {
                    const double a = s * rng.normal(), b = s * rng.normal();
                    const double c = s * rng.normal(), d = s * rng.normal();
                    z(2 * i, 2 * j) = Complex(a, b);
                    z(2 * i, 2 * j + 1) = Complex(c, d);
                    z(2 * i + 1, 2 * j) = Complex(-c, d);
                    z(2 * i + 1, 2 * j + 1) = Complex(a, -b);
                }
            break;
        }
    }
    return assemble_chiral(z, field);
}

ZeroModes zero_modes(const ChiralOperator& op, double tol) {
    const EigResult eig = hermitian_eig(op.d);
    const double radius =
        eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    if (tol <= 0) tol = 1e-8 * std::max(radius, 1e-300);
    ZeroModes zm;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double a = std::abs(eig.eigenvalues[i]);
        if (a <= tol) {
            ++zm.raw;
        } else if (a <= 10 * tol) {
            throw ToleranceAmbiguous("zero_modes: eigenvalue in the ambiguous band");
        }
    }
    const bool quat = op.field == ChiralField::quaternion_entries;
    zm.quaternionic = quat ? zm.raw / 2 : zm.raw;
    if (zm.quaternionic < std::abs(op.nu))
        throw AlgebraViolation("zero_modes: fewer modes than the index bound");
    return zm;
}

}  // namespace tenfold
