#include "tenfold/ensembles.hpp"

#include <cmath>

namespace tenfold {

namespace {

// interleaved symplectic unit: blockdiag(i sigma_y, ...), one 2x2 block
// per quaternion index
Matrix symplectic_unit(Eigen::Index dim) {
    Matrix j = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k + 1 < dim; k += 2) {
        j(k, k + 1) = 1.0;
        j(k + 1, k) = -1.0;
    }
    return j;
}

// big-block Pauli (x) identity on dim = 2*half
Matrix pauli_block(char which, Eigen::Index half) {
    Matrix m = Matrix::Zero(2 * half, 2 * half);
    const Matrix id = Matrix::Identity(half, half);
    switch (which) {
        case 'x':
            m.topRightCorner(half, half) = id;
            m.bottomLeftCorner(half, half) = id;
            break;
        case 'y':
            m.topRightCorner(half, half) = Complex(0, -1) * id;
            m.bottomLeftCorner(half, half) = Complex(0, 1) * id;
            break;
        case 'z':
            m.topLeftCorner(half, half) = id;
            m.bottomRightCorner(half, half) = -id;
            break;
    }
    return m;
}

// 2x2 complex block for the quaternion a + bi + cj + dk
void put_quaternion(Matrix& m, Eigen::Index r, Eigen::Index c, double a,
                    double b, double cc, double d) {
    m(r, c) = Complex(a, b);
    m(r, c + 1) = Complex(cc, d);
    m(r + 1, c) = Complex(-cc, d);
    m(r + 1, c + 1) = Complex(a, -b);
}

Matrix sample_a(RngStream& rng, Eigen::Index n, double sigma) {
    return random_hermitian(rng, n, sigma);
}

Matrix sample_ai(RngStream& rng, Eigen::Index n, double sigma) {
    Matrix h = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = sigma * rng.normal();
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = sigma * M_SQRT1_2 * rng.normal();
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    return h;
}

Matrix sample_aii(RngStream& rng, Eigen::Index n, double sigma) {
    const Eigen::Index nq = n / 2;
    Matrix h = Matrix::Zero(n, n);
    const double sd = sigma * M_SQRT1_2;       // diagonal quaternion (real)
    const double so = sigma * 0.5;             // off-diagonal components
    for (Eigen::Index i = 0; i < nq; ++i) {
        const double a = sd * rng.normal();
        put_quaternion(h, 2 * i, 2 * i, a, 0, 0, 0);
        for (Eigen::Index j = i + 1; j < nq; ++j) {
            const double qa = so * rng.normal();
            const double qb = so * rng.normal();
            const double qc = so * rng.normal();
            const double qd = so * rng.normal();
            put_quaternion(h, 2 * i, 2 * j, qa, qb, qc, qd);
            put_quaternion(h, 2 * j, 2 * i, qa, -qb, -qc, -qd);  // conjugate
        }
    }
    return h;
}

Matrix sample_d(RngStream& rng, Eigen::Index n, double sigma) {
    Matrix h = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double a = sigma * M_SQRT1_2 * rng.normal();
            h(i, j) = Complex(0, a);
            h(j, i) = Complex(0, -a);
        }
    return h;
}

Matrix sample_diii(RngStream& rng, Eigen::Index n, double sigma) {
    const Eigen::Index half = n / 2;
    Matrix z = Matrix::Zero(half, half);
    for (Eigen::Index i = 0; i < half; ++i)
        for (Eigen::Index j = i + 1; j < half; ++j) {
            const Complex v(0.5 * sigma * rng.normal(), 0.5 * sigma * rng.normal());
            z(i, j) = v;
            z(j, i) = -v;
        }
    Matrix h = Matrix::Zero(n, n);
    h.topRightCorner(half, half) = z;
    h.bottomLeftCorner(half, half) = -z.conjugate();
    return h;
}

Matrix sample_c(RngStream& rng, Eigen::Index n, double sigma) {
    const Eigen::Index half = n / 2;
    Matrix a = Matrix::Zero(half, half);
    Matrix b = Matrix::Zero(half, half);
    for (Eigen::Index i = 0; i < half; ++i) {
        a(i, i) = sigma * M_SQRT1_2 * rng.normal();
        b(i, i) = Complex(sigma * M_SQRT1_2 * rng.normal(),
                          sigma * M_SQRT1_2 * rng.normal());
        for (Eigen::Index j = i + 1; j < half; ++j) {
            a(i, j) = Complex(0.5 * sigma * rng.normal(), 0.5 * sigma * rng.normal());
            a(j, i) = std::conj(a(i, j));
            b(i, j) = Complex(0.5 * sigma * rng.normal(), 0.5 * sigma * rng.normal());
            b(j, i) = b(i, j);
        }
    }
    Matrix h(n, n);
    h.topLeftCorner(half, half) = a;
    h.topRightCorner(half, half) = b;
    h.bottomLeftCorner(half, half) = b.conjugate();
    h.bottomRightCorner(half, half) = -a.conjugate();
    return h;
}

Matrix sample_ci(RngStream& rng, Eigen::Index n, double sigma) {
    const Eigen::Index half = n / 2;
    Matrix z = Matrix::Zero(half, half);
    for (Eigen::Index i = 0; i < half; ++i) {
        z(i, i) = Complex(sigma * M_SQRT1_2 * rng.normal(),
                          sigma * M_SQRT1_2 * rng.normal());
        for (Eigen::Index j = i + 1; j < half; ++j) {
            const Complex v(0.5 * sigma * rng.normal(), 0.5 * sigma * rng.normal());
            z(i, j) = v;
            z(j, i) = v;
        }
    }
    Matrix h = Matrix::Zero(n, n);
    h.topRightCorner(half, half) = z;
    h.bottomLeftCorner(half, half) = z.conjugate();
    return h;
}

Matrix chiral_assemble(const Matrix& z) {
    const Eigen::Index p = z.rows(), q = z.cols();
    Matrix h = Matrix::Zero(p + q, p + q);
    h.topRightCorner(p, q) = z;
    h.bottomLeftCorner(q, p) = z.adjoint();
    return h;
}

Matrix sample_aiii(RngStream& rng, Eigen::Index p, Eigen::Index q, double sigma) {
    Matrix z(p, q);
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = 0; j < q; ++j)
            z(i, j) = Complex(sigma * M_SQRT1_2 * rng.normal(),
                              sigma * M_SQRT1_2 * rng.normal());
    return chiral_assemble(z);
}

Matrix sample_bdi(RngStream& rng, Eigen::Index p, Eigen::Index q, double sigma) {
    Matrix z(p, q);
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = 0; j < q; ++j)
            z(i, j) = sigma * M_SQRT1_2 * rng.normal();
    return chiral_assemble(z);
}

Matrix sample_cii(RngStream& rng, Eigen::Index p, Eigen::Index q, double sigma) {
    Matrix z = Matrix::Zero(2 * p, 2 * q);
    const double s = 0.5 * sigma;
    for (Eigen::Index i = 0; i < p; ++i)
        for (Eigen::Index j = 0; j < q; ++j)
            put_quaternion(z, 2 * i, 2 * j, s * rng.normal(), s * rng.normal(),
                           s * rng.normal(), s * rng.normal());
    return chiral_assemble(z);
}

}  // namespace

Eigen::Index EnsembleSpec::total_dim() const {
    switch (cls) {
        case SymmetryClass::AIII:
        case SymmetryClass::BDI:
            return p + q;
        case SymmetryClass::CII:
            return 2 * (p + q);
        default:
            return n;
    }
}

void EnsembleSpec::validate() const {
    if (!(sigma > 0.0)) throw SpecInvalid("EnsembleSpec: sigma must be > 0");
    if (is_chiral(cls)) {
        if (p < 1 || q < 1) throw SpecInvalid("EnsembleSpec: chiral classes need p, q >= 1");
        return;
    }
    if (n < 1) throw SpecInvalid("EnsembleSpec: n must be >= 1");
    switch (cls) {
        case SymmetryClass::AII:
        case SymmetryClass::C:
        case SymmetryClass::CI:
            if (n % 2 != 0)
                throw SpecInvalid("EnsembleSpec: class " + to_string(cls) +
                                  " needs even dimension");
            break;
        case SymmetryClass::DIII:
            if (n % 4 != 0)
                throw SpecInvalid("EnsembleSpec: class DIII needs dimension divisible by 4");
            break;
        default:
            break;
    }
}

CanonicalInvolutions canonical_involutions(SymmetryClass cls, Eigen::Index dim,
                                           Eigen::Index p, Eigen::Index q) {
    CanonicalInvolutions out;
    const Matrix id = Matrix::Identity(dim, dim);
    switch (cls) {
        case SymmetryClass::A:
            break;
        case SymmetryClass::AI:
            out.t = AntiUnitaryOp(id);
            break;
        case SymmetryClass::AII:
            if (dim % 2 != 0) throw SpecInvalid("canonical_involutions: AII dim odd");
            out.t = AntiUnitaryOp(symplectic_unit(dim));
            break;
        case SymmetryClass::D:
            out.c = AntiUnitaryOp(id);  // conj(H) = -H in the Majorana basis
            break;
        case SymmetryClass::DIII:
            if (dim % 4 != 0) throw SpecInvalid("canonical_involutions: DIII dim % 4 != 0");
            out.c = AntiUnitaryOp(Complex(0, 1) * pauli_block('x', dim / 2));
            out.t = AntiUnitaryOp(Complex(0, 1) * pauli_block('y', dim / 2));
            break;
        case SymmetryClass::C:
            if (dim % 2 != 0) throw SpecInvalid("canonical_involutions: C dim odd");
            out.c = AntiUnitaryOp(pauli_block('y', dim / 2));
            break;
        case SymmetryClass::CI:
            if (dim % 2 != 0) throw SpecInvalid("canonical_involutions: CI dim odd");
            out.c = AntiUnitaryOp(pauli_block('y', dim / 2));
            out.t = AntiUnitaryOp(pauli_block('x', dim / 2));
            break;
        case SymmetryClass::AIII: {
            if (p + q != dim) throw SpecInvalid("canonical_involutions: AIII p+q != dim");
            Matrix g = id;
            g.bottomRightCorner(q, q) *= -1.0;
            out.chirality = g;
            break;
        }
        case SymmetryClass::BDI: {
            if (p + q != dim) throw SpecInvalid("canonical_involutions: BDI p+q != dim");
            Matrix g = id;
            g.bottomRightCorner(q, q) *= -1.0;
            out.chirality = g;
            out.t = AntiUnitaryOp(id);
            out.c = AntiUnitaryOp(g);
            break;
        }
        case SymmetryClass::CII: {
            if (2 * (p + q) != dim)
                throw SpecInvalid("canonical_involutions: CII 2(p+q) != dim");
            Matrix g = id;
            g.bottomRightCorner(2 * q, 2 * q) *= -1.0;
            out.chirality = g;
            Matrix wt = Matrix::Zero(dim, dim);
            wt.topLeftCorner(2 * p, 2 * p) = symplectic_unit(2 * p);
            wt.bottomRightCorner(2 * q, 2 * q) = symplectic_unit(2 * q);
            out.t = AntiUnitaryOp(wt);
            out.c = AntiUnitaryOp(g * wt);
            break;
        }
    }
    return out;
}

Hamiltonian sample(const EnsembleSpec& spec) {
    RngStream rng(spec.seed, spec.stream_id);
    return sample(spec, rng);
}

Hamiltonian sample(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    Hamiltonian h;
    h.cls = spec.cls;
    const double s = spec.sigma;
    switch (spec.cls) {
        case SymmetryClass::A:
            h.matrix = sample_a(rng, spec.n, s);
            h.block_meta = {spec.n};
            break;
        case SymmetryClass::AI:
            h.matrix = sample_ai(rng, spec.n, s);
            h.block_meta = {spec.n};
            break;
        case SymmetryClass::AII:
            h.matrix = sample_aii(rng, spec.n, s);
            h.block_meta = {spec.n / 2, 2};
            break;
        case SymmetryClass::D:
            h.matrix = sample_d(rng, spec.n, s);
            h.block_meta = {spec.n};
            break;
        case SymmetryClass::DIII:
            h.matrix = sample_diii(rng, spec.n, s);
            h.block_meta = {spec.n / 2, spec.n / 2};
            break;
        case SymmetryClass::C:
            h.matrix = sample_c(rng, spec.n, s);
            h.block_meta = {spec.n / 2, spec.n / 2};
            break;
        case SymmetryClass::CI:
            h.matrix = sample_ci(rng, spec.n, s);
            h.block_meta = {spec.n / 2, spec.n / 2};
            break;
        case SymmetryClass::AIII:
            h.matrix = sample_aiii(rng, spec.p, spec.q, s);
            h.block_meta = {spec.p, spec.q};
            break;
        case SymmetryClass::BDI:
            h.matrix = sample_bdi(rng, spec.p, spec.q, s);
            h.block_meta = {spec.p, spec.q};
            break;
        case SymmetryClass::CII:
            h.matrix = sample_cii(rng, spec.p, spec.q, s);
            h.block_meta = {2 * spec.p, 2 * spec.q};
            break;
    }
    return h;
}

ValidationReport validate_structure(const Hamiltonian& h, double tol) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    const Matrix& m = h.matrix;
    if (!is_finite(m)) fail("non-finite entries");
    if (!is_hermitian(m, tol)) fail("H != H^dagger");

    const Eigen::Index dim = m.rows();
    Eigen::Index p = 0, q = 0;
    if (is_chiral(h.cls) && h.block_meta.size() == 2) {
        p = h.block_meta[0];
        q = h.block_meta[1];
        if (h.cls == SymmetryClass::CII) {
            p /= 2;
            q /= 2;
        }
    }
    CanonicalInvolutions inv;
    try {
        inv = canonical_involutions(h.cls, dim, p, q);
    } catch (const SpecInvalid& e) {
        fail(e.what());
        return rep;
    }

    if (inv.t) {
        if (max_abs_diff(inv.t->conjugate_operator(m), m) > tol)
            fail("T H T^-1 != H");
    }
    if (inv.c) {
        if (max_abs_diff(inv.c->conjugate_operator(m), Matrix(-m)) > tol)
            fail("C H C^-1 != -H");
    }
    if (inv.chirality) {
        if (max_abs_diff((*inv.chirality) * m * (*inv.chirality), Matrix(-m)) > tol)
            fail("Gamma5 H Gamma5 != -H");
    }
    if (h.cls == SymmetryClass::D &&
        max_abs_diff(m.conjugate(), Matrix(-m)) > tol)
        fail("conj(H) != -H");
    return rep;
}

double gue_weight(const Hamiltonian& h, double sigma) {
    if (!is_hermitian(h.matrix, default_tol().tol_struct))
        throw NotHermitian("gue_weight: input not Hermitian");
    return std::exp(-h.matrix.squaredNorm() / (2.0 * sigma * sigma));
}

}  // namespace tenfold
