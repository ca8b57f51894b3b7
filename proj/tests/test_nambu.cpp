#include <doctest.h>

#include "test_helpers.hpp"

#include "tenfold/nambu.hpp"
#include "tenfold/symmetric_space.hpp"

using namespace tenfold;
using namespace tenfold::testing;

namespace {

Vector random_vector(RngStream& rng, Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.complex_normal();
    return v;
}

QuadraticHamiltonian random_quadratic(RngStream& rng, Eigen::Index n) {
    QuadraticHamiltonian qh;
    qh.a = random_hermitian(rng, n);
    Matrix b(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) b(i, j) = rng.complex_normal();
    qh.b = 0.5 * (b - b.transpose());
    return qh;
}

}  // namespace

TEST_SUITE_BEGIN("nambu");

TEST_CASE("symmetric form pairs creation with annihilation") {
    const Eigen::Index n = 3;
    Vector e_u1 = Vector::Zero(2 * n), e_v1 = Vector::Zero(2 * n);
    e_u1[0] = 1.0;       // creation side
    e_v1[n + 0] = 1.0;   // matching annihilation side
    CHECK(symmetric_form(e_u1, e_v1) == Complex(1, 0));
    CHECK(symmetric_form(e_u1, e_u1) == Complex(0, 0));  // pure creation pair
    // bilinear (not sesquilinear) in each slot, and symmetric
    const Complex z(0, 1);
    CHECK(std::abs(symmetric_form(z * e_u1, e_v1) -
                   z * symmetric_form(e_u1, e_v1)) < 1e-15);
    RngStream rng(71, 0);
    const Vector a = random_vector(rng, 2 * n), b = random_vector(rng, 2 * n);
    CHECK(std::abs(symmetric_form(a, b) - symmetric_form(b, a)) < 1e-13);
}

TEST_CASE("particle-hole conjugation relates the two canonical forms") {
    const Eigen::Index n = 4;
    const AntiUnitaryOp c = particle_hole_op(n);
    CHECK(antiunitary_square_sign(c) == +1);
    // C e_u1 = e_v1
    Vector e_u1 = Vector::Zero(2 * n);
    e_u1[0] = 1.0;
    const Vector image = c.apply(e_u1);
    CHECK(std::abs(image[n] - 1.0) < 1e-15);
    CHECK(image.cwiseAbs().sum() == doctest::Approx(1.0));
    // <C psi1, psi2> = {psi1, psi2} on 100 random pairs
    RngStream rng(72, 0);
    for (int k = 0; k < 100; ++k) {
        const Vector a = random_vector(rng, 2 * n), b = random_vector(rng, 2 * n);
        CHECK(std::abs(c.apply(a).dot(b) - symmetric_form(a, b)) < 1e-12);
        // C^2 = Id
        CHECK((c.apply(c.apply(a)) - a).cwiseAbs().maxCoeff() < 1e-13);
    }
    const NambuSpace space(n);
    CHECK(space.dim() == 2 * n);
    CHECK(max_abs_diff(space.c_op.w, c.w) == 0.0);
}

TEST_CASE("assemble_bdg builds the displayed block matrix") {
    QuadraticHamiltonian zero;
    zero.a = Matrix::Zero(2, 2);
    zero.b = Matrix::Zero(2, 2);
    CHECK(assemble_bdg(zero).matrix.cwiseAbs().maxCoeff() == 0.0);

    QuadraticHamiltonian one;
    one.a = Matrix::Constant(1, 1, 3.5);
    one.b = Matrix::Zero(1, 1);  // 1x1 skew is zero
    const EigResult eig = hermitian_eig(assemble_bdg(one).matrix);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-3.5));
    CHECK(eig.eigenvalues[1] == doctest::Approx(3.5));

    RngStream rng(73, 0);
    const QuadraticHamiltonian qh = random_quadratic(rng, 4);
    const Matrix h = assemble_bdg(qh).matrix;
    CHECK(is_hermitian(h, 1e-13));
    // C H C^-1 = -H forces a +-symmetric spectrum
    const AntiUnitaryOp c = particle_hole_op(4);
    CHECK(max_abs_diff(c.conjugate_operator(h), -h) < 1e-13);

    QuadraticHamiltonian bad = qh;
    bad.b(0, 0) = 1.0;  // not skew
    CHECK_THROWS_AS(assemble_bdg(bad), StructureViolation);
}

TEST_CASE("majorana basis turns BdG matrices imaginary skew") {
    const Matrix w1 = majorana_basis(1);
    CHECK(max_abs_diff(w1.adjoint() * w1, Matrix::Identity(2, 2)) < 1e-14);
    QuadraticHamiltonian one;
    one.a = Matrix::Constant(1, 1, 1.0);
    one.b = Matrix::Zero(1, 1);
    const Matrix m1 = w1 * assemble_bdg(one).matrix * w1.adjoint();
    // proportional to [[0, -i], [i, 0]]
    CHECK(std::abs(m1(0, 0)) < 1e-14);
    CHECK(std::abs(m1(0, 1) - Complex(0, -1)) < 1e-14);
    CHECK(std::abs(m1(1, 0) - Complex(0, 1)) < 1e-14);

    RngStream rng(74, 0);
    const Matrix w = majorana_basis(5);
    CHECK(max_abs_diff(w.adjoint() * w, Matrix::Identity(10, 10)) < 1e-14);
    for (int k = 0; k < 100; ++k) {
        const Matrix m =
            w * assemble_bdg(random_quadratic(rng, 5)).matrix * w.adjoint();
        CHECK(max_abs_diff(m.conjugate(), -m) < 1e-12);
    }
}

TEST_CASE("time evolutions preserve both canonical forms") {
    RngStream rng(75, 0);
    const Eigen::Index n = 4;
    const Matrix h = assemble_bdg(random_quadratic(rng, n)).matrix;
    const Matrix u = time_evolution(h, 0.9);
    for (int k = 0; k < 20; ++k) {
        const Vector a = random_vector(rng, 2 * n), b = random_vector(rng, 2 * n);
        CHECK(std::abs((u * a).dot(u * b) - a.dot(b)) < 1e-9);
        CHECK(std::abs(symmetric_form(u * a, u * b) - symmetric_form(a, b)) < 1e-9);
    }
    // real orthogonal in the Majorana basis
    const Matrix w = majorana_basis(n);
    const Matrix o = w * u * w.adjoint();
    CHECK(o.imag().cwiseAbs().maxCoeff() < 1e-9);
    CHECK(max_abs_diff(o * o.transpose(), Matrix::Identity(2 * n, 2 * n)) < 1e-9);
}

TEST_CASE("spin factorization realizes { , } = [ , ] x epsilon") {
    const SpinFactorization sf = spin_factorize(1);
    REQUIRE(sf.w_dim == 2);
    REQUIRE(sf.embedding.rows() == 4);
    CHECK(max_abs_diff(sf.embedding.adjoint() * sf.embedding,
                       Matrix::Identity(4, 4)) == 0.0);
    Matrix eps(2, 2);
    eps << 0, 1, -1, 0;  // s1^T (i sigma_y) s2
    // check the identity on all basis tensors w_k (x) e_s
    for (Eigen::Index k1 = 0; k1 < 2; ++k1)
        for (Eigen::Index s1 = 0; s1 < 2; ++s1)
            for (Eigen::Index k2 = 0; k2 < 2; ++k2)
                for (Eigen::Index s2 = 0; s2 < 2; ++s2) {
                    const Vector v1 = sf.embedding.col(2 * k1 + s1);
                    const Vector v2 = sf.embedding.col(2 * k2 + s2);
                    const Complex lhs = symmetric_form(v1, v2);
                    const Complex rhs = sf.skew_form(k1, k2) * eps(s1, s2);
                    CHECK(std::abs(lhs - rhs) < 1e-14);
                }
    // skewness: [w, w] = 0
    RngStream rng(76, 0);
    const SpinFactorization sf3 = spin_factorize(3);
    const Vector w = random_vector(rng, sf3.w_dim);
    CHECK(std::abs((w.transpose() * sf3.skew_form * w).value()) < 1e-12);
    CHECK(max_abs_diff(sf3.skew_form, -sf3.skew_form.transpose()) == 0.0);
    // spin rotations commute with embedded W-side operators
    const Matrix u_w = random_unitary(rng, sf3.w_dim);
    const Matrix lifted = sf3.embedding *
                          kron(u_w, Matrix::Identity(2, 2)) *
                          sf3.embedding.adjoint();
    const Matrix spin = sf3.embedding *
                        kron(Matrix::Identity(sf3.w_dim, sf3.w_dim), pauli('y')) *
                        sf3.embedding.adjoint();
    CHECK(max_abs_diff(lifted * spin, spin * lifted) < 1e-12);
}

TEST_CASE("q_split produces a balanced involution anti-commuting with T") {
    const Eigen::Index dim = 8;
    const CanonicalInvolutions inv = canonical_involutions(SymmetryClass::DIII, dim);
    const QSplit qs = q_split(*inv.c, *inv.t);
    CHECK(is_unitary(qs.q, 1e-13));
    CHECK(max_abs_diff(qs.q * qs.q, Matrix::Identity(dim, dim)) < 1e-13);
    CHECK(std::abs(qs.q.trace()) < 1e-13);
    CHECK(qs.v_plus.cols() == dim / 2);
    CHECK(qs.v_minus.cols() == dim / 2);
    // the canonical realization gives Q = +-(sigma_z (x) Id)
    Matrix sz_block = Matrix::Identity(dim, dim);
    sz_block.bottomRightCorner(dim / 2, dim / 2) *= -1.0;
    const double match = std::min(max_abs_diff(qs.q, sz_block),
                                  max_abs_diff(qs.q, Matrix(-sz_block)));
    CHECK(match < 1e-13);
    // QT = -TQ on random vectors
    RngStream rng(77, 0);
    for (int k = 0; k < 20; ++k) {
        const Vector psi = random_vector(rng, dim);
        const Vector lhs = qs.q * inv.t->apply(psi);
        const Vector rhs = inv.t->apply(qs.q * psi);
        CHECK((lhs + rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
    // eigenbasis columns really are +-1 eigenvectors
    CHECK(max_abs_diff(qs.q * qs.v_plus, qs.v_plus) < 1e-12);
    CHECK(max_abs_diff(qs.q * qs.v_minus, Matrix(-qs.v_minus)) < 1e-12);
}

TEST_CASE("q_split validates its preconditions") {
    const AntiUnitaryOp c_plus = particle_hole_op(2);  // C^2 = +1
    const AntiUnitaryOp t_minus(symplectic(4));        // T^2 = -1
    CHECK_NOTHROW(q_split(c_plus, t_minus));
    CHECK_THROWS_AS(q_split(t_minus, t_minus), AlgebraViolation);  // C^2 = -1
    CHECK_THROWS_AS(q_split(c_plus, c_plus), AlgebraViolation);    // T^2 = +1
}

TEST_SUITE_END();
