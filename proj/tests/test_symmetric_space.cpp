#include <doctest.h>

#include "test_helpers.hpp"

#include "tenfold/symmetric_space.hpp"

using namespace tenfold;
using namespace tenfold::testing;

namespace {

EnsembleSpec space_spec(SymmetryClass cls, std::uint64_t stream) {
    EnsembleSpec spec;
    spec.cls = cls;
    spec.seed = 2025;
    spec.stream_id = stream;
    if (is_chiral(cls)) {
        spec.p = 3;
        spec.q = 2;
    } else {
        spec.n = (cls == SymmetryClass::DIII) ? 8 : 6;
    }
    return spec;
}

}  // namespace

TEST_SUITE_BEGIN("symmetric_space");

TEST_CASE("time_evolution acts by phases on eigenvectors") {
    RngStream rng(61, 0);
    const Matrix h = random_hermitian(rng, 8);
    const EigResult eig = hermitian_eig(h);
    const double t = 0.83;
    const Matrix u = time_evolution(h, t);
    CHECK(is_unitary(u, 1e-12));
    for (Eigen::Index k = 0; k < 8; ++k) {
        const Vector v = eig.eigenvectors.col(k);
        const Vector expect = std::exp(Complex(0, -t * eig.eigenvalues[k])) * v;
        CHECK((u * v - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("every class's evolutions live in its membership set M") {
    RngStream rng(62, 0);
    for (SymmetryClass cls : all_classes) {
        const EnsembleSpec spec = space_spec(cls, 3);
        const Hamiltonian h = sample(spec);
        const ClassInvolution ci =
            canonical_tau(cls, h.matrix.rows(), spec.p, spec.q);
        for (int k = 0; k < 5; ++k) {
            const double t = 4.0 * (rng.uniform() - 0.5);
            const Matrix u =
                embed_evolution(time_evolution(h.matrix, t), ci);
            CHECK(membership(u, ci.tau, 1e-9));
        }
    }
}

TEST_CASE("type-II classes are flagged as doubled, the rest are not") {
    for (SymmetryClass cls : all_classes) {
        const EnsembleSpec spec = space_spec(cls, 0);
        const Eigen::Index dim = spec.total_dim();
        const ClassInvolution ci = canonical_tau(cls, dim, spec.p, spec.q);
        const bool expect_doubled = cls == SymmetryClass::A ||
                                    cls == SymmetryClass::D ||
                                    cls == SymmetryClass::C;
        CHECK(ci.doubled == expect_doubled);
        if (expect_doubled) {
            const Matrix u = Matrix::Identity(dim, dim);
            CHECK(embed_evolution(u, ci).rows() == 2 * dim);
        }
    }
}

TEST_CASE("cartan_embed lands in M and geodesic inversion preserves it") {
    const EnsembleSpec spec = space_spec(SymmetryClass::AI, 1);
    const ClassInvolution ci = canonical_tau(SymmetryClass::AI, spec.n);
    RngStream rng(63, 0);
    const Matrix k1 = random_unitary(rng, spec.n);
    const Matrix k2 = random_unitary(rng, spec.n);
    const Matrix p0 = cartan_embed(k1, ci.tau);
    const Matrix p1 = cartan_embed(k2, ci.tau);
    CHECK(membership(p0, ci.tau, 1e-10));
    CHECK(membership(p1, ci.tau, 1e-10));
    const Matrix p2 = closure_under_inversion_product(p0, p1, ci.tau);
    CHECK(membership(p2, ci.tau, 1e-8));
}

TEST_CASE("closure_under_inversion_product rejects points outside M") {
    const ClassInvolution ci = canonical_tau(SymmetryClass::AI, 4);
    RngStream rng(64, 0);
    const Matrix good = cartan_embed(random_unitary(rng, 4), ci.tau);
    Matrix bad = random_unitary(rng, 4);
    // a Haar unitary is almost surely not symmetric
    REQUIRE(!membership(bad, ci.tau, 1e-6));
    CHECK_THROWS_AS(closure_under_inversion_product(good, bad, ci.tau), NotInM);
}

TEST_CASE("fixed-point dimensions match the unitary subgroup ranks") {
    // DIII on dim 4N: dim K_tau = (2N)^2; CI on dim 2N: N^2
    CHECK(fixed_point_dimension(SymmetryClass::DIII, 8) == 16);
    CHECK(fixed_point_dimension(SymmetryClass::DIII, 12) == 36);
    CHECK(fixed_point_dimension(SymmetryClass::CI, 4) == 4);
    CHECK(fixed_point_dimension(SymmetryClass::CI, 8) == 16);
    CHECK_THROWS_AS(fixed_point_dimension(SymmetryClass::A, 4), SpecInvalid);
}

TEST_CASE("unitary and anti-unitary involutions apply correctly") {
    RngStream rng(65, 0);
    const Matrix u = random_unitary(rng, 3);
    const Involution conj_inv =
        Involution::antiunitary(AntiUnitaryOp(Matrix::Identity(3, 3)));
    CHECK(max_abs_diff(conj_inv.apply(u), u.conjugate()) < 1e-14);
    Matrix g = Matrix::Identity(3, 3);
    g(2, 2) = -1;
    const Involution unit_inv = Involution::unitary(g);
    CHECK(max_abs_diff(unit_inv.apply(u), g * u * g) < 1e-14);
}

TEST_SUITE_END();
